#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffsig/field_ops.hpp"

namespace cliffsig {

// One summand of a scalar linear PDE: coefficient times the unknown of
// `source` under a derivative, the mass, or one potential component.
struct SystemTerm {
  enum class Kind { Derivative, Mass, Charge };

  Rational coeff;
  BladeMask source;
  Kind kind = Kind::Derivative;
  int index = -1;  // mu for Derivative, nu for Charge

  bool operator==(const SystemTerm&) const = default;
  // Canonical order: by source blade, then kind, then index.
  bool operator<(const SystemTerm& o) const;
};

// One scalar equation per output blade; term lists are canonically sorted
// so equality is decidable syntactically.
struct ComponentSystem {
  std::map<BladeMask, std::vector<SystemTerm>> equations;

  bool operator==(const ComponentSystem&) const = default;
};

// Symbolic expansion of dh_residual for a generic psi = sum of unknown
// scalar functions times the given blades. Mass and charge stay symbolic
// markers; charge terms are emitted only when with_potential is set.
ComponentSystem component_system(const DiracContext& ctx, DhForm form,
                                 const std::vector<BladeMask>& basis,
                                 bool with_potential = false);

// Diagonal +/-1 recoding of the unknown components per source blade.
using Recoding = std::map<BladeMask, int>;

// Searches the diagonal recodings (plus a free overall sign per equation)
// that make the two systems syntactically identical. The first basis blade
// is gauge-fixed to +1. Absence of a recoding is a legitimate negative
// result, reported as nullopt.
std::optional<Recoding> find_recoding(const ComponentSystem& s1,
                                      const ComponentSystem& s2,
                                      const std::vector<BladeMask>& basis);

// Applies the sign vector to a field's blade coefficients.
PolyField apply_recoding(const PolyField& psi, const Recoding& recoding);

std::string render(const ComponentSystem& s);

}  // namespace cliffsig
