#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffsig/multivector.hpp"

namespace cliffsig {

struct TableEntry {
  int sign;  // +1 or -1; blade-pair products of these tables never vanish
  BladeMask mask;

  bool operator==(const TableEntry&) const = default;
};

// Thrown when a morphed blade-pair product fails to be +/- a single blade.
// This signals a broken base table or a sign-convention bug, never a
// recoverable condition.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(BladeMask i, BladeMask j);
  BladeMask lhs, rhs;
};

// Precomputed bilinear product on blades: the base Clifford product of a
// signature, or a vee/tilt morph of another table. Dense up to dimension
// kDensePrecomputeDim, lazy per-pair above. Immutable after construction.
class ProductTable {
 public:
  static ProductTable base(const Signature& sig);

  // Vee product with preserved generator mu: entry (I, J) is
  //   (-1)^{kl} [ J*I - 2 (J . e_mu)(e^mu . I) ]
  // with l = grade(I), k = grade(J), every product and contraction taken
  // in this table, and e^mu = s_mu e_mu for s_mu this table's generator
  // square. Flips every generator square except mu.
  ProductTable vee(int preserved) const;

  // Tilt product: entry (I, J) is (-1)^{kl} * entry(J, I); realizes the
  // opposite algebra and flips every generator square.
  ProductTable tilt() const;

  int dim() const { return n_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<int>& squares() const { return squares_; }

  TableEntry entry(BladeMask I, BladeMask J) const;

  bool operator==(const ProductTable& rhs) const;

 private:
  ProductTable() = default;
  TableEntry compute_entry(BladeMask I, BladeMask J) const;
  void finalize();

  int n_ = 0;
  std::vector<int> squares_;
  std::string provenance_;
  std::vector<TableEntry> dense_;  // empty in lazy mode

  // Lazy backing: either a base signature or a parent table plus step.
  enum class Step { None, Vee, Tilt };
  std::optional<Signature> base_sig_;
  std::shared_ptr<const ProductTable> parent_;
  Step step_ = Step::None;
  int preserved_ = -1;
};

// Bilinear extension of the table to multivectors; operands only need to
// share the table's dimension, not its signature labeling.
Multivector table_product(const ProductTable& t, const Multivector& a,
                          const Multivector& b);

// Grade-|k-l| part of the table product, bilinear over grade parts.
Multivector table_contract(const ProductTable& t, const Multivector& a,
                           const Multivector& b);

// Square of each generator under the table: scalar part of e_mu * e_mu.
std::vector<int> generator_squares(const ProductTable& t);

struct IsomorphismReport {
  bool equal = false;
  std::optional<std::pair<BladeMask, BladeMask>> first_mismatch;
};

// Entry-for-entry comparison under the identity blade map; reports the
// lexicographically first differing pair.
IsomorphismReport verify_isomorphism(const ProductTable& t1,
                                     const ProductTable& t2);

}  // namespace cliffsig
