#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsig/signature.hpp"

namespace cliffsig {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample on failure, summary on success
};

struct VerifyOptions {
  Signature sig = make_signature(4, 0);
  int preserve = 0;
  std::uint64_t seed = 0;
};

// The full invariant suite: simulation isomorphisms, tilt/opposite,
// involutivity, associativity, structure preservation, planner soundness,
// wave identities, Dirac-system recoding, Hodge/parity identities,
// d/codifferential identities, and self-duality ranks. Deterministic for a
// fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace cliffsig
