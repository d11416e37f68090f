#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "cliffsig/signature.hpp"

namespace cliffsig {

// A basis blade is the product of distinct generators in increasing index
// order, encoded as a bitmask: bit mu set iff e_mu occurs. Mask 0 is the
// scalar unit, the full mask is the volume element.
using BladeMask = std::uint32_t;

struct SignedBlade {
  int sign;  // +1 or -1
  BladeMask mask;

  bool operator==(const SignedBlade&) const = default;
};

inline int blade_grade(BladeMask m) { return std::popcount(m); }

// Clifford product of two basis blades under a diagonal metric.
// Result mask is I xor J; the sign counts the transpositions needed to
// sort the concatenated generator list and picks up squares[mu] for every
// generator mu common to both blades.
SignedBlade blade_product(const Signature& sig, BladeMask I, BladeMask J);

// "1" for the scalar, "e013" style otherwise.
std::string blade_name(BladeMask m);

}  // namespace cliffsig
