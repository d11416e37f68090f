#include "cliffsig/blade.hpp"

#include <stdexcept>

namespace cliffsig {

SignedBlade blade_product(const Signature& sig, BladeMask I, BladeMask J) {
  const BladeMask all = (1u << sig.dim()) - 1u;
  if ((I & ~all) != 0 || (J & ~all) != 0) {
    throw std::invalid_argument("blade mask out of range for signature");
  }
  // Every generator of I that sits above a generator j of J must cross it
  // when the concatenated list is sorted.
  int swaps = 0;
  for (int j = 0; j < sig.dim(); ++j) {
    if (J & (1u << j)) {
      swaps += std::popcount(I & ~((2u << j) - 1u));
    }
  }
  int sign = (swaps & 1) ? -1 : +1;
  BladeMask common = I & J;
  for (int mu = 0; mu < sig.dim(); ++mu) {
    if (common & (1u << mu)) sign *= sig.squares[static_cast<size_t>(mu)];
  }
  return {sign, I ^ J};
}

std::string blade_name(BladeMask m) {
  if (m == 0) return "1";
  std::string out = "e";
  for (int i = 0; i < 32; ++i) {
    if (m & (1u << i)) out += std::to_string(i);
  }
  return out;
}

}  // namespace cliffsig
