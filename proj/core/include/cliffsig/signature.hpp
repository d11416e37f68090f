#pragma once

#include <string>
#include <vector>

namespace cliffsig {

// Hard upper bound on the dimension; above 8 product tables switch to
// lazy per-pair evaluation instead of dense precomputation.
inline constexpr int kAbsoluteMaxDim = 12;
inline constexpr int kDensePrecomputeDim = 8;

// Runtime-configurable dimension limit (default 8, at most kAbsoluteMaxDim).
int max_dimension();
void set_max_dimension(int n);

// Diagonal metric of Cl(p,q): one entry per generator, each +1 or -1.
// Entry mu is the square of generator e_mu.
struct Signature {
  std::vector<int> squares;

  int dim() const { return static_cast<int>(squares.size()); }
  int count_plus() const;
  int count_minus() const;

  bool operator==(const Signature&) const = default;
};

// Canonical Cl(p,q): p entries of +1 followed by q entries of -1.
// Throws std::invalid_argument when p+q = 0 or p+q > max_dimension().
Signature make_signature(int p, int q);

// Signature with an explicit square pattern; entries must be +1 or -1.
Signature signature_from_squares(std::vector<int> squares);

// "(+---)" style rendering of the square pattern.
std::string squares_string(const std::vector<int>& squares);
std::string signature_name(const Signature& sig);

}  // namespace cliffsig
