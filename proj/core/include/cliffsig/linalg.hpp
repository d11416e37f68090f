#pragma once

#include <vector>

#include "cliffsig/rational.hpp"

namespace cliffsig {

// Dense rational matrix as row vectors. Small sizes only; used for exact
// rank/kernel computations over the 2-form space.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by exact Gauss elimination.
int matrix_rank(RationalMatrix m);

// Basis of the right null space of m (columns = unknowns), each vector
// normalized so its first nonzero entry is 1.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

}  // namespace cliffsig
