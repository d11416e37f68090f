#pragma once

#include <cstdint>
#include <random>

#include "cliffsig/multivector.hpp"
#include "cliffsig/poly_field.hpp"

namespace cliffsig {

// Deterministic generator for property runs. Draws go through modulo
// reduction, not std::uniform_int_distribution, so byte-identical output
// does not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

  // Uniform small integer in [-9, 9].
  int small_int() { return static_cast<int>(next(19)) - 9; }

  // Small rational with denominator in {1, 2, 3}.
  Rational small_rational() {
    return Rational(small_int(), static_cast<int>(next(3)) + 1);
  }

 private:
  std::mt19937_64 engine_;
};

Multivector random_multivector(const Signature& sig, Rng& rng);
Multivector random_vector(const Signature& sig, Rng& rng);
Multivector random_homogeneous(const Signature& sig, int grade, Rng& rng);

// Polynomial field of total degree <= max_degree with a few random terms.
PolyField random_field(const Signature& sig, int max_degree, Rng& rng);
// Same, restricted to even-grade coefficients.
PolyField random_even_field(const Signature& sig, int max_degree, Rng& rng);
// Same, restricted to grade-2 coefficients.
PolyField random_two_form_field(const Signature& sig, int max_degree,
                                Rng& rng);

}  // namespace cliffsig
