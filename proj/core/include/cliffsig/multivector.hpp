#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffsig/blade.hpp"
#include "cliffsig/rational.hpp"
#include "cliffsig/signature.hpp"

namespace cliffsig {

// Dense element of Cl(p,q): one exact rational coefficient per blade,
// indexed by blade mask. Immutable value semantics; all operations below
// return fresh values.
class Multivector {
 public:
  explicit Multivector(Signature sig)
      : sig_(std::move(sig)),
        coeffs_(static_cast<size_t>(1) << sig_.dim(), Rational(0)) {}

  static Multivector scalar(const Signature& sig, Rational value);
  static Multivector blade(const Signature& sig, BladeMask mask,
                           Rational coeff = Rational(1));

  const Signature& sig() const { return sig_; }
  int dim() const { return sig_.dim(); }
  size_t size() const { return coeffs_.size(); }

  const Rational& operator[](BladeMask m) const { return coeffs_[m]; }
  void set(BladeMask m, Rational v) { coeffs_[m] = std::move(v); }

  bool is_zero() const;
  bool is_even() const;
  bool is_homogeneous(int grade) const;

  bool operator==(const Multivector&) const = default;

  Multivector operator+(const Multivector& rhs) const;
  Multivector operator-(const Multivector& rhs) const;
  Multivector operator-() const;
  Multivector scaled(const Rational& c) const;

 private:
  Signature sig_;
  std::vector<Rational> coeffs_;
};

inline Multivector operator*(const Rational& c, const Multivector& m) {
  return m.scaled(c);
}

// Clifford product of the shared signature.
Multivector geometric_product(const Multivector& a, const Multivector& b);

// <A>_r : keeps the coefficients of grade r exactly.
Multivector grade_project(const Multivector& a, int r);

// Grade-projected products, bilinear over grade parts:
//   wedge:    <X_k Y_l>_{k+l}
//   contract: <X_k Y_l>_{|k-l|}
Multivector wedge(const Multivector& a, const Multivector& b);
Multivector contract(const Multivector& a, const Multivector& b);

enum class Involution { Reverse, Grade, Conjugate };

// Reverse:   A_k -> (-1)^{k(k-1)/2} A_k
// Grade:     A_k -> (-1)^k A_k
// Conjugate: composition of both.
Multivector involution(const Multivector& a, Involution kind);

// (even, odd) blade split; even + odd == a.
std::pair<Multivector, Multivector> parity_split(const Multivector& a);

// Signed blade sum, e.g. "3/2*e01 - e2"; "0" for the zero element.
std::string render(const Multivector& a);

}  // namespace cliffsig
