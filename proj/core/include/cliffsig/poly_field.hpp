#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cliffsig/multivector.hpp"
#include "cliffsig/product_table.hpp"

namespace cliffsig {

// Multivector field with multivariate-polynomial coefficients in the
// coordinates x_0 .. x_{n-1}:
//   Phi(x) = sum over d of x_0^{d_0} ... x_{n-1}^{d_{n-1}} * M_d.
// Only nonzero terms are stored; exponent vectors have length n.
class PolyField {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Multivector>;

  explicit PolyField(Signature sig) : sig_(std::move(sig)) {}

  static PolyField constant(const Multivector& value);
  static PolyField monomial(Exponents exps, const Multivector& value);
  // The coordinate function x_mu as a scalar-valued field.
  static PolyField coordinate(const Signature& sig, int mu);

  const Signature& sig() const { return sig_; }
  int dim() const { return sig_.dim(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;

  void add_term(const Exponents& exps, const Multivector& value);

  PolyField operator+(const PolyField& rhs) const;
  PolyField operator-(const PolyField& rhs) const;
  PolyField operator-() const;
  PolyField scaled(const Rational& c) const;

  bool operator==(const PolyField&) const = default;

  // Exact formal partial derivative with respect to x_mu.
  PolyField derivative(int mu) const;

  Multivector evaluate(const std::vector<Rational>& point) const;

  // Applies fn to every multivector coefficient (fn must be linear for the
  // result to stay a faithful field operation).
  PolyField map(const std::function<Multivector(const Multivector&)>& fn) const;

  // The scalar field given by one blade coefficient of this field.
  PolyField blade_component(BladeMask mask) const;

 private:
  Signature sig_;
  TermMap terms_;
};

// Bilinear table product of two fields; polynomial exponents add.
PolyField field_product(const ProductTable& t, const PolyField& a,
                        const PolyField& b);
PolyField field_product(const ProductTable& t, const Multivector& a,
                        const PolyField& b);
PolyField field_product(const ProductTable& t, const PolyField& a,
                        const Multivector& b);

}  // namespace cliffsig
