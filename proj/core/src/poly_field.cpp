#include "cliffsig/poly_field.hpp"

#include <stdexcept>

namespace cliffsig {

PolyField PolyField::constant(const Multivector& value) {
  PolyField f(value.sig());
  f.add_term(Exponents(static_cast<size_t>(value.dim()), 0), value);
  return f;
}

PolyField PolyField::monomial(Exponents exps, const Multivector& value) {
  if (exps.size() != static_cast<size_t>(value.dim())) {
    throw std::invalid_argument("exponent vector length must equal dimension");
  }
  PolyField f(value.sig());
  f.add_term(exps, value);
  return f;
}

PolyField PolyField::coordinate(const Signature& sig, int mu) {
  if (mu < 0 || mu >= sig.dim()) {
    throw std::invalid_argument("coordinate index out of range");
  }
  Exponents e(static_cast<size_t>(sig.dim()), 0);
  e[static_cast<size_t>(mu)] = 1;
  return monomial(e, Multivector::scalar(sig, 1));
}

bool PolyField::is_even() const {
  for (const auto& [exps, mv] : terms_) {
    if (!mv.is_even()) return false;
  }
  return true;
}

void PolyField::add_term(const Exponents& exps, const Multivector& value) {
  if (exps.size() != static_cast<size_t>(sig_.dim())) {
    throw std::invalid_argument("exponent vector length must equal dimension");
  }
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (!value.is_zero()) terms_.emplace(exps, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyField PolyField::operator+(const PolyField& rhs) const {
  if (sig_ != rhs.sig_) throw std::invalid_argument("signature mismatch");
  PolyField out = *this;
  for (const auto& [exps, mv] : rhs.terms_) out.add_term(exps, mv);
  return out;
}

PolyField PolyField::operator-(const PolyField& rhs) const {
  if (sig_ != rhs.sig_) throw std::invalid_argument("signature mismatch");
  PolyField out = *this;
  for (const auto& [exps, mv] : rhs.terms_) out.add_term(exps, -mv);
  return out;
}

PolyField PolyField::operator-() const { return scaled(Rational(-1)); }

PolyField PolyField::scaled(const Rational& c) const {
  PolyField out(sig_);
  if (c == 0) return out;
  for (const auto& [exps, mv] : terms_) out.add_term(exps, mv.scaled(c));
  return out;
}

PolyField PolyField::derivative(int mu) const {
  if (mu < 0 || mu >= sig_.dim()) {
    throw std::invalid_argument("derivative index out of range");
  }
  PolyField out(sig_);
  for (const auto& [exps, mv] : terms_) {
    unsigned d = exps[static_cast<size_t>(mu)];
    if (d == 0) continue;
    Exponents lowered = exps;
    --lowered[static_cast<size_t>(mu)];
    out.add_term(lowered, mv.scaled(Rational(d)));
  }
  return out;
}

Multivector PolyField::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<size_t>(sig_.dim())) {
    throw std::invalid_argument("point dimension mismatch");
  }
  Multivector out(sig_);
  for (const auto& [exps, mv] : terms_) {
    Rational mono(1);
    for (size_t i = 0; i < exps.size(); ++i) {
      for (unsigned d = 0; d < exps[i]; ++d) mono *= point[i];
    }
    out = out + mv.scaled(mono);
  }
  return out;
}

PolyField PolyField::map(
    const std::function<Multivector(const Multivector&)>& fn) const {
  PolyField out(sig_);
  for (const auto& [exps, mv] : terms_) out.add_term(exps, fn(mv));
  return out;
}

PolyField PolyField::blade_component(BladeMask mask) const {
  PolyField out(sig_);
  for (const auto& [exps, mv] : terms_) {
    out.add_term(exps, Multivector::scalar(sig_, mv[mask]));
  }
  return out;
}

PolyField field_product(const ProductTable& t, const PolyField& a,
                        const PolyField& b) {
  if (a.dim() != t.dim() || b.dim() != t.dim()) {
    throw std::invalid_argument("dimension mismatch with product table");
  }
  PolyField out(a.sig());
  for (const auto& [ea, ma] : a.terms()) {
    for (const auto& [eb, mb] : b.terms()) {
      PolyField::Exponents sum = ea;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += eb[i];
      out.add_term(sum, table_product(t, ma, mb));
    }
  }
  return out;
}

PolyField field_product(const ProductTable& t, const Multivector& a,
                        const PolyField& b) {
  return field_product(t, PolyField::constant(a), b);
}

PolyField field_product(const ProductTable& t, const PolyField& a,
                        const Multivector& b) {
  return field_product(t, a, PolyField::constant(b));
}

}  // namespace cliffsig
