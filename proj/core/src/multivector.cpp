#include "cliffsig/multivector.hpp"

#include <stdexcept>

namespace cliffsig {

namespace {

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.sig() != b.sig()) {
    throw std::invalid_argument("signature mismatch between operands");
  }
}

}  // namespace

Multivector Multivector::scalar(const Signature& sig, Rational value) {
  Multivector m(sig);
  m.set(0, std::move(value));
  return m;
}

Multivector Multivector::blade(const Signature& sig, BladeMask mask,
                               Rational coeff) {
  const BladeMask all = (1u << sig.dim()) - 1u;
  if ((mask & ~all) != 0) {
    throw std::invalid_argument("blade mask out of range for signature");
  }
  Multivector m(sig);
  m.set(mask, std::move(coeff));
  return m;
}

bool Multivector::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Multivector::is_even() const {
  for (BladeMask m = 0; m < coeffs_.size(); ++m) {
    if ((blade_grade(m) & 1) && coeffs_[m] != 0) return false;
  }
  return true;
}

bool Multivector::is_homogeneous(int grade) const {
  for (BladeMask m = 0; m < coeffs_.size(); ++m) {
    if (blade_grade(m) != grade && coeffs_[m] != 0) return false;
  }
  return true;
}

Multivector Multivector::operator+(const Multivector& rhs) const {
  require_same_signature(*this, rhs);
  Multivector out(sig_);
  for (BladeMask m = 0; m < coeffs_.size(); ++m) {
    out.set(m, coeffs_[m] + rhs.coeffs_[m]);
  }
  return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
  require_same_signature(*this, rhs);
  Multivector out(sig_);
  for (BladeMask m = 0; m < coeffs_.size(); ++m) {
    out.set(m, coeffs_[m] - rhs.coeffs_[m]);
  }
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (BladeMask m = 0; m < coeffs_.size(); ++m) out.set(m, -coeffs_[m]);
  return out;
}

Multivector Multivector::scaled(const Rational& c) const {
  Multivector out(sig_);
  for (BladeMask m = 0; m < coeffs_.size(); ++m) out.set(m, c * coeffs_[m]);
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  Multivector out(a.sig());
  for (BladeMask i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BladeMask j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      SignedBlade p = blade_product(a.sig(), i, j);
      Rational term = a[i] * b[j];
      if (p.sign < 0) term = -term;
      out.set(p.mask, out[p.mask] + term);
    }
  }
  return out;
}

Multivector grade_project(const Multivector& a, int r) {
  if (r < 0 || r > a.dim()) {
    throw std::invalid_argument("grade out of range");
  }
  Multivector out(a.sig());
  for (BladeMask m = 0; m < a.size(); ++m) {
    if (blade_grade(m) == r) out.set(m, a[m]);
  }
  return out;
}

namespace {

// Common core of wedge/contract: keep only the blade-pair products whose
// result grade matches target(k, l).
template <typename GradeRule>
Multivector graded_product(const Multivector& a, const Multivector& b,
                           GradeRule target) {
  require_same_signature(a, b);
  Multivector out(a.sig());
  for (BladeMask i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BladeMask j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      SignedBlade p = blade_product(a.sig(), i, j);
      if (blade_grade(p.mask) != target(blade_grade(i), blade_grade(j)))
        continue;
      Rational term = a[i] * b[j];
      if (p.sign < 0) term = -term;
      out.set(p.mask, out[p.mask] + term);
    }
  }
  return out;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int k, int l) { return k + l; });
}

Multivector contract(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int k, int l) { return k > l ? k - l : l - k; });
}

Multivector involution(const Multivector& a, Involution kind) {
  Multivector out(a.sig());
  for (BladeMask m = 0; m < a.size(); ++m) {
    int k = blade_grade(m);
    int sign = 1;
    if (kind == Involution::Reverse || kind == Involution::Conjugate) {
      if (((k * (k - 1) / 2) & 1) != 0) sign = -sign;
    }
    if (kind == Involution::Grade || kind == Involution::Conjugate) {
      if (k & 1) sign = -sign;
    }
    out.set(m, sign < 0 ? -a[m] : a[m]);
  }
  return out;
}

std::pair<Multivector, Multivector> parity_split(const Multivector& a) {
  Multivector even(a.sig());
  Multivector odd(a.sig());
  for (BladeMask m = 0; m < a.size(); ++m) {
    if (blade_grade(m) & 1) {
      odd.set(m, a[m]);
    } else {
      even.set(m, a[m]);
    }
  }
  return {even, odd};
}

std::string render(const Multivector& a) {
  std::string out;
  for (BladeMask m = 0; m < a.size(); ++m) {
    const Rational& c = a[m];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (m == 0) {
      out += rational_to_string(abs_c);
    } else if (abs_c == 1) {
      // "-e01" would not re-parse; keep the explicit unit coefficient
      // only when it leads the expression with a minus.
      if (out == "-") {
        out += "1*" + blade_name(m);
      } else {
        out += blade_name(m);
      }
    } else {
      out += rational_to_string(abs_c) + "*" + blade_name(m);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace cliffsig
