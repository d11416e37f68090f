#include "cliffsig/product_table.hpp"

#include <stdexcept>

namespace cliffsig {

ClosureError::ClosureError(BladeMask i, BladeMask j)
    : std::runtime_error("closure violation: product of blades " +
                         blade_name(i) + " and " + blade_name(j) +
                         " is not +/- a single blade"),
      lhs(i),
      rhs(j) {}

namespace {

std::vector<int> flip_all_except(const std::vector<int>& squares, int keep) {
  std::vector<int> out = squares;
  for (size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(i) != keep) out[i] = -out[i];
  }
  return out;
}

// Vee entry for the pair (I, J) relative to the given base table.
TableEntry vee_entry(const ProductTable& base, int mu, BladeMask I,
                     BladeMask J) {
  const int l = blade_grade(I);
  const int k = blade_grade(J);
  const int pref = ((k * l) & 1) ? -1 : +1;

  TableEntry t1 = base.entry(J, I);

  // Contractions J.e_mu and e^mu.I; each is the grade-(g-1) part of the
  // table product, so it either survives as a single blade or vanishes.
  // A scalar operand contracts to zero here; anything else would break
  // unitality of the morphed table.
  const BladeMask emu = 1u << mu;
  TableEntry cj = base.entry(J, emu);
  bool cj_live = k >= 1 && blade_grade(cj.mask) == k - 1;
  TableEntry ci = base.entry(emu, I);
  bool ci_live = l >= 1 && blade_grade(ci.mask) == l - 1;

  if (!cj_live || !ci_live) {
    return {pref * t1.sign, t1.mask};
  }

  const int s_mu = base.squares()[static_cast<size_t>(mu)];
  TableEntry t2 = base.entry(cj.mask, ci.mask);
  const int c2 = 2 * s_mu * cj.sign * ci.sign * t2.sign;
  if (t2.mask != t1.mask) throw ClosureError(I, J);
  const int coeff = t1.sign - c2;
  if (coeff != 1 && coeff != -1) throw ClosureError(I, J);
  return {pref * coeff, t1.mask};
}

TableEntry tilt_entry(const ProductTable& base, BladeMask I, BladeMask J) {
  const int pref = ((blade_grade(I) * blade_grade(J)) & 1) ? -1 : +1;
  TableEntry t = base.entry(J, I);
  return {pref * t.sign, t.mask};
}

}  // namespace

TableEntry ProductTable::compute_entry(BladeMask I, BladeMask J) const {
  switch (step_) {
    case Step::None:
      return [&] {
        SignedBlade p = blade_product(*base_sig_, I, J);
        return TableEntry{p.sign, p.mask};
      }();
    case Step::Vee:
      return vee_entry(*parent_, preserved_, I, J);
    case Step::Tilt:
      return tilt_entry(*parent_, I, J);
  }
  throw std::logic_error("unreachable");
}

void ProductTable::finalize() {
  if (n_ <= kDensePrecomputeDim) {
    const size_t blades = static_cast<size_t>(1) << n_;
    dense_.resize(blades * blades);
    for (BladeMask i = 0; i < blades; ++i) {
      for (BladeMask j = 0; j < blades; ++j) {
        dense_[(static_cast<size_t>(i) << n_) | j] = compute_entry(i, j);
      }
    }
    // Dense tables no longer need their construction chain.
    parent_.reset();
  }
  // Unitality sanity check.
  const BladeMask full = (1u << n_) - 1u;
  for (BladeMask i : {BladeMask(0), full}) {
    TableEntry left = entry(0, i);
    TableEntry right = entry(i, 0);
    if (left.sign != 1 || left.mask != i || right.sign != 1 ||
        right.mask != i) {
      throw std::logic_error("product table is not unital");
    }
  }
}

ProductTable ProductTable::base(const Signature& sig) {
  ProductTable t;
  t.n_ = sig.dim();
  t.squares_ = sig.squares;
  t.provenance_ = "base" + squares_string(sig.squares);
  t.base_sig_ = sig;
  t.step_ = Step::None;
  t.finalize();
  return t;
}

ProductTable ProductTable::vee(int preserved) const {
  if (preserved < 0 || preserved >= n_) {
    throw std::invalid_argument("preserved generator index out of range");
  }
  ProductTable t;
  t.n_ = n_;
  t.squares_ = flip_all_except(squares_, preserved);
  t.provenance_ = provenance_ + ";vee(" + std::to_string(preserved) + ")";
  t.parent_ = std::make_shared<ProductTable>(*this);
  t.step_ = Step::Vee;
  t.preserved_ = preserved;
  t.finalize();
  return t;
}

ProductTable ProductTable::tilt() const {
  ProductTable t;
  t.n_ = n_;
  t.squares_ = flip_all_except(squares_, -1);
  t.provenance_ = provenance_ + ";tilt";
  t.parent_ = std::make_shared<ProductTable>(*this);
  t.step_ = Step::Tilt;
  t.finalize();
  return t;
}

TableEntry ProductTable::entry(BladeMask I, BladeMask J) const {
  const BladeMask all = (1u << n_) - 1u;
  if ((I & ~all) != 0 || (J & ~all) != 0) {
    throw std::invalid_argument("blade mask out of range for table");
  }
  if (!dense_.empty()) {
    return dense_[(static_cast<size_t>(I) << n_) | J];
  }
  return compute_entry(I, J);
}

bool ProductTable::operator==(const ProductTable& rhs) const {
  return verify_isomorphism(*this, rhs).equal;
}

Multivector table_product(const ProductTable& t, const Multivector& a,
                          const Multivector& b) {
  if (a.dim() != t.dim() || b.dim() != t.dim()) {
    throw std::invalid_argument("dimension mismatch with product table");
  }
  Multivector out(a.sig());
  for (BladeMask i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BladeMask j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      TableEntry e = t.entry(i, j);
      Rational term = a[i] * b[j];
      if (e.sign < 0) term = -term;
      out.set(e.mask, out[e.mask] + term);
    }
  }
  return out;
}

Multivector table_contract(const ProductTable& t, const Multivector& a,
                           const Multivector& b) {
  if (a.dim() != t.dim() || b.dim() != t.dim()) {
    throw std::invalid_argument("dimension mismatch with product table");
  }
  Multivector out(a.sig());
  for (BladeMask i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BladeMask j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      TableEntry e = t.entry(i, j);
      int k = blade_grade(i), l = blade_grade(j);
      if (blade_grade(e.mask) != (k > l ? k - l : l - k)) continue;
      Rational term = a[i] * b[j];
      if (e.sign < 0) term = -term;
      out.set(e.mask, out[e.mask] + term);
    }
  }
  return out;
}

std::vector<int> generator_squares(const ProductTable& t) {
  std::vector<int> out(static_cast<size_t>(t.dim()));
  for (int mu = 0; mu < t.dim(); ++mu) {
    TableEntry e = t.entry(1u << mu, 1u << mu);
    if (e.mask != 0) {
      throw std::logic_error("generator square is not a scalar");
    }
    out[static_cast<size_t>(mu)] = e.sign;
  }
  return out;
}

IsomorphismReport verify_isomorphism(const ProductTable& t1,
                                     const ProductTable& t2) {
  if (t1.dim() != t2.dim()) {
    throw std::invalid_argument("dimension mismatch between tables");
  }
  const BladeMask blades = 1u << t1.dim();
  for (BladeMask i = 0; i < blades; ++i) {
    for (BladeMask j = 0; j < blades; ++j) {
      if (t1.entry(i, j) != t2.entry(i, j)) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace cliffsig
