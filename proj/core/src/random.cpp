#include "cliffsig/random.hpp"

namespace cliffsig {

Multivector random_multivector(const Signature& sig, Rng& rng) {
  Multivector m(sig);
  for (BladeMask b = 0; b < m.size(); ++b) {
    m.set(b, rng.small_rational());
  }
  return m;
}

Multivector random_vector(const Signature& sig, Rng& rng) {
  Multivector m(sig);
  for (int mu = 0; mu < sig.dim(); ++mu) {
    m.set(1u << mu, rng.small_rational());
  }
  return m;
}

Multivector random_homogeneous(const Signature& sig, int grade, Rng& rng) {
  Multivector m(sig);
  for (BladeMask b = 0; b < m.size(); ++b) {
    if (blade_grade(b) == grade) m.set(b, rng.small_rational());
  }
  return m;
}

namespace {

PolyField::Exponents random_exponents(const Signature& sig, int max_degree,
                                      Rng& rng) {
  PolyField::Exponents e(static_cast<size_t>(sig.dim()), 0);
  int degree = static_cast<int>(rng.next(static_cast<std::uint64_t>(max_degree) + 1));
  for (int d = 0; d < degree; ++d) {
    ++e[rng.next(static_cast<std::uint64_t>(sig.dim()))];
  }
  return e;
}

template <typename CoeffGen>
PolyField random_field_impl(const Signature& sig, int max_degree, Rng& rng,
                            CoeffGen gen) {
  PolyField f(sig);
  const int terms = 2 + static_cast<int>(rng.next(3));
  for (int t = 0; t < terms; ++t) {
    f.add_term(random_exponents(sig, max_degree, rng), gen());
  }
  return f;
}

}  // namespace

PolyField random_field(const Signature& sig, int max_degree, Rng& rng) {
  return random_field_impl(sig, max_degree, rng,
                           [&] { return random_multivector(sig, rng); });
}

PolyField random_even_field(const Signature& sig, int max_degree, Rng& rng) {
  return random_field_impl(sig, max_degree, rng, [&] {
    return parity_split(random_multivector(sig, rng)).first;
  });
}

PolyField random_two_form_field(const Signature& sig, int max_degree,
                                Rng& rng) {
  return random_field_impl(sig, max_degree, rng,
                           [&] { return random_homogeneous(sig, 2, rng); });
}

}  // namespace cliffsig
