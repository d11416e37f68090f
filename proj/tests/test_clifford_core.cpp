#include <doctest.h>

#include "cliffsig/multivector.hpp"
#include "cliffsig/random.hpp"
#include "oracle.hpp"

using namespace cliffsig;

namespace {

Multivector mv_blade(const Signature& sig, BladeMask m, int c = 1) {
  return Multivector::blade(sig, m, Rational(c));
}

}  // namespace

TEST_CASE("make_signature") {
  CHECK(make_signature(1, 3).squares == std::vector<int>{+1, -1, -1, -1});
  CHECK(make_signature(4, 0).squares == std::vector<int>{+1, +1, +1, +1});
  CHECK(make_signature(0, 1).squares == std::vector<int>{-1});
  CHECK_THROWS_AS(make_signature(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(signature_from_squares({1, 2}), std::invalid_argument);
}

TEST_CASE("blade_product matches the sort-and-cancel oracle exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig = make_signature(p, n - p);
      const BladeMask blades = 1u << n;
      for (BladeMask i = 0; i < blades; ++i) {
        for (BladeMask j = 0; j < blades; ++j) {
          SignedBlade got = blade_product(sig, i, j);
          oracle::Blade want = oracle::product(oracle::mask_to_indices(i),
                                               oracle::mask_to_indices(j),
                                               sig.squares);
          CHECK(got.sign == want.sign);
          CHECK(got.mask == oracle::indices_to_mask(want.indices));
        }
      }
    }
  }
}

TEST_CASE("blade_product spot values") {
  Signature e3 = make_signature(3, 0);
  CHECK(blade_product(e3, 0x1 << 1, 0x1 << 2) == SignedBlade{+1, 0x6});
  Signature m = make_signature(1, 3);
  CHECK(blade_product(m, 0x2, 0x2) == SignedBlade{-1, 0x0});
  Signature e4 = make_signature(4, 0);
  CHECK(blade_product(e4, 0x3, 0x5) == SignedBlade{-1, 0x6});
}

TEST_CASE("geometric product") {
  Signature e4 = make_signature(4, 0);
  Multivector u = mv_blade(e4, 0x1) + mv_blade(e4, 0x2);
  Multivector w = mv_blade(e4, 0x1) - mv_blade(e4, 0x2);
  CHECK((geometric_product(u, w) + geometric_product(w, u)).is_zero());

  Rng rng(1);
  Multivector a = random_multivector(e4, rng);
  CHECK(geometric_product(Multivector::scalar(e4, 1), a) == a);
  CHECK(geometric_product(a, Multivector::scalar(e4, 1)) == a);

  Signature m = make_signature(1, 3);
  CHECK(geometric_product(mv_blade(m, 0x3), mv_blade(m, 0x7)) ==
        mv_blade(m, 0x4));
}

TEST_CASE("grade projection") {
  Signature e3 = make_signature(3, 0);
  Multivector a =
      Multivector::scalar(e3, 1) + mv_blade(e3, 0x2) + mv_blade(e3, 0x3);
  CHECK(grade_project(a, 1) == mv_blade(e3, 0x2));
  CHECK_THROWS_AS(grade_project(a, 4), std::invalid_argument);

  Rng rng(2);
  Multivector r = random_multivector(e3, rng);
  Multivector sum(e3);
  for (int k = 0; k <= 3; ++k) sum = sum + grade_project(r, k);
  CHECK(sum == r);
  for (int k = 0; k <= 3; ++k) {
    CHECK(grade_project(grade_project(r, k), k) == grade_project(r, k));
    for (int l = 0; l <= 3; ++l) {
      if (l != k) CHECK(grade_project(grade_project(r, k), l).is_zero());
    }
  }

  Signature m = make_signature(1, 3);
  CHECK(grade_project(mv_blade(m, 0xF), 4) == mv_blade(m, 0xF));
}

TEST_CASE("wedge and contraction") {
  Signature e4 = make_signature(4, 0);
  CHECK(wedge(mv_blade(e4, 0x2), mv_blade(e4, 0x4)) == mv_blade(e4, 0x6));
  CHECK(wedge(mv_blade(e4, 0x2), mv_blade(e4, 0x2)).is_zero());
  CHECK(contract(mv_blade(e4, 0x1), mv_blade(e4, 0x3)) == mv_blade(e4, 0x2));
  CHECK(contract(mv_blade(e4, 0x5), mv_blade(e4, 0x1)) ==
        mv_blade(e4, 0x4, -1));

  // A scalar operand contracts by plain scalar multiplication.
  CHECK(contract(Multivector::scalar(e4, 3), mv_blade(e4, 0x3)) ==
        mv_blade(e4, 0x3, 3));
  CHECK(contract(mv_blade(e4, 0x3), Multivector::scalar(e4, 3)) ==
        mv_blade(e4, 0x3, 3));

  // a ^ B = (aB + (-1)^r Ba)/2 and a . B = (aB - (-1)^r Ba)/2 for a vector
  // and homogeneous B of grade r >= 1 (the scalar-contraction convention
  // above deliberately breaks the r = 0 case).
  Rng rng(3);
  for (int r = 1; r <= 4; ++r) {
    Multivector a = random_vector(e4, rng);
    Multivector b = random_homogeneous(e4, r, rng);
    Multivector ab = geometric_product(a, b);
    Multivector ba = geometric_product(b, a).scaled(Rational(r % 2 ? -1 : 1));
    CHECK(wedge(a, b) == (ab + ba).scaled(Rational(1, 2)));
    CHECK(contract(a, b) == (ab - ba).scaled(Rational(1, 2)));
  }
}

TEST_CASE("decomposition aB = a.B + a^B") {
  Rng rng(4);
  for (int p = 0; p <= 4; ++p) {
    Signature sig = make_signature(p, 4 - p);
    for (int trial = 0; trial < 25; ++trial) {
      Multivector a = random_vector(sig, rng);
      // Grade >= 1: scalar contraction is scalar multiplication, which
      // double-counts the scalar term in this identity.
      Multivector b =
          random_homogeneous(sig, 1 + static_cast<int>(rng.next(4)), rng);
      CHECK(geometric_product(a, b) == contract(a, b) + wedge(a, b));
    }
  }
}

TEST_CASE("involutions") {
  Signature m = make_signature(1, 3);
  CHECK(involution(mv_blade(m, 0xF), Involution::Reverse) == mv_blade(m, 0xF));
  CHECK(involution(mv_blade(m, 0x2), Involution::Grade) ==
        mv_blade(m, 0x2, -1));

  Rng rng(5);
  Multivector f = random_homogeneous(m, 2, rng);
  CHECK(involution(f, Involution::Conjugate) == -f);

  Multivector a = random_multivector(m, rng);
  Multivector b = random_multivector(m, rng);
  CHECK(involution(geometric_product(a, b), Involution::Reverse) ==
        geometric_product(involution(b, Involution::Reverse),
                          involution(a, Involution::Reverse)));
  CHECK(involution(geometric_product(a, b), Involution::Grade) ==
        geometric_product(involution(a, Involution::Grade),
                          involution(b, Involution::Grade)));
  CHECK(involution(involution(a, Involution::Reverse), Involution::Grade) ==
        involution(involution(a, Involution::Grade), Involution::Reverse));
}

TEST_CASE("parity split") {
  Signature e3 = make_signature(3, 0);
  Multivector a =
      Multivector::scalar(e3, 1) + mv_blade(e3, 0x2) + mv_blade(e3, 0x3);
  auto [even, odd] = parity_split(a);
  CHECK(even == Multivector::scalar(e3, 1) + mv_blade(e3, 0x3));
  CHECK(odd == mv_blade(e3, 0x2));

  // Even part of the Cl(3,0) basis is spanned by 1, e12, e13, e23.
  for (BladeMask b = 0; b < 8; ++b) {
    bool in_even = b == 0x0 || b == 0x3 || b == 0x5 || b == 0x6;
    CHECK(parity_split(mv_blade(e3, b)).second.is_zero() == in_even);
  }

  Rng rng(6);
  Multivector r = random_multivector(e3, rng);
  CHECK(parity_split(r).first + parity_split(r).second == r);
  Multivector hat = involution(r, Involution::Grade);
  CHECK(parity_split(hat).first == parity_split(r).first);
  CHECK(parity_split(hat).second == -parity_split(r).second);
}

TEST_CASE("anticommutation relation, exhaustive for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig = make_signature(p, n - p);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Multivector ei = mv_blade(sig, 1u << i);
          Multivector ej = mv_blade(sig, 1u << j);
          Rational g =
              i == j ? Rational(sig.squares[static_cast<size_t>(i)]) : 0;
          CHECK(geometric_product(ei, ej) + geometric_product(ej, ei) ==
                Multivector::scalar(sig, 2 * g));
        }
      }
    }
  }
}

TEST_CASE("associativity of the geometric product") {
  Rng rng(7);
  for (int p = 0; p <= 4; ++p) {
    Signature sig = make_signature(p, 4 - p);
    for (int trial = 0; trial < 100; ++trial) {
      Multivector a = random_multivector(sig, rng);
      Multivector b = random_multivector(sig, rng);
      Multivector c = random_multivector(sig, rng);
      CHECK(geometric_product(geometric_product(a, b), c) ==
            geometric_product(a, geometric_product(b, c)));
    }
  }
}

TEST_CASE("even subalgebra closure") {
  Rng rng(8);
  Signature m = make_signature(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Multivector a = parity_split(random_multivector(m, rng)).first;
    Multivector b = parity_split(random_multivector(m, rng)).first;
    CHECK(geometric_product(a, b).is_even());
  }
}

TEST_CASE("dimension limit is configurable") {
  CHECK(max_dimension() == 8);
  CHECK_THROWS_AS(make_signature(9, 0), std::invalid_argument);
  set_max_dimension(10);
  Signature big = make_signature(9, 1);
  CHECK(blade_product(big, 1u << 9, 1u << 9) == SignedBlade{-1, 0x0});
  set_max_dimension(8);
  CHECK_THROWS_AS(set_max_dimension(13), std::invalid_argument);
}

TEST_CASE("rendering") {
  Signature e4 = make_signature(4, 0);
  CHECK(render(Multivector(e4)) == "0");
  CHECK(render(Multivector::scalar(e4, Rational(3, 2))) == "3/2");
  CHECK(render(mv_blade(e4, 0x3, 1) - mv_blade(e4, 0x4)).find("e01") !=
        std::string::npos);
}
