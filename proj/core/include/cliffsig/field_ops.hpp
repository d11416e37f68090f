#pragma once

#include <optional>
#include <utility>

#include "cliffsig/poly_field.hpp"
#include "cliffsig/product_table.hpp"

namespace cliffsig {

// Everything a Dirac-type operator needs: the product to use, the raising
// signs s_mu defining e^mu = s_mu e_mu, and the physical constants.
struct DiracContext {
  ProductTable table;
  std::vector<int> raising;
  Rational mass{0};
  Rational charge{0};
};

// The four contexts the applications use. The "euclidean vee" pair lives
// in Cl(4,0) with the product morphed to simulate Cl(1,3); the
// "minkowski vee" pair lives in Cl(1,3) simulating Cl(4,0).
DiracContext minkowski_context(Rational mass = 0, Rational charge = 0);
DiracContext euclidean_vee_context(Rational mass = 0, Rational charge = 0);
DiracContext euclidean_base_context(Rational mass = 0, Rational charge = 0);
DiracContext minkowski_vee_context();

enum class Side { Left, Right };

// Left:  sum_mu (s_mu e_mu) * d_mu(Phi)   (products via ctx.table)
// Right: sum_mu d_mu(Phi) * (s_mu e_mu)
PolyField dirac(const DiracContext& ctx, const PolyField& phi,
                Side side = Side::Left);

// dirac(dirac(Phi)) minus the scalar wave operator with signs equal to the
// table's generator squares; identically zero by construction.
PolyField wave_check(const DiracContext& ctx, const PolyField& phi);

enum class DhForm { Minkowski, Vee, EuclideanBase };

// Dirac-Hestenes residual; zero iff psi solves the equation.
//   Minkowski:      D psi - m psi g012            (+ e A psi g12)
//   Vee:            e0 d0 psi + di psi ei - m e12 psi e0
//                   (+ e * e12(psi A - 2(psi.e0) A0), base Cl(4,0) products)
//   EuclideanBase:  plain euclidean Dirac operator, no vee (negative
//                   control for the equivalence claim).
// Non-even psi triggers a warning on stderr; the computation proceeds.
PolyField dh_residual(const DiracContext& ctx, const PolyField& psi,
                      DhForm form, const PolyField* potential = nullptr);

// table_product(T, reverse(Phi), volume blade). With the base Cl(1,3)
// table this is the minkowskian star; with vee(Cl(1,3), 0) the euclidean
// star expressed inside Minkowski spacetime.
Multivector hodge_star(const ProductTable& t, const Multivector& phi);
PolyField hodge_star(const ProductTable& t, const PolyField& phi);

// Parity P(Phi) = e0 Phi e0, base Clifford product of Phi's signature.
// Acts on algebra coefficients only; coordinates are untouched.
Multivector parity(const Multivector& phi);
PolyField parity(const PolyField& phi);

// d Phi = (dirac_left(Phi) + dirac_right(grade involution Phi)) / 2
PolyField exterior_d(const DiracContext& ctx, const PolyField& phi);
// delta Phi = (dirac_left(Phi) - dirac_right(grade involution Phi)) / 2
PolyField codifferential(const DiracContext& ctx, const PolyField& phi);

// F = E + g5 B split of a 2-form in Cl(1,3):
//   E = (F - g0 F g0)/2,  g5 B = (F + g0 F g0)/2, B returned with the g5
// factor stripped. Throws on non-2-form input.
std::pair<Multivector, Multivector> em_split(const Multivector& f);

// True iff F = sign * star(F) under the euclidean star in Cl(1,3);
// cross-checked against E = sign*B from em_split.
bool selfdual_check(const Multivector& f, int sign);

// (d F, delta F) under the context's operators.
std::pair<PolyField, PolyField> maxwell_residual(const DiracContext& ctx,
                                                 const PolyField& f);

}  // namespace cliffsig
