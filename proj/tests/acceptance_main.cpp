// Acceptance gate: one check per advertised criterion, one line of output
// per criterion, exit 0 iff all pass. Everything is exact rational
// arithmetic; there are no tolerances anywhere.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliffsig/component_system.hpp"
#include "cliffsig/field_ops.hpp"
#include "cliffsig/linalg.hpp"
#include "cliffsig/morph.hpp"
#include "cliffsig/random.hpp"
#include "cliffsig/table_io.hpp"

using namespace cliffsig;

namespace {

ProductTable flipped_base(const Signature& sig, int keep) {
  std::vector<int> squares = sig.squares;
  for (size_t i = 0; i < squares.size(); ++i) {
    if (static_cast<int>(i) != keep) squares[i] = -squares[i];
  }
  return ProductTable::base(signature_from_squares(squares));
}

// 1. Vee simulation: exhaustive at n = 4, sampled at n = 5.
bool criterion_vee_simulation(std::string& detail) {
  for (int p = 0; p <= 4; ++p) {
    Signature sig = make_signature(p, 4 - p);
    ProductTable base = ProductTable::base(sig);
    for (int mu = 0; mu < 4; ++mu) {
      if (!verify_isomorphism(base.vee(mu), flipped_base(sig, mu)).equal) {
        detail = signature_name(sig) + " preserve " + std::to_string(mu);
        return false;
      }
    }
  }
  for (auto [p, q] : {std::pair{5, 0}, {1, 4}, {3, 2}}) {
    Signature sig = make_signature(p, q);
    ProductTable base = ProductTable::base(sig);
    for (int mu : {0, 2, 4}) {
      if (!verify_isomorphism(base.vee(mu), flipped_base(sig, mu)).equal) {
        detail = signature_name(sig) + " preserve " + std::to_string(mu);
        return false;
      }
    }
  }
  detail = "20 exhaustive n=4 combinations, 9 sampled n=5 combinations";
  return true;
}

// 2. Tilt gives the opposite-signature table for all p+q in {2..5}.
bool criterion_tilt(std::string& detail) {
  int cases = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig = make_signature(p, n - p);
      if (!verify_isomorphism(ProductTable::base(sig).tilt(),
                              flipped_base(sig, -1))
               .equal) {
        detail = signature_name(sig);
        return false;
      }
      ++cases;
    }
  }
  detail = std::to_string(cases) + " signatures, exhaustive blade pairs";
  return true;
}

// 3. vee(vee(T, mu), mu) = T and tilt(tilt(T)) = T at n = 4.
bool criterion_involutivity(std::string& detail) {
  for (int p = 0; p <= 4; ++p) {
    ProductTable base = ProductTable::base(make_signature(p, 4 - p));
    for (int mu = 0; mu < 4; ++mu) {
      if (!verify_isomorphism(base.vee(mu).vee(mu), base).equal) {
        detail = "vee o vee at Cl(" + std::to_string(p) + "," +
                 std::to_string(4 - p) + "), preserve " + std::to_string(mu);
        return false;
      }
    }
    if (!verify_isomorphism(base.tilt().tilt(), base).equal) {
      detail = "tilt o tilt at Cl(" + std::to_string(p) + "," +
               std::to_string(4 - p) + ")";
      return false;
    }
  }
  detail = "all n=4 base tables restored";
  return true;
}

// 4. Associativity: 100 random triples per constructed table.
bool criterion_associativity(std::string& detail) {
  Rng rng(4);
  Signature coeff_sig = make_signature(4, 0);
  int tables = 0;
  for (int p = 0; p <= 4; ++p) {
    ProductTable base = ProductTable::base(make_signature(p, 4 - p));
    for (const ProductTable& t :
         {base, base.vee(0), base.vee(3), base.tilt(), base.tilt().vee(1)}) {
      ++tables;
      for (int trial = 0; trial < 100; ++trial) {
        Multivector a = random_multivector(coeff_sig, rng);
        Multivector b = random_multivector(coeff_sig, rng);
        Multivector c = random_multivector(coeff_sig, rng);
        if (!(table_product(t, table_product(t, a, b), c) ==
              table_product(t, a, table_product(t, b, c)))) {
          detail = t.provenance() + ", trial " + std::to_string(trial);
          return false;
        }
      }
    }
  }
  detail = "100 triples on each of " + std::to_string(tables) + " tables";
  return true;
}

// 5. (u vee v - v vee u)/2 = u wedge v on 100 random vector pairs.
bool criterion_structure(std::string& detail) {
  Rng rng(5);
  for (int p = 0; p <= 4; ++p) {
    Signature sig = make_signature(p, 4 - p);
    for (int mu = 0; mu < 4; ++mu) {
      ProductTable v = ProductTable::base(sig).vee(mu);
      for (int trial = 0; trial < 100; ++trial) {
        Multivector a = random_vector(sig, rng);
        Multivector b = random_vector(sig, rng);
        if (!((table_product(v, a, b) - table_product(v, b, a))
                  .scaled(Rational(1, 2)) == wedge(a, b))) {
          detail = v.provenance() + ", trial " + std::to_string(trial);
          return false;
        }
      }
    }
  }
  detail = "100 vector pairs on each of 20 vee tables";
  return true;
}

// 6. Wave identities for 20 random degree<=3 polynomial fields.
bool criterion_wave(std::string& detail) {
  Rng rng(6);
  Signature sig = make_signature(4, 0);
  DiracContext veec = euclidean_vee_context();
  DiracContext eucc = euclidean_base_context();
  for (int trial = 0; trial < 20; ++trial) {
    PolyField psi = random_field(sig, 3, rng);
    if (!wave_check(veec, psi).is_zero()) {
      detail = "vee wave operator, trial " + std::to_string(trial);
      return false;
    }
    if (!wave_check(eucc, psi).is_zero()) {
      detail = "euclidean wave operator, trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "minkowskian and euclidean box on 20 random fields";
  return true;
}

// 7. Dirac equivalence over the full even basis.
bool criterion_dirac(std::string& detail) {
  std::vector<BladeMask> basis;
  for (BladeMask b = 0; b < 16; ++b) {
    if ((blade_grade(b) & 1) == 0) basis.push_back(b);
  }
  DiracContext mink = minkowski_context();
  DiracContext veec = euclidean_vee_context();
  DiracContext eucc = euclidean_base_context();

  ComponentSystem s_mink = component_system(mink, DhForm::Minkowski, basis);
  ComponentSystem s_vee = component_system(veec, DhForm::Vee, basis);
  auto rec = find_recoding(s_mink, s_vee, basis);
  if (!rec) {
    detail = "no recoding between the two eight-equation systems";
    return false;
  }
  for (BladeMask b : basis) {
    if (rec->at(b) != ((b & 1) ? -1 : 1)) {
      detail = "recoding does not flip exactly the e0 blades (at " +
               blade_name(b) + ")";
      return false;
    }
  }
  auto rec_pot =
      find_recoding(component_system(mink, DhForm::Minkowski, basis, true),
                    component_system(veec, DhForm::Vee, basis, true), basis);
  if (!rec_pot || *rec_pot != *rec) {
    detail = "interaction term changes or breaks the recoding";
    return false;
  }
  if (find_recoding(s_mink, component_system(eucc, DhForm::EuclideanBase, basis),
                    basis)) {
    detail = "negative control admitted a recoding";
    return false;
  }
  detail = "systems match under the e0-blade sign flip; interaction stable; "
           "euclidean control rejected";
  return true;
}

// 8. Split-operator and mass-term expansions of the vee Dirac form.
bool criterion_vee_expansion(std::string& detail) {
  Rng rng(8);
  Signature sig = make_signature(4, 0);
  ProductTable base = ProductTable::base(sig);
  DiracContext ctx = euclidean_vee_context();
  Multivector e0 = Multivector::blade(sig, 0x1);
  Multivector e12 = Multivector::blade(sig, 0x6);
  Multivector e012 = Multivector::blade(sig, 0x7);
  for (int trial = 0; trial < 20; ++trial) {
    PolyField psi = random_even_field(sig, 3, rng);
    PolyField rhs = field_product(base, e0, psi.derivative(0));
    for (int i = 1; i < 4; ++i) {
      rhs = rhs + field_product(base, psi.derivative(i),
                                Multivector::blade(sig, 1u << i));
    }
    if (!(dirac(ctx, psi, Side::Left) == rhs)) {
      detail = "Dv psi = e0 d0 psi + di psi ei failed, trial " +
               std::to_string(trial);
      return false;
    }
    if (!(field_product(ctx.table, psi, e012) ==
          field_product(base, e12, field_product(base, psi, e0)))) {
      detail = "psi v e012 = e12 psi e0 failed, trial " +
               std::to_string(trial);
      return false;
    }
  }
  detail = "both identities exact on 20 random even fields";
  return true;
}

// 9. Hodge suite.
bool criterion_hodge(std::string& detail) {
  Signature sig = make_signature(1, 3);
  ProductTable base = ProductTable::base(sig);
  ProductTable veet = base.vee(0);
  Multivector one = Multivector::scalar(sig, 1);
  Multivector g5 = Multivector::blade(sig, 0xF);

  for (BladeMask b = 0; b < 16; ++b) {
    Multivector phi = Multivector::blade(sig, b);
    if (!(hodge_star(veet, phi) == -parity(hodge_star(base, phi)))) {
      detail = "euclidean star != -P(minkowskian star) at " + blade_name(b);
      return false;
    }
  }
  if (!(table_product(veet, g5, g5) == one) ||
      !(geometric_product(g5, g5) == -one)) {
    detail = "volume-element squares wrong";
    return false;
  }

  DiracContext mink{base, {1, -1, -1, -1}, 0, 0};
  DiracContext mvee = minkowski_vee_context();
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    PolyField phi = random_field(sig, 3, rng);
    PolyField d_phi = exterior_d(mink, phi);
    if (!(exterior_d(mvee, phi) == d_phi)) {
      detail = "euclidean d differs from d, trial " + std::to_string(trial);
      return false;
    }
    if (!(codifferential(mvee, phi) ==
          hodge_star(veet, exterior_d(mink, hodge_star(veet, phi))))) {
      detail = "euclidean codifferential != star d star, trial " +
               std::to_string(trial);
      return false;
    }
  }
  PolyField witness = field_product(base, PolyField::coordinate(sig, 1),
                                    Multivector::blade(sig, 0x2));
  if (codifferential(mvee, witness) == codifferential(mink, witness)) {
    detail = "witness field failed to separate the two codifferentials";
    return false;
  }
  detail = "star relation on 16 blades; d and codifferential identities on "
           "20 fields; separation witness x1*e1";
  return true;
}

// 10. Self-duality dimensions and Maxwell residuals.
bool criterion_selfdual(std::string& detail) {
  Signature sig = make_signature(1, 3);
  ProductTable base = ProductTable::base(sig);
  ProductTable star = base.vee(0);
  std::vector<BladeMask> basis2 = {3, 5, 6, 9, 10, 12};

  auto duality_matrix = [&](const ProductTable& t, int s) {
    RationalMatrix m(basis2.size(), std::vector<Rational>(basis2.size(), 0));
    for (size_t c = 0; c < basis2.size(); ++c) {
      Multivector f = Multivector::blade(sig, basis2[c]);
      Multivector image = f - hodge_star(t, f).scaled(Rational(s));
      for (size_t r = 0; r < basis2.size(); ++r) m[r][c] = image[basis2[r]];
    }
    return m;
  };

  DiracContext mvee = minkowski_vee_context();
  for (int sign : {+1, -1}) {
    auto kernel = null_space(duality_matrix(star, sign));
    if (kernel.size() != 3) {
      detail = "solution space for sign " + std::to_string(sign) +
               " has dimension " + std::to_string(kernel.size());
      return false;
    }
    for (const auto& v : kernel) {
      Multivector f(sig);
      for (size_t i = 0; i < basis2.size(); ++i) f.set(basis2[i], v[i]);
      auto [e, b] = em_split(f);
      if (!selfdual_check(f, sign) || !(e == b.scaled(Rational(sign)))) {
        detail = "kernel element violates F = sign*star F or E = sign*B";
        return false;
      }
      auto [df, delf] = maxwell_residual(mvee, PolyField::constant(f));
      if (!df.is_zero() || !delf.is_zero()) {
        detail = "constant dual field has nonzero Maxwell residual";
        return false;
      }
    }
    if (!null_space(duality_matrix(base, sign)).empty()) {
      detail = "minkowskian-star real fixed space is not {0} for sign " +
               std::to_string(sign);
      return false;
    }
  }
  detail = "dim 3 with E = +/-B for both signs; minkowskian fixed space {0}; "
           "residuals vanish";
  return true;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// 11. Tooling: exit statuses, corrupted-table control, byte stability.
bool criterion_tooling(std::string& detail) {
  const std::string cli = CLI_BINARY_PATH;

  CommandResult full = run_command(cli + " verify --seed 7");
  if (full.exit_code != 0) {
    detail = "verify exited " + std::to_string(full.exit_code);
    std::cerr << full.output;
    return false;
  }

  const std::string table_path = "acceptance_table.json";
  CommandResult exported = run_command(
      cli + " table --signature 4,0 --vee 0 -o " + table_path);
  if (exported.exit_code != 0) {
    detail = "table export failed";
    return false;
  }
  {
    nlohmann::json doc;
    std::ifstream in(table_path);
    in >> doc;
    doc["entries"][100][2] = -doc["entries"][100][2].get<long long>();
    std::ofstream out(table_path);
    out << doc.dump();
  }
  CommandResult corrupted =
      run_command(cli + " verify --table-file " + table_path);
  std::remove(table_path.c_str());
  if (corrupted.exit_code != 1) {
    detail = "corrupted table check exited " +
             std::to_string(corrupted.exit_code) + ", expected 1";
    return false;
  }
  if (corrupted.output.find("blade pair") == std::string::npos) {
    detail = "corrupted table report does not name the mismatched pair";
    return false;
  }

  std::string structured = cli + " verify --structured --seed 42";
  CommandResult first = run_command(structured);
  CommandResult second = run_command(structured);
  if (first.exit_code != 0 || first.output != second.output) {
    detail = "structured output is not byte-stable under --seed 42";
    return false;
  }

  CommandResult usage = run_command(cli + " verify --signature bogus");
  if (usage.exit_code != 2) {
    detail = "usage error exited " + std::to_string(usage.exit_code) +
             ", expected 2";
    return false;
  }

  detail = "verify passes, corrupted table caught with named pair, "
           "structured output byte-stable, usage errors exit 2";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"01-vee-simulation", criterion_vee_simulation},
      {"02-tilt-opposite", criterion_tilt},
      {"03-involutivity", criterion_involutivity},
      {"04-associativity", criterion_associativity},
      {"05-structure-preservation", criterion_structure},
      {"06-wave-identity", criterion_wave},
      {"07-dirac-equivalence", criterion_dirac},
      {"08-vee-dirac-expansion", criterion_vee_expansion},
      {"09-hodge-suite", criterion_hodge},
      {"10-selfduality", criterion_selfdual},
      {"11-tooling", criterion_tooling},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << detail
              << "\n";
    all = all && pass;
  }
  return all ? 0 : 1;
}
