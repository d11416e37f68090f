// Workbench CLI: table export/verification, signature-change planning,
// Dirac-equivalence and self-duality demos, and an expression evaluator.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliffsig/component_system.hpp"
#include "cliffsig/expression.hpp"
#include "cliffsig/field_ops.hpp"
#include "cliffsig/linalg.hpp"
#include "cliffsig/morph.hpp"
#include "cliffsig/table_io.hpp"
#include "cliffsig/verify.hpp"

namespace {

using namespace cliffsig;

// Accepts "p,q" counts or an explicit square pattern like "+---" or
// "(-+++)". The pattern form makes every node of the signature diagrams
// addressable, not only the canonically ordered ones.
Signature parse_signature(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  if (s.find_first_not_of("+-") == std::string::npos && !s.empty()) {
    std::vector<int> squares;
    for (char c : s) squares.push_back(c == '+' ? +1 : -1);
    return signature_from_squares(squares);
  }
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("signature must be \"p,q\" or a +/- pattern");
  }
  return make_signature(std::stoi(s.substr(0, comma)),
                        std::stoi(s.substr(comma + 1)));
}

ProductTable build_table(const Signature& sig, const std::vector<int>& vees,
                         int tilts) {
  ProductTable t = ProductTable::base(sig);
  for (int mu : vees) t = t.vee(mu);
  for (int i = 0; i < tilts; ++i) t = t.tilt();
  return t;
}

int cmd_table(const std::string& sig_text, const std::vector<int>& vees,
              int tilts, const std::string& output) {
  ProductTable t = build_table(parse_signature(sig_text), vees, tilts);
  std::string body = table_to_json(t).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << output << " for writing\n";
      return 1;
    }
    out << body;
  }
  return 0;
}

int cmd_verify(const std::string& sig_text, int preserve, std::uint64_t seed,
               bool structured, const std::string& table_file) {
  if (!table_file.empty()) {
    nlohmann::json j;
    {
      std::ifstream in(table_file);
      if (!in) {
        std::cerr << "cannot open " << table_file << "\n";
        return 1;
      }
      try {
        in >> j;
      } catch (const std::exception& e) {
        std::cerr << "cannot parse " << table_file << ": " << e.what() << "\n";
        return 1;
      }
    }
    DocumentCheck check = verify_table_document(table_document_from_json(j));
    if (structured) {
      nlohmann::ordered_json doc;
      doc["ok"] = check.ok;
      doc["message"] = check.message;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << (check.ok ? "PASS " : "FAIL ") << check.message << "\n";
    }
    return check.ok ? 0 : 1;
  }

  VerifyOptions options;
  options.sig = parse_signature(sig_text);
  options.preserve = preserve;
  options.seed = seed;
  if (options.preserve < 0 || options.preserve >= options.sig.dim()) {
    throw std::invalid_argument("preserved index out of range");
  }
  std::vector<CheckResult> results = run_verification(options);
  bool all = true;
  if (structured) {
    nlohmann::ordered_json doc;
    doc["seed"] = seed;
    doc["signature"] = options.sig.squares;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
      doc["checks"].push_back(
          {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    doc["ok"] = all;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail
                << "\n";
      all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_plan(const std::string& src_text, const std::string& dst_text,
             bool structured) {
  Signature src = parse_signature(src_text);
  Signature dst = parse_signature(dst_text);
  MorphPlan plan = plan_signature_change(src, dst);
  ProductTable result = apply_plan(ProductTable::base(src), plan);
  bool sound =
      verify_isomorphism(result, ProductTable::base(dst)).equal;
  if (structured) {
    nlohmann::ordered_json doc;
    doc["source"] = src.squares;
    doc["target"] = dst.squares;
    doc["steps"] = nlohmann::ordered_json::array();
    for (const MorphStep& s : plan.steps) doc["steps"].push_back(step_name(s));
    doc["verified"] = sound;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << squares_string(src.squares) << " -> "
              << squares_string(dst.squares) << "\n";
    if (plan.steps.empty()) {
      std::cout << "plan: (empty)\n";
    } else {
      std::cout << "plan:";
      for (const MorphStep& s : plan.steps) std::cout << " " << step_name(s);
      std::cout << "\n";
    }
    std::cout << "verified against target base table: "
              << (sound ? "yes" : "NO") << "\n";
  }
  return sound ? 0 : 1;
}

std::vector<BladeMask> even_basis_n4() {
  std::vector<BladeMask> basis;
  for (BladeMask b = 0; b < 16; ++b) {
    if ((blade_grade(b) & 1) == 0) basis.push_back(b);
  }
  return basis;
}

int cmd_dirac(const std::string& mass_text, const std::string& charge_text,
              bool with_potential, bool structured) {
  Rational mass(mass_text);
  Rational charge(charge_text);
  std::vector<BladeMask> basis = even_basis_n4();
  DiracContext mink = minkowski_context(mass, charge);
  DiracContext veec = euclidean_vee_context(mass, charge);
  DiracContext eucc = euclidean_base_context(mass, charge);

  ComponentSystem sys_m =
      component_system(mink, DhForm::Minkowski, basis, with_potential);
  ComponentSystem sys_v =
      component_system(veec, DhForm::Vee, basis, with_potential);
  ComponentSystem sys_e =
      component_system(eucc, DhForm::EuclideanBase, basis, with_potential);

  auto recoding = find_recoding(sys_m, sys_v, basis);
  bool control = find_recoding(sys_m, sys_e, basis).has_value();

  if (structured) {
    nlohmann::ordered_json doc;
    doc["mass"] = rational_to_string(mass);
    doc["charge"] = rational_to_string(charge);
    doc["with_potential"] = with_potential;
    doc["equivalent"] = recoding.has_value();
    if (recoding) {
      nlohmann::ordered_json rec;
      for (const auto& [b, sign] : *recoding) rec[blade_name(b)] = sign;
      doc["recoding"] = rec;
    }
    doc["euclidean_control_equivalent"] = control;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "minkowskian system (one equation per output blade):\n"
              << render(sys_m) << "\n"
              << "vee system:\n"
              << render(sys_v) << "\n";
    if (recoding) {
      std::cout << "recoding (component sign per source blade):\n";
      for (const auto& [b, sign] : *recoding) {
        std::cout << "  " << blade_name(b) << ": " << (sign > 0 ? "+1" : "-1")
                  << "\n";
      }
      std::cout << "verdict: equivalent\n";
    } else {
      std::cout << "verdict: NOT equivalent\n";
    }
    std::cout << "euclidean control (no vee): "
              << (control ? "unexpectedly equivalent" : "not equivalent")
              << "\n";
  }
  return (recoding && !control) ? 0 : 1;
}

int cmd_selfdual(int sign, bool structured) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("--sign must be 1 or -1");
  }
  Signature sig = make_signature(1, 3);
  ProductTable base = ProductTable::base(sig);
  ProductTable star = base.vee(0);
  std::vector<BladeMask> basis2 = {3, 5, 6, 9, 10, 12};

  auto duality_matrix = [&](const ProductTable& t, int s) {
    RationalMatrix m(basis2.size(),
                     std::vector<Rational>(basis2.size(), 0));
    for (size_t c = 0; c < basis2.size(); ++c) {
      Multivector f = Multivector::blade(sig, basis2[c]);
      Multivector image = f - hodge_star(t, f).scaled(Rational(s));
      for (size_t r = 0; r < basis2.size(); ++r) m[r][c] = image[basis2[r]];
    }
    return m;
  };

  auto kernel = null_space(duality_matrix(star, sign));
  bool ok = kernel.size() == 3;
  DiracContext ctx = minkowski_vee_context();
  std::vector<Multivector> fields;
  for (const auto& v : kernel) {
    Multivector f(sig);
    for (size_t i = 0; i < basis2.size(); ++i) f.set(basis2[i], v[i]);
    fields.push_back(f);
    auto [df, delf] = maxwell_residual(ctx, PolyField::constant(f));
    ok = ok && selfdual_check(f, sign) && df.is_zero() && delf.is_zero();
  }
  size_t mink_fixed = null_space(duality_matrix(base, sign)).size();
  ok = ok && mink_fixed == 0;

  if (structured) {
    nlohmann::ordered_json doc;
    doc["sign"] = sign;
    doc["dimension"] = kernel.size();
    doc["basis"] = nlohmann::ordered_json::array();
    for (const Multivector& f : fields) doc["basis"].push_back(render(f));
    doc["minkowski_star_fixed_dimension"] = mink_fixed;
    doc["ok"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (sign > 0 ? "self-dual" : "anti-self-dual")
              << " solution space: dimension " << kernel.size() << "\n";
    for (const Multivector& f : fields) {
      auto [e, b] = em_split(f);
      std::cout << "  F = " << render(f) << "   (E = " << render(e)
                << ", B = " << render(b) << ")\n";
    }
    std::cout << "each basis field satisfies F = " << (sign > 0 ? "+" : "-")
              << "star F and has vanishing Maxwell residuals\n";
    std::cout << "real fixed points of the minkowskian star: dimension "
              << mink_fixed << "\n";
    std::cout << (ok ? "all checks passed" : "FAILURES present") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_eval(const std::string& text, const std::string& sig_text,
             int preserve, bool structured) {
  SessionConfig cfg;
  cfg.sig = parse_signature(sig_text);
  cfg.preserve = preserve;
  if (cfg.preserve < 0 || cfg.preserve >= cfg.sig.dim()) {
    throw std::invalid_argument("preserved index out of range");
  }
  try {
    auto expr = parse(text, cfg);
    Multivector value = eval(*expr, cfg);
    if (structured) {
      nlohmann::ordered_json doc;
      doc["input"] = text;
      doc["signature"] = cfg.sig.squares;
      doc["value"] = render(value);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << render(value) << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford signature-change workbench"};
  app.require_subcommand(1);

  std::string sig_text = "4,0";
  int preserve = 0;
  std::uint64_t seed = 0;
  bool structured = false;

  auto add_common = [&](CLI::App* sub, bool with_preserve) {
    sub->add_option("--signature", sig_text,
                    "algebra as \"p,q\" or a +/- square pattern");
    if (with_preserve) {
      sub->add_option("--preserve", preserve,
                      "preserved generator index for the vee product");
    }
    sub->add_flag("--structured", structured, "machine-readable JSON output");
  };

  auto* table = app.add_subcommand("table", "export a product table");
  std::vector<int> vees;
  int tilts = 0;
  std::string output;
  add_common(table, false);
  table->add_option("--vee", vees,
                    "apply a vee morph with this preserved index (repeatable, "
                    "applied in order before any tilt)");
  table->add_flag("--tilt", tilts, "apply a tilt morph (repeatable)");
  table->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  std::string table_file;
  add_common(verify, true);
  verify->add_option("--seed", seed, "RNG seed for property checks");
  verify->add_option("--table-file", table_file,
                     "verify an exported table document instead");

  auto* plan = app.add_subcommand("plan", "plan a signature change");
  std::string target_text;
  add_common(plan, false);
  plan->add_option("--target", target_text, "target signature")->required();

  auto* dirac = app.add_subcommand(
      "dirac", "Dirac equation equivalence across signatures");
  std::string mass_text = "1";
  std::string charge_text = "1";
  bool with_potential = false;
  dirac->add_option("--mass", mass_text, "mass (rational)");
  dirac->add_option("--charge", charge_text, "charge (rational)");
  dirac->add_flag("--with-potential", with_potential,
                  "include the electromagnetic interaction term");
  dirac->add_flag("--structured", structured, "machine-readable JSON output");

  auto* selfdual =
      app.add_subcommand("selfdual", "(anti-)self-dual Maxwell fields");
  int sd_sign = 1;
  selfdual->add_option("--sign", sd_sign, "+1 self-dual, -1 anti-self-dual");
  selfdual->add_flag("--structured", structured,
                     "machine-readable JSON output");

  auto* evalc = app.add_subcommand("eval", "evaluate an expression");
  std::string expr_text;
  add_common(evalc, true);
  evalc->add_option("expression", expr_text, "expression to evaluate")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return cmd_table(sig_text, vees, tilts, output);
    if (verify->parsed()) {
      return cmd_verify(sig_text, preserve, seed, structured, table_file);
    }
    if (plan->parsed()) return cmd_plan(sig_text, target_text, structured);
    if (dirac->parsed()) {
      return cmd_dirac(mass_text, charge_text, with_potential, structured);
    }
    if (selfdual->parsed()) return cmd_selfdual(sd_sign, structured);
    if (evalc->parsed()) {
      return cmd_eval(expr_text, sig_text, preserve, structured);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
