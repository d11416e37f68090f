#include "cliffsig/component_system.hpp"

#include <algorithm>
#include <tuple>

namespace cliffsig {

bool SystemTerm::operator<(const SystemTerm& o) const {
  return std::tie(source, kind, index) < std::tie(o.source, o.kind, o.index);
}

namespace {

void accumulate(ComponentSystem& sys, const Multivector& mv, BladeMask source,
                SystemTerm::Kind kind, int index) {
  for (BladeMask k = 0; k < mv.size(); ++k) {
    if (mv[k] == 0) continue;
    sys.equations[k].push_back(SystemTerm{mv[k], source, kind, index});
  }
}

void canonicalize(ComponentSystem& sys) {
  for (auto it = sys.equations.begin(); it != sys.equations.end();) {
    auto& terms = it->second;
    std::sort(terms.begin(), terms.end());
    std::vector<SystemTerm> merged;
    for (const SystemTerm& t : terms) {
      if (!merged.empty() && !(merged.back() < t) && !(t < merged.back())) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const SystemTerm& t) { return t.coeff == 0; });
    if (merged.empty()) {
      it = sys.equations.erase(it);
    } else {
      it->second = std::move(merged);
      ++it;
    }
  }
}

}  // namespace

ComponentSystem component_system(const DiracContext& ctx, DhForm form,
                                 const std::vector<BladeMask>& basis,
                                 bool with_potential) {
  const Signature sig = form == DhForm::Minkowski ? make_signature(1, 3)
                                                  : make_signature(4, 0);
  const ProductTable& t = ctx.table;
  const Multivector blade_012 = Multivector::blade(sig, 0x7);
  const Multivector blade_12 = Multivector::blade(sig, 0x6);

  ComponentSystem sys;
  for (BladeMask b : basis) {
    Multivector unknown = Multivector::blade(sig, b);
    for (int mu = 0; mu < sig.dim(); ++mu) {
      Multivector gamma_up = Multivector::blade(
          sig, 1u << mu, Rational(ctx.raising[static_cast<size_t>(mu)]));
      accumulate(sys, table_product(t, gamma_up, unknown), b,
                 SystemTerm::Kind::Derivative, mu);
    }
    accumulate(sys, -table_product(t, unknown, blade_012), b,
               SystemTerm::Kind::Mass, -1);
    if (with_potential) {
      // The potential is a one-form: like the Dirac operator, it expands in
      // the raised basis, so its components enter with the raising signs.
      for (int nu = 0; nu < sig.dim(); ++nu) {
        Multivector e_nu = Multivector::blade(
            sig, 1u << nu, Rational(ctx.raising[static_cast<size_t>(nu)]));
        Multivector term = table_product(
            t, table_product(t, e_nu, unknown), blade_12);
        accumulate(sys, term, b, SystemTerm::Kind::Charge, nu);
      }
    }
  }
  canonicalize(sys);
  return sys;
}

std::optional<Recoding> find_recoding(const ComponentSystem& s1,
                                      const ComponentSystem& s2,
                                      const std::vector<BladeMask>& basis) {
  if (basis.empty()) {
    return s1 == s2 ? std::optional<Recoding>(Recoding{}) : std::nullopt;
  }

  auto matches = [&](const Recoding& signs) {
    if (s1.equations.size() != s2.equations.size()) return false;
    auto it1 = s1.equations.begin();
    auto it2 = s2.equations.begin();
    for (; it1 != s1.equations.end(); ++it1, ++it2) {
      if (it1->first != it2->first) return false;
      const auto& t1 = it1->second;
      const auto& t2 = it2->second;
      if (t1.size() != t2.size()) return false;
      int eq_sign = 0;  // free overall sign per equation
      for (size_t i = 0; i < t1.size(); ++i) {
        const SystemTerm& a = t1[i];
        SystemTerm b = t2[i];
        if (a < b || b < a) return false;
        auto found = signs.find(b.source);
        if (found != signs.end() && found->second < 0) b.coeff = -b.coeff;
        if (a.coeff == b.coeff) {
          if (eq_sign == -1) return false;
          eq_sign = +1;
        } else if (a.coeff == -b.coeff) {
          if (eq_sign == +1) return false;
          eq_sign = -1;
        } else {
          return false;
        }
      }
    }
    return true;
  };

  const size_t free_count = basis.size() - 1;
  for (size_t bits = 0; bits < (static_cast<size_t>(1) << free_count);
       ++bits) {
    Recoding signs;
    signs[basis[0]] = +1;  // gauge fix
    for (size_t i = 0; i < free_count; ++i) {
      signs[basis[i + 1]] = (bits >> i) & 1 ? -1 : +1;
    }
    if (matches(signs)) return signs;
  }
  return std::nullopt;
}

PolyField apply_recoding(const PolyField& psi, const Recoding& recoding) {
  return psi.map([&](const Multivector& mv) {
    Multivector out = mv;
    for (const auto& [mask, sign] : recoding) {
      if (sign < 0) out.set(mask, -mv[mask]);
    }
    return out;
  });
}

std::string render(const ComponentSystem& s) {
  std::string out;
  for (const auto& [k, terms] : s.equations) {
    out += blade_name(k) + ": ";
    bool first = true;
    for (const SystemTerm& t : terms) {
      Rational c = t.coeff;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
        first = false;
      } else {
        out += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
      }
      if (c != 1) out += rational_to_string(c) + "*";
      switch (t.kind) {
        case SystemTerm::Kind::Derivative:
          out += "d" + std::to_string(t.index);
          break;
        case SystemTerm::Kind::Mass:
          out += "m";
          break;
        case SystemTerm::Kind::Charge:
          out += "q*A" + std::to_string(t.index);
          break;
      }
      out += " f[" + blade_name(t.source) + "]";
    }
    out += "\n";
  }
  return out;
}

}  // namespace cliffsig
