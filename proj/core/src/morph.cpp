#include "cliffsig/morph.hpp"

#include <stdexcept>

namespace cliffsig {

std::string step_name(const MorphStep& s) {
  if (s.kind == MorphStep::Kind::Tilt) return "tilt";
  return "vee(" + std::to_string(s.preserved) + ")";
}

std::vector<int> apply_step_squares(const std::vector<int>& squares,
                                    const MorphStep& step) {
  std::vector<int> out = squares;
  for (size_t i = 0; i < out.size(); ++i) {
    if (step.kind == MorphStep::Kind::Vee &&
        static_cast<int>(i) == step.preserved) {
      continue;
    }
    out[i] = -out[i];
  }
  return out;
}

MorphPlan plan_signature_change(const Signature& src, const Signature& dst) {
  if (src.dim() != dst.dim()) {
    throw std::invalid_argument("dimension mismatch between signatures");
  }
  const int n = src.dim();
  MorphPlan plan{src, dst, {}};

  std::vector<int> differing;
  for (int i = 0; i < n; ++i) {
    if (src.squares[static_cast<size_t>(i)] !=
        dst.squares[static_cast<size_t>(i)]) {
      differing.push_back(i);
    }
  }

  if (differing.empty()) {
    return plan;
  }
  if (static_cast<int>(differing.size()) == n) {
    plan.steps = {MorphStep::tilt()};
    return plan;
  }
  if (static_cast<int>(differing.size()) == n - 1) {
    // Exactly one square preserved; ties cannot occur, but iterate from
    // the smallest index anyway for a deterministic choice.
    for (int mu = 0; mu < n; ++mu) {
      if (src.squares[static_cast<size_t>(mu)] ==
          dst.squares[static_cast<size_t>(mu)]) {
        plan.steps = {MorphStep::vee(mu)};
        return plan;
      }
    }
  }

  // General case: "flip only mu" = [tilt, vee(mu)] per differing generator.
  for (int mu : differing) {
    plan.steps.push_back(MorphStep::tilt());
    plan.steps.push_back(MorphStep::vee(mu));
  }
  // Peephole: adjacent tilt-tilt cancels.
  std::vector<MorphStep> reduced;
  for (const MorphStep& s : plan.steps) {
    if (!reduced.empty() && s.kind == MorphStep::Kind::Tilt &&
        reduced.back().kind == MorphStep::Kind::Tilt) {
      reduced.pop_back();
    } else {
      reduced.push_back(s);
    }
  }
  plan.steps = std::move(reduced);

  // Sanity: the flips must reach the target.
  std::vector<int> sq = src.squares;
  for (const MorphStep& s : plan.steps) sq = apply_step_squares(sq, s);
  if (sq != dst.squares) {
    throw std::logic_error("planner produced a plan that misses its target");
  }
  return plan;
}

ProductTable apply_plan(const ProductTable& base, const MorphPlan& plan) {
  if (generator_squares(base) != plan.source.squares) {
    throw std::invalid_argument(
        "plan source does not match the base table's generator squares");
  }
  ProductTable t = base;
  for (const MorphStep& s : plan.steps) {
    t = (s.kind == MorphStep::Kind::Vee) ? t.vee(s.preserved) : t.tilt();
  }
  return t;
}

}  // namespace cliffsig
