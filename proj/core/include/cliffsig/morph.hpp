#pragma once

#include <string>
#include <vector>

#include "cliffsig/product_table.hpp"
#include "cliffsig/signature.hpp"

namespace cliffsig {

struct MorphStep {
  enum class Kind { Vee, Tilt };
  Kind kind = Kind::Tilt;
  int preserved = -1;  // generator index, Vee only

  static MorphStep vee(int mu) { return {Kind::Vee, mu}; }
  static MorphStep tilt() { return {Kind::Tilt, -1}; }

  bool operator==(const MorphStep&) const = default;
};

std::string step_name(const MorphStep& s);

// Sequence of vee/tilt steps whose induced square-flips turn source into
// target. vee(mu) flips every generator square except mu; tilt flips all.
struct MorphPlan {
  Signature source;
  Signature target;
  std::vector<MorphStep> steps;
};

// Square pattern obtained by applying the step's flips to `squares`.
std::vector<int> apply_step_squares(const std::vector<int>& squares,
                                    const MorphStep& step);

// Shortest plan among: empty, single tilt, single vee, or the per-generator
// [tilt, vee(mu)] composition with adjacent tilt-tilt pairs cancelled.
// Throws on dimension mismatch.
MorphPlan plan_signature_change(const Signature& src, const Signature& dst);

// Folds the steps left to right, each consuming the previous table as its
// base product. Throws when the plan's source does not match the table.
ProductTable apply_plan(const ProductTable& base, const MorphPlan& plan);

}  // namespace cliffsig
