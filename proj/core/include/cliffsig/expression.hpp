#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffsig/multivector.hpp"
#include "cliffsig/product_table.hpp"

namespace cliffsig {

// Per-invocation settings of the workbench: the algebra, the preserved
// generator for `v`, output mode, and the RNG seed for property commands.
struct SessionConfig {
  Signature sig = make_signature(4, 0);
  int preserve = 0;
  bool structured = false;
  std::uint64_t seed = 0;
};

// Positioned diagnostic for anything the grammar rejects.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, const std::string& message)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        position(position) {}
  size_t position;
};

// Abstract syntax tree over rational literals, blade atoms, unary
// rev/gi/conj/star/grade(k), and the binary tier + - * ^ . v t.
struct Expression {
  enum class Node {
    Literal,   // value
    Blade,     // mask
    Unary,     // op in {rev, gi, conj, star, grade}; grade carries arg k
    Binary,    // op char in {+, -, *, ^, ., v, t}
  };

  Node node;
  Rational value;
  BladeMask mask = 0;
  std::string op;
  int grade_arg = 0;
  std::unique_ptr<Expression> lhs, rhs;
};

// Recursive-descent parser for the grammar
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"^"|"."|"v"|"t") unary)*
//   unary  := ("rev"|"gi"|"conj"|"star") "(" expr ")"
//           | "grade" "(" expr "," int ")" | atom
//   atom   := rational | blade | "(" expr ")"
//   blade  := "e" digit+            (strictly increasing indices, < n)
//   rational := ["-"] int ("/" posint)?
// All binary operators share one precedence tier and associate left.
std::unique_ptr<Expression> parse(const std::string& text,
                                  const SessionConfig& cfg);

// Evaluates a well-formed tree: `*` uses the base table, `v` the vee table
// with the session's preserved index, `t` the tilt table, `star` the Hodge
// star of the base table.
Multivector eval(const Expression& expr, const SessionConfig& cfg);

}  // namespace cliffsig
