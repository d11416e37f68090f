#include "cliffsig/expression.hpp"

#include <cctype>

#include "cliffsig/field_ops.hpp"

namespace cliffsig {

namespace {

struct Token {
  enum class Kind { Int, Word, Symbol, End };
  Kind kind = Kind::End;
  size_t pos = 0;
  std::string text;
  BigInt number;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_.kind = Token::Kind::Int;
      current_.text = text_.substr(start, pos_ - start);
      // Integer literals are always decimal; strip leading zeros so the
      // big-integer constructor does not read them as an octal prefix.
      size_t nz = current_.text.find_first_not_of('0');
      current_.number = BigInt(
          nz == std::string::npos ? "0" : current_.text.substr(nz));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_.kind = Token::Kind::Word;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    static const std::string symbols = "+-*^.()/,";
    if (symbols.find(c) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& text, const SessionConfig& cfg)
      : lexer_(text), cfg_(cfg) {}

  std::unique_ptr<Expression> run() {
    auto e = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::End) {
      throw ParseError(t.pos, "trailing input '" + t.text + "'");
    }
    return e;
  }

 private:
  static bool is_symbol(const Token& t, const char* s) {
    return t.kind == Token::Kind::Symbol && t.text == s;
  }

  std::unique_ptr<Expression> parse_expr() {
    auto lhs = parse_term();
    while (is_symbol(lexer_.peek(), "+") || is_symbol(lexer_.peek(), "-")) {
      Token op = lexer_.take();
      auto rhs = parse_term();
      auto node = std::make_unique<Expression>();
      node->node = Expression::Node::Binary;
      node->op = op.text;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  bool at_term_operator() {
    const Token& t = lexer_.peek();
    if (t.kind == Token::Kind::Symbol) {
      return t.text == "*" || t.text == "^" || t.text == ".";
    }
    return t.kind == Token::Kind::Word && (t.text == "v" || t.text == "t");
  }

  std::unique_ptr<Expression> parse_term() {
    auto lhs = parse_unary();
    while (at_term_operator()) {
      Token op = lexer_.take();
      auto rhs = parse_unary();
      auto node = std::make_unique<Expression>();
      node->node = Expression::Node::Binary;
      node->op = op.text;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Expression> parse_unary() {
    const Token& t = lexer_.peek();
    if (t.kind == Token::Kind::Word &&
        (t.text == "rev" || t.text == "gi" || t.text == "conj" ||
         t.text == "star" || t.text == "grade")) {
      Token name = lexer_.take();
      expect_symbol("(");
      auto inner = parse_expr();
      auto node = std::make_unique<Expression>();
      node->node = Expression::Node::Unary;
      node->op = name.text;
      node->lhs = std::move(inner);
      if (name.text == "grade") {
        expect_symbol(",");
        Token k = lexer_.take();
        if (k.kind != Token::Kind::Int) {
          throw ParseError(k.pos, "expected integer grade");
        }
        if (k.number > cfg_.sig.dim()) {
          throw ParseError(k.pos, "grade exceeds dimension");
        }
        node->grade_arg = static_cast<int>(k.number);
      }
      expect_symbol(")");
      return node;
    }
    return parse_atom();
  }

  std::unique_ptr<Expression> parse_atom() {
    Token t = lexer_.take();
    if (is_symbol(t, "(")) {
      auto inner = parse_expr();
      expect_symbol(")");
      return inner;
    }
    if (is_symbol(t, "-")) {
      // Negative rational literal; '-' in operand position is a sign.
      Token num = lexer_.take();
      if (num.kind != Token::Kind::Int) {
        throw ParseError(num.pos, "expected number after '-'");
      }
      return finish_rational(-Rational(num.number));
    }
    if (t.kind == Token::Kind::Int) {
      return finish_rational(Rational(t.number));
    }
    if (t.kind == Token::Kind::Word && t.text.size() >= 2 &&
        t.text[0] == 'e' &&
        std::isdigit(static_cast<unsigned char>(t.text[1]))) {
      return parse_blade(t);
    }
    throw ParseError(t.pos, t.kind == Token::Kind::End
                                ? "unexpected end of input"
                                : "unexpected token '" + t.text + "'");
  }

  std::unique_ptr<Expression> finish_rational(Rational value) {
    if (is_symbol(lexer_.peek(), "/")) {
      lexer_.take();
      Token den = lexer_.take();
      if (den.kind != Token::Kind::Int || den.number == 0) {
        throw ParseError(den.pos, "expected positive denominator");
      }
      value /= Rational(den.number);
    }
    auto node = std::make_unique<Expression>();
    node->node = Expression::Node::Literal;
    node->value = std::move(value);
    return node;
  }

  std::unique_ptr<Expression> parse_blade(const Token& t) {
    BladeMask mask = 0;
    int prev = -1;
    for (size_t i = 1; i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) {
        throw ParseError(t.pos + i, "invalid blade atom '" + t.text + "'");
      }
      int idx = t.text[i] - '0';
      if (idx <= prev) {
        throw ParseError(t.pos + i,
                         "blade indices must be strictly increasing");
      }
      if (idx >= cfg_.sig.dim()) {
        throw ParseError(t.pos + i, "generator index " + std::to_string(idx) +
                                        " exceeds dimension " +
                                        std::to_string(cfg_.sig.dim()));
      }
      mask |= 1u << idx;
      prev = idx;
    }
    auto node = std::make_unique<Expression>();
    node->node = Expression::Node::Blade;
    node->mask = mask;
    return node;
  }

  void expect_symbol(const char* s) {
    Token t = lexer_.take();
    if (!is_symbol(t, s)) {
      throw ParseError(t.pos, std::string("expected '") + s + "'");
    }
  }

  Lexer lexer_;
  const SessionConfig& cfg_;
};

// Lazily built tables of one evaluation session.
struct EvalTables {
  ProductTable base;
  std::optional<ProductTable> vee;
  std::optional<ProductTable> tilt;

  explicit EvalTables(const SessionConfig& cfg)
      : base(ProductTable::base(cfg.sig)) {}
};

Multivector eval_node(const Expression& e, const SessionConfig& cfg,
                      EvalTables& tables) {
  switch (e.node) {
    case Expression::Node::Literal:
      return Multivector::scalar(cfg.sig, e.value);
    case Expression::Node::Blade:
      return Multivector::blade(cfg.sig, e.mask);
    case Expression::Node::Unary: {
      Multivector inner = eval_node(*e.lhs, cfg, tables);
      if (e.op == "rev") return involution(inner, Involution::Reverse);
      if (e.op == "gi") return involution(inner, Involution::Grade);
      if (e.op == "conj") return involution(inner, Involution::Conjugate);
      if (e.op == "star") return hodge_star(tables.base, inner);
      return grade_project(inner, e.grade_arg);
    }
    case Expression::Node::Binary: {
      Multivector lhs = eval_node(*e.lhs, cfg, tables);
      Multivector rhs = eval_node(*e.rhs, cfg, tables);
      if (e.op == "+") return lhs + rhs;
      if (e.op == "-") return lhs - rhs;
      if (e.op == "*") return table_product(tables.base, lhs, rhs);
      if (e.op == "^") return wedge(lhs, rhs);
      if (e.op == ".") return contract(lhs, rhs);
      if (e.op == "v") {
        if (!tables.vee) tables.vee = tables.base.vee(cfg.preserve);
        return table_product(*tables.vee, lhs, rhs);
      }
      if (!tables.tilt) tables.tilt = tables.base.tilt();
      return table_product(*tables.tilt, lhs, rhs);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::unique_ptr<Expression> parse(const std::string& text,
                                  const SessionConfig& cfg) {
  return Parser(text, cfg).run();
}

Multivector eval(const Expression& expr, const SessionConfig& cfg) {
  EvalTables tables(cfg);
  return eval_node(expr, cfg, tables);
}

}  // namespace cliffsig
