#include "thinlayer/expression.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <vector>

#include "thinlayer/errors.hpp"

namespace thinlayer {

namespace {

struct Node {
  enum class Kind { number, y1, y2, add, sub, mul, div, neg, pow, sin, cos, exp };
  Kind kind;
  double number = 0.0;
  int exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

using NodePtr = std::shared_ptr<const Node>;

Jet evaluate(const Node& n, Vec2 y) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::number: return Jet::constant(n.number);
    case K::y1: return Jet::y1(y);
    case K::y2: return Jet::y2(y);
    case K::add: return evaluate(*n.lhs, y) + evaluate(*n.rhs, y);
    case K::sub: return evaluate(*n.lhs, y) - evaluate(*n.rhs, y);
    case K::mul: return evaluate(*n.lhs, y) * evaluate(*n.rhs, y);
    case K::div: return evaluate(*n.lhs, y) / evaluate(*n.rhs, y);
    case K::neg: return -evaluate(*n.lhs, y);
    case K::pow: return pow(evaluate(*n.lhs, y), n.exponent);
    case K::sin: return sin(evaluate(*n.lhs, y));
    case K::cos: return cos(evaluate(*n.lhs, y));
    case K::exp: return exp(evaluate(*n.lhs, y));
  }
  return Jet::constant(0.0);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "expression error at column " << pos_ + 1 << ": " << what << " in '" << text_ << "'";
    throw DomainError(os.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Node::Kind::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("exponent must be a non-negative integer");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::pow;
    n->lhs = base;
    n->exponent = std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
    if (n->exponent > 64) fail("exponent too large");
    return n;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      NodePtr inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "y1") return make(Node::Kind::y1);
      if (word == "y2") return make(Node::Kind::y2);
      Node::Kind k;
      if (word == "sin") {
        k = Node::Kind::sin;
      } else if (word == "cos") {
        k = Node::Kind::cos;
      } else if (word == "exp") {
        k = Node::Kind::exp;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(word) + "'");
      }
      if (!accept('(')) fail("expected '(' after function name");
      NodePtr arg = expr();
      if (!accept(')')) fail("missing ')'");
      return make(k, arg);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::number;
    n->number = v;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Field2 parse_expression(std::string_view text) {
  NodePtr root = Parser(text).parse();
  return Field2::from_jet([root](Vec2 y) { return evaluate(*root, y); });
}

}  // namespace thinlayer
