#include "sdyn/sexpr.hpp"

#include "sdyn/errors.hpp"

#include <cctype>

namespace sdyn {

namespace {

class SExprReader {
 public:
  explicit SExprReader(const std::string& text) : text_(text) {}

  SExpr read_all() {
    SExpr node = read();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input after s-expression: " + text_);
    return node;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of s-expression: " + text_);
    char ch = text_[pos_];
    SExpr node;
    if (ch == '(') {
      ++pos_;
      node.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '(' in s-expression: " + text_);
        if (text_[pos_] == ')') {
          ++pos_;
          return node;
        }
        node.items.push_back(read());
      }
    }
    if (ch == ')') throw ParseError("unexpected ')' in s-expression: " + text_);
    if (ch == '"') {
      ++pos_;
      std::size_t end = text_.find('"', pos_);
      if (end == std::string::npos) throw ParseError("unterminated string in s-expression: " + text_);
      node.atom = text_.substr(pos_, end - pos_);
      node.quoted = true;
      pos_ = end + 1;
      return node;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"')
      ++pos_;
    node.atom = text_.substr(start, pos_ - start);
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

const std::string& expect_atom(const SExpr& node, const char* what) {
  if (node.is_list) throw ParseError(std::string("expected ") + what + ", found a list");
  return node.atom;
}

}  // namespace

SExpr SExpr::parse(const std::string& text) { return SExprReader(text).read_all(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      seen_digit = true;
    } else if (ch == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("not a rational number: \"" + text + "\"");
    }
  }
  if (!seen_digit) throw ParseError("not a rational number: \"" + text + "\"");
  Rational out;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (out.set_str(body, 10) != 0) throw ParseError("not a rational number: \"" + text + "\"");
  if (out.get_den() == 0) throw ParseError("zero denominator in \"" + text + "\"");
  out.canonicalize();
  return out;
}

ScalarExpr scalar_from_sexpr(const SExpr& node) {
  if (!node.is_list) return ScalarExpr(parse_rational(node.atom));
  if (node.items.empty()) throw ParseError("empty list in s-expression");
  const std::string& head = expect_atom(node.items.front(), "an operator");
  const std::size_t argc = node.items.size() - 1;

  if (head == "+" || head == "*") {
    ScalarExpr acc(head == "+" ? 0 : 1);
    for (std::size_t i = 1; i < node.items.size(); ++i) {
      ScalarExpr x = scalar_from_sexpr(node.items[i]);
      if (head == "+") {
        acc += x;
      } else {
        acc *= x;
      }
    }
    return acc;
  }
  if (head == "-") {
    if (argc == 0) throw ParseError("(-) needs at least one argument");
    ScalarExpr acc = scalar_from_sexpr(node.items[1]);
    if (argc == 1) return -acc;
    for (std::size_t i = 2; i < node.items.size(); ++i) acc -= scalar_from_sexpr(node.items[i]);
    return acc;
  }
  if (head == "ratfun") {
    if (argc != 1 && argc != 2) throw ParseError("(ratfun \"num\" [\"den\"]) takes one or two strings");
    Polynomial num = Polynomial::parse(expect_atom(node.items[1], "a numerator string"));
    Polynomial den = argc == 2 ? Polynomial::parse(expect_atom(node.items[2], "a denominator string"))
                               : Polynomial(1);
    if (den.is_zero()) throw ParseError("ratfun with zero denominator");
    return ScalarExpr(RationalFunction(std::move(num), std::move(den)));
  }
  if (head == "coth") {
    if (argc == 0) throw ParseError("(coth a0 ... c) needs at least the constant term");
    std::vector<Rational> coeffs;
    for (std::size_t i = 1; i < node.items.size(); ++i)
      coeffs.push_back(parse_rational(expect_atom(node.items[i], "a rational")));
    Rational constant = coeffs.back();
    coeffs.pop_back();
    return ScalarExpr::coth(std::move(coeffs), constant);
  }
  throw ParseError("unknown s-expression operator '" + head + "'");
}

ScalarExpr ScalarExpr::parse(const std::string& text) { return scalar_from_sexpr(SExpr::parse(text)); }

}  // namespace sdyn
