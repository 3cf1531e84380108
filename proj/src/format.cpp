#include "holozeta/format.hpp"

#include <cctype>

namespace holozeta {

std::string WeylOperator::str() const { return to_string(*this); }

std::string to_string(const WeylOperator& op) {
  if (op.is_zero()) return "0";
  const RingSignature& sig = *op.ring();
  std::string out;
  bool first = true;
  for (const Term& t : op.terms()) {
    std::string word;
    for (int v = 0; v < sig.num_vars(); ++v) {
      const unsigned e = t.mono[v];
      if (!e) continue;
      if (!word.empty()) word += '*';
      word += sig.var_name(v);
      if (e > 1) word += '^' + std::to_string(e);
    }
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    std::string body;
    if (word.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = word;
    } else {
      body = mag.get_str() + "*" + word;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, int line) : text_(text), ring_(ring), line_(line) {}

  WeylOperator parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    WeylOperator r = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  WeylOperator expr() {
    WeylOperator acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  WeylOperator term() {
    WeylOperator acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, unary());
        continue;
      }
      skip_ws();
      if (pos_ < text_.size() &&
          (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
           text_[pos_] == '_'))
        fail("implicit multiplication is not allowed; use '*'");
      return acc;
    }
  }

  WeylOperator unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power_expr();
  }

  WeylOperator power_expr() {
    WeylOperator base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a nonnegative integer literal");
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 1000) fail("exponent too large");
        ++pos_;
      }
      return power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  WeylOperator atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeylOperator r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("malformed rational");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      const std::string lit(text_.substr(start, pos_ - start));
      Rational q;
      try {
        q = parse_rational(lit);
      } catch (const InputError&) {
        pos_ = start;
        fail("malformed rational '" + lit + "'");
      }
      return WeylOperator::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int v = ring_->find_var(name);
      if (v < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return WeylOperator::variable(ring_, v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOperator parse_operator(std::string_view text, const Ring& ring, int line) {
  return Parser(text, ring, line).parse();
}

}  // namespace holozeta
