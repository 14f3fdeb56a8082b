#include <algorithm>
#include <cctype>
#include <sstream>

#include "exactalg/multipoly.hpp"

namespace adeflat {

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) body = mag.get_str();
    else if (mag == 1) body = mono;
    else body = mag.get_str() + '*' + mono;
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    // unify variable list of the final result
    return p.embedded(merge_vars(vars_, p.vars()));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return s_.substr(b, pos_ - b);
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  MultiPoly factor() {
    if (accept('-')) return -factor();
    MultiPoly base = primary();
    if (accept('^')) {
      const long e = std::stol(digits());
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }
  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) num += "/" + digits();
      return MultiPoly(vars_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(b, pos_ - b);
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
      return MultiPoly::variable(name, vars_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> vars) {
  return Parser(text, std::move(vars)).run();
}

}  // namespace adeflat
