#include "conebound/parse.hpp"

#include <cctype>

namespace conebound {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, int line, int column)
      : text_(text), names_(names), line_(line), column_(column) {}

  RawPolynomial parse() {
    RawPolynomial out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      first = false;
      RawTerm t = parse_term();
      if (sign < 0) t.num = -t.num;
      out.push_back(std::move(t));
      skip_space();
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm t{BigInt(1), BigInt(1), std::vector<int>(names_.size(), 0)};
    parse_factor(t);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      parse_factor(t);
      skip_space();
    }
    return t;
  }

  void parse_factor(RawTerm& t) {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_integer();
      BigInt den(1);
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) fail_at(at, "zero denominator");
      }
      t.num *= num;
      t.den *= den;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t index = names_.size();
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) index = i;
      if (index == names_.size()) fail_at(start, "unknown variable '" + name + "'");
      long power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        BigInt e = parse_integer();
        if (e > 32767) fail_at(at, "exponent too large");
        power = e.get_si();
      }
      t.exponents[index] += static_cast<int>(power);
      if (t.exponents[index] > 32767) fail_at(start, "exponent too large");
      return;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  BigInt parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(at));
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

RawPolynomial parse_raw_polynomial(std::string_view text, const std::vector<std::string>& names,
                                   int line, int column) {
  return PolyParser(text, names, line, column).parse();
}

std::vector<std::pair<std::string, int>> split_list(std::string_view text, int column) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::size_t b = start, e = i;
      while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
      out.emplace_back(std::string(text.substr(b, e - b)), column + static_cast<int>(b));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace conebound
