#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conebound/polynomial.hpp"

namespace conebound {

/// Syntax or validation error in textual input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Field-independent parse result: rational coefficient times exponent vector.
struct RawTerm {
  BigInt num;
  BigInt den;
  std::vector<int> exponents;
};
using RawPolynomial = std::vector<RawTerm>;

/// Parses `x^2*y - 3*z + 1` style text over the given variable names.
/// `line` and `column` locate the text inside a larger document for errors.
RawPolynomial parse_raw_polynomial(std::string_view text, const std::vector<std::string>& names,
                                   int line = 1, int column = 1);

/// Splits a comma separated list, tracking the column where each piece starts.
std::vector<std::pair<std::string, int>> split_list(std::string_view text, int column = 1);

template <class F>
Polynomial<F> to_polynomial(const PolyRing<F>& ring, const RawPolynomial& raw) {
  std::vector<Term<F>> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw)
    terms.push_back(Term<F>{Monomial(std::span<const int>(t.exponents)),
                            ring.field().from_rational(t.num, t.den)});
  return ring.from_terms(std::move(terms));
}

template <class F>
Polynomial<F> parse_polynomial(const PolyRing<F>& ring, std::string_view text) {
  return to_polynomial(ring, parse_raw_polynomial(text, ring.names()));
}

}  // namespace conebound
