#pragma once

#include <string>
#include <vector>

#include "conebound/arith.hpp"
#include "conebound/monomial.hpp"

namespace conebound {

/// Integer Laurent polynomial Σ c_k t^(offset + k), kept trimmed.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int offset, std::vector<BigInt> coeffs);
  static LaurentPolynomial monomial(int exponent, const BigInt& c = 1);
  static LaurentPolynomial one() { return monomial(0); }

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return offset_; }
  int high_degree() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int exponent) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial shifted(int by) const;
  bool operator==(const LaurentPolynomial& o) const = default;

  BigInt evaluate_at_one() const;
  /// Exact division by (1 - t); requires a root at t = 1.
  LaurentPolynomial divide_one_minus_t() const;
  /// c^{(i)}(1)/i!, i.e. Σ c_k C(offset + k, i).
  BigInt derivative_at_one(int i) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  int offset_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Numerator N(t) with Σ dim_k (S/J)_j t^j = N(t) / (1-t)^n for the monomial
/// ideal J generated by `gens` in n variables, by pivot recursion.
LaurentPolynomial hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// Removes non-minimal generators (those divisible by another generator).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// Largest size of a set of variables containing no generator's support:
/// the Krull dimension of S/J. Returns -1 when J contains 1.
int monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

/// Hilbert series N(t)/(1-t)^n of a graded module, with derived data.
class HilbertSeries {
 public:
  HilbertSeries(LaurentPolynomial numerator, int nvars);

  const LaurentPolynomial& numerator() const { return numerator_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Krull dimension (pole order at t = 1); -1 for the zero module.
  int dimension() const { return dimension_; }
  /// Q(t) with HS = Q(t)/(1-t)^d, Q(1) != 0.
  const LaurentPolynomial& reduced_numerator() const { return reduced_; }
  /// Q(1); throws for the zero module.
  BigInt multiplicity() const;

  /// Hilbert function value dim_k M_j.
  BigInt value(int j) const;
  /// Hilbert polynomial evaluated at an integer.
  BigInt polynomial_value(int j) const;
  /// Coefficients (constant term first) of the Hilbert polynomial in X.
  std::vector<BigRational> polynomial_coefficients() const;
  /// Σ_{i <= n} value(i); the Hilbert-Samuel function of the local ring when
  /// this is the series of its tangent cone.
  BigInt samuel_value(int n) const;
  /// Hilbert-Samuel polynomial Σ (-1)^i e_i C(X+d-i, d-i) evaluated at n.
  BigInt samuel_polynomial_value(int n) const;
  /// e_0..e_d read from Q(t): e_i = Q^{(i)}(1)/i!.
  std::vector<BigInt> samuel_coefficients() const;
  /// Total k-dimension; throws when the dimension is positive.
  BigInt total_length() const;

 private:
  LaurentPolynomial numerator_;
  int nvars_;
  int dimension_ = -1;
  LaurentPolynomial reduced_;
};

}  // namespace conebound
