#pragma once

// Exact coefficient arithmetic: prime fields, rationals, and big integers.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace conebound {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised for mathematically undefined requests (division by zero, bad modulus, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation is outside what the engine supports.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Binomial coefficient with the polynomial convention for negative upper
/// index: C(n, k) = n (n-1) ... (n-k+1) / k!, and C(n, k) = 0 for k < 0.
BigInt binomial(const BigInt& n, long k);
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);
BigInt power(const BigInt& base, unsigned long exponent);

/// Decimal rendering of a big integer.
std::string to_string(const BigInt& v);
/// Fits a big integer into int64 or throws MathError.
std::int64_t to_int64(const BigInt& v);

/// The prime field F_p for a machine-size prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_integer(long v) const;
  Element from_integer(const BigInt& v) const;
  Element from_rational(const BigInt& num, const BigInt& den) const;

  /// Symmetric representative in (-p/2, p/2], so -1 prints as "-1".
  std::string to_string(Element a) const;
  /// True when the printed representative is negative.
  bool is_negative(Element a) const { return a > p_ / 2; }
  std::string name() const { return "F" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rational numbers, elements kept in canonical (reduced, positive
/// denominator) form.
class RationalField {
 public:
  using Element = BigRational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element from_integer(long v) const { return Element(v); }
  Element from_integer(const BigInt& v) const { return Element(v); }
  Element from_rational(const BigInt& num, const BigInt& den) const;

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace conebound
