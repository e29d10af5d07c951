#include "conebound/arith.hpp"

#include <limits>

namespace conebound {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  }
  // C(-m, k) = (-1)^k C(m + k - 1, k)
  BigInt m = -n;
  BigInt top = m + k - 1;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigInt binomial(long n, long k) { return binomial(BigInt(n), k); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::int64_t to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t()))
    throw MathError("integer " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw MathError(std::to_string(p) + " exceeds the machine prime limit 2^31");
  if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw MathError("division by zero in " + name());
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_integer(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_rational(const BigInt& num, const BigInt& den) const {
  Element d = from_integer(den);
  if (d == 0) throw MathError("denominator " + den.get_str() + " vanishes in " + name());
  return div(from_integer(num), d);
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw MathError("division by zero in Q");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::from_rational(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw MathError("zero denominator");
  Element r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace conebound
