#include <random>

#include "doctest.h"
#include "conebound/arith.hpp"

using namespace conebound;

TEST_SUITE("arith") {

TEST_CASE("prime field operations") {
  PrimeField f5(5), f7(7);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f7.inv(3) == 5);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.to_string(4) == "-1");
  CHECK_THROWS_AS(f5.inv(0), MathError);
  CHECK_THROWS_WITH(PrimeField(4), "4 is not prime");
  CHECK(f7.from_rational(1, 2) == 4);
  CHECK(f7.from_integer(-1) == 6);
}

TEST_CASE("field axioms on random residues") {
  PrimeField f(32003);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    auto a = static_cast<std::uint32_t>(rng() % 32003);
    auto b = static_cast<std::uint32_t>(rng() % 32003);
    auto c = static_cast<std::uint32_t>(rng() % 32003);
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("rationals stay canonical") {
  RationalField q;
  auto s = q.add(BigRational(1, 2), BigRational(1, 3));
  CHECK(s == BigRational(5, 6));
  CHECK(q.to_string(q.from_rational(4, -6)) == "-2/3");
  CHECK_THROWS_AS(q.inv(q.zero()), MathError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-3, 3) == -10);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  for (long n = -8; n <= 12; ++n) CHECK(binomial(n, 0) == 1);
  for (long n = 1; n <= 25; ++n)
    for (long k = 1; k <= 25; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
  CHECK(binomial(BigInt("100000000000000000000"), 2) == BigInt("4999999999999999999950000000000000000000"));
}

TEST_CASE("big integer helpers") {
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(power(3, 40) == BigInt("12157665459056928801"));
  CHECK(to_int64(BigInt(-5)) == -5);
  CHECK_THROWS_AS(to_int64(power(2, 70)), MathError);
}

}
