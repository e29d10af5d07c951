#include <random>

#include "doctest.h"
#include "conebound/invariants.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace conebound;
using test::ideal;
using test::make_ring;
using test::poly;

namespace {

constexpr std::uint64_t kP = 32003;

std::string family_generator(int r) { return "x*y^" + std::to_string(r); }

Ideal<PrimeField> family(const test::Ring& ring, int r) {
  return Ideal<PrimeField>(ring, {poly(ring, "x^2"), poly(ring, family_generator(r))});
}

Ideal<PrimeField> random_homogeneous(std::mt19937_64& rng, std::size_t& nvars) {
  nvars = 2 + rng() % 3;
  std::vector<std::string> names{"a", "b", "c", "d"};
  names.resize(nvars);
  auto r = make_ring(names);
  std::vector<test::Poly> gens;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < count; ++k) {
    int d = 1 + static_cast<int>(rng() % 4);
    auto mons = oracle::monomials_of_degree(nvars, d);
    auto f = r->monomial(Monomial(std::span<const int>(mons[rng() % mons.size()])));
    if (rng() % 2) {
      auto g = r->monomial(Monomial(std::span<const int>(mons[rng() % mons.size()])));
      f = r->sub(f, r->scale(g, static_cast<std::uint32_t>(1 + rng() % 7)));
    }
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal<PrimeField>(r, gens);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("Hilbert numerators of monomial ideals") {
  CHECK(hilbert_numerator({}, 3) == LaurentPolynomial::one());
  auto x2 = Monomial(std::vector<int>{2, 0});
  auto xy = Monomial(std::vector<int>{1, 1});
  CHECK(hilbert_numerator({x2, xy}, 2) == LaurentPolynomial(0, {1, 0, -2, 1}));
  CHECK(hilbert_numerator({Monomial(std::vector<int>{1, 0})}, 2) == LaurentPolynomial(0, {1, -1}));
}

TEST_CASE("Hilbert functions and polynomials") {
  auto r = make_ring({"x", "y"});
  auto hs = quotient_hilbert_series(ideal(r, {"x^2", "x*y"}));
  std::vector<int> expected{1, 2, 1, 1, 1, 1};
  for (int n = 0; n < 6; ++n) CHECK(hs.value(n) == expected[static_cast<std::size_t>(n)]);
  auto p = hs.polynomial_coefficients();
  REQUIRE(p.size() == 1);
  CHECK(p[0] == 1);
  auto full = quotient_hilbert_series(Ideal<PrimeField>(r, {}));
  CHECK(full.polynomial_coefficients() == std::vector<BigRational>{1, 1});
  for (int rr = 1; rr <= 6; ++rr) {
    auto s = quotient_hilbert_series(family(r, rr));
    CHECK(s.value(0) == 1);
    for (int n = 1; n <= rr + 6; ++n) CHECK(s.value(n) == (n <= rr ? 2 : 1));
  }
}

TEST_CASE("Hilbert-Samuel data of the example family") {
  auto r = make_ring({"x", "y"});
  for (int rr = 1; rr <= 6; ++rr) {
    auto g = graded_ring(family(r, rr));
    auto data = hilbert_samuel(g.series, regularity(g));
    CHECK(data.dimension == 1);
    CHECK(data.horizon == rr + 11);
    for (int n = 0; n <= data.horizon; ++n)
      CHECK(data.samuel[static_cast<std::size_t>(n)] == (n <= rr ? 2 * n + 1 : n + rr + 1));
    REQUIRE(data.e.size() == 2);
    CHECK(data.e[0] == 1);
    CHECK(data.e[1] == -rr);
    for (int n = rr + 1; n <= rr + 5; ++n) CHECK(data.samuel_polynomial(n) == n + rr + 1);
    // Differencing the Samuel values recovers h.
    for (int n = 1; n <= data.horizon; ++n)
      CHECK(data.samuel[static_cast<std::size_t>(n)] - data.samuel[static_cast<std::size_t>(n - 1)] ==
            data.hilbert[static_cast<std::size_t>(n)]);
  }
  auto s3 = make_ring({"x", "y", "z"});
  auto regular = graded_ring(Ideal<PrimeField>(s3, {}));
  auto data = hilbert_samuel(regular.series, regularity(regular));
  for (int n = 0; n <= data.horizon; ++n) CHECK(data.samuel[static_cast<std::size_t>(n)] == binomial(n + 3, 3));
  CHECK(data.e == std::vector<BigInt>{1, 0, 0, 0});
}

TEST_CASE("dimension zero reports the total length") {
  auto r = make_ring({"x", "y"});
  auto g = graded_ring(ideal(r, {"x^2", "y^3"}));
  auto data = hilbert_samuel(g.series, regularity(g));
  CHECK(data.dimension == 0);
  CHECK(data.e == std::vector<BigInt>{6});
  CHECK(data.samuel.back() == 6);
}

TEST_CASE("regularity by two routes") {
  auto r = make_ring({"x", "y"});
  CHECK(regularity(graded_ring(ideal(r, {"x^2", "x*y"}))) == 1);
  for (int rr = 1; rr <= 6; ++rr) CHECK(regularity(graded_ring(family(r, rr))) == rr);
  CHECK(regularity(graded_ring(Ideal<PrimeField>(r, {}))) == 0);
  CHECK(regularity(graded_ring(ideal(r, {"x^3", "y^4"}))) == 5);
}

TEST_CASE("local cohomology of k[x,y]/(x^2, xy)") {
  auto r = make_ring({"x", "y"});
  auto g = graded_ring(ideal(r, {"x^2", "x*y"}));
  auto table = cohomology_table(g);
  // H^0 = (x) is k in degree 1.
  CHECK(table.a(0) == 1);
  CHECK(table.dim(0, 1) == 1);
  CHECK(table.dim(0, 0) == 0);
  // H^1 = H^1 of k[y]: dimension 1 in every negative degree.
  CHECK(table.a(1) == -1);
  for (int m = -8; m <= -1; ++m) CHECK(table.dim(1, m) == 1);
  CHECK(table.dim(1, 0) == 0);
  CHECK_FALSE(table.a(2).has_value());
  CHECK(table.regularity() == 1);
  CHECK(table.g_regularity() == 0);
  CHECK(table.nonvanishing(1, -3).size() == 3);
  CHECK(weak_regularity(table) == 1);

  auto poly_ring = cohomology_table(graded_ring(Ideal<PrimeField>(r, {})));
  CHECK(poly_ring.g_regularity() == 0);
  CHECK(poly_ring.regularity() == 0);
  CHECK(poly_ring.a(2) == -2);
}

TEST_CASE("reg(G') and the finite-length part") {
  auto r = make_ring({"x", "y"});
  auto q = reg_of_quotient_mod_L(ideal(r, {"x^2", "x*y"}));
  CHECK(q.length == 1);
  CHECK(q.reg_quotient == 0);
  CHECK(q.saturation == ideal(r, {"x"}));
  for (int rr = 1; rr <= 5; ++rr) {
    auto f = reg_of_quotient_mod_L(family(r, rr));
    CHECK(f.length == rr);
    CHECK(f.reg_quotient == 0);
    CHECK(regularity(graded_ring(family(r, rr))) <= *f.reg_quotient + f.length);
  }
  auto cm = reg_of_quotient_mod_L(ideal(r, {"x^2"}));
  CHECK(cm.length == 0);
  CHECK(cm.reg_quotient == 1);
  auto artinian = reg_of_quotient_mod_L(ideal(r, {"x^2", "y^2"}));
  CHECK(artinian.length == 4);
  CHECK_FALSE(artinian.reg_quotient.has_value());
}

TEST_CASE("non-homogeneous and unit inputs are rejected") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(graded_ring(ideal(r, {"x^2 - y^5"})), MathError);
  CHECK_THROWS_AS(graded_ring(ideal(r, {"x", "1"})), MathError);
}

TEST_CASE("random homogeneous ideals: Serre, local duality and regularity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 0;
    auto I = random_homogeneous(rng, n);
    if (I.is_unit()) continue;
    auto g = graded_ring(I);
    const int reg = regularity(g);
    CHECK(reg >= 0);
    auto table = cohomology_table(g);
    CHECK(weak_regularity(table) == reg);
    auto greg = table.g_regularity();
    if (greg) CHECK(*greg <= reg);
    if (depth_from_betti(g.resolution) > 0) CHECK(greg == reg);
    auto oracle_gens = oracle::sparse(I.generators());
    for (int d = 0; d <= 12; ++d) CHECK(g.series.value(d) == oracle::quotient_piece_dim(oracle_gens, n, d, kP));
    for (int m = reg + 1; m <= reg + 10; ++m) CHECK(g.series.value(m) == g.series.polynomial_value(m));
    for (int m = 0; m <= reg + 5; ++m) {
      BigInt alt = 0;
      for (int i = 0; i <= static_cast<int>(n); ++i) alt += (i % 2 == 0 ? 1 : -1) * table.dim(i, m);
      CHECK(g.series.value(m) - g.series.polynomial_value(m) == alt);
    }
    for (int i = 0; i <= static_cast<int>(n); ++i)
      for (int m = -6; m <= reg + 3; ++m) {
        CHECK(table.dim(i, m) >= 0);
        if (m + i > reg) CHECK(table.dim(i, m) == 0);
      }
    auto data = hilbert_samuel(g.series, reg);
    CHECK(data.e[0] == g.series.multiplicity());
    auto q = reg_of_quotient_mod_L(I);
    if (q.reg_quotient) CHECK(BigInt(reg) <= *q.reg_quotient + q.length);
  }
}

}
