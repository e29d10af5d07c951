#include <random>

#include "doctest.h"
#include "conebound/resolution.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace conebound;
using test::make_ring;
using test::poly;
using test::polys;

namespace {

constexpr std::uint64_t kP = 32003;

GradedPresentation<PrimeField> quotient(const test::Ring& r, std::initializer_list<const char*> gens) {
  return cyclic_presentation(r, polys(r, gens));
}

std::vector<test::Poly> random_monomials(const test::Ring& r, std::mt19937_64& rng, int count, int max_deg) {
  std::vector<test::Poly> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(r->nvars());
    int d = 1 + static_cast<int>(rng() % max_deg);
    for (int t = 0; t < d; ++t) ++e[rng() % e.size()];
    out.push_back(r->monomial(Monomial(std::span<const int>(e))));
  }
  return out;
}

std::vector<test::Poly> random_binomials(const test::Ring& r, std::mt19937_64& rng, int count, int max_deg) {
  std::vector<test::Poly> out;
  for (int k = 0; k < count; ++k) {
    int d = 1 + static_cast<int>(rng() % max_deg);
    auto mons = oracle::monomials_of_degree(r->nvars(), d);
    const auto& a = mons[rng() % mons.size()];
    const auto& b = mons[rng() % mons.size()];
    auto f = r->from_terms({{Monomial(std::span<const int>(a)), 1},
                            {Monomial(std::span<const int>(b)), static_cast<std::uint32_t>(kP - 1 - rng() % 5)}});
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

// Degree-by-degree exactness of the resolution of M (d <= top) by rank counts.
void check_exact(const FreeResolution<PrimeField>& res, const GradedPresentation<PrimeField>& m, int top) {
  const std::size_t n = res.ring->nvars();
  for (std::size_t k = 1; k < res.maps.size(); ++k)
    for (const auto& v : compose(res, k)) CHECK(FreeModule<PrimeField>::is_zero(v));
  for (int d = -2; d <= top; ++d) {
    // M_d = F_0 / im d_1
    long rank1 = res.maps.empty() ? 0 : oracle::map_rank(res.maps[0], res.degrees[1], res.degrees[0], n, d, kP);
    long mdim = oracle::free_piece_dim(m.generator_degrees, n, d) -
                oracle::map_rank(m.relations, m.relation_degrees, m.generator_degrees, n, d, kP);
    CHECK(oracle::free_piece_dim(res.degrees[0], n, d) - rank1 == mdim);
    for (std::size_t i = 1; i < res.degrees.size(); ++i) {
      long ker = oracle::free_piece_dim(res.degrees[i], n, d) -
                 oracle::map_rank(res.maps[i - 1], res.degrees[i], res.degrees[i - 1], n, d, kP);
      long im = i < res.maps.size() ? oracle::map_rank(res.maps[i], res.degrees[i + 1], res.degrees[i], n, d, kP) : 0;
      CHECK(ker == im);
    }
  }
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("syzygies of a row") {
  auto r = make_ring({"x", "y"});
  auto syz = syzygies(quotient(r, {"x^2", "x*y"}));
  REQUIRE(syz.num_relations() == 1);
  CHECK(syz.relation_degrees[0] == 3);
  CHECK(syz.relations[0][0] == r->scale(poly(r, "y"), syz.relations[0][0].lead().coeff));
  CHECK(r->add(r->mul(syz.relations[0][0], poly(r, "x^2")), r->mul(syz.relations[0][1], poly(r, "x*y"))).is_zero());
  // The syzygy module is principal: compare ranks with multiples of (y, -x).
  GradedPresentation<PrimeField> row;
  row.ring = r;
  row.generator_degrees = {0};
  row.relation_degrees = {2, 2};
  row.relations = {{poly(r, "x^2")}, {poly(r, "x*y")}};
  for (int d = 0; d <= 6; ++d) {
    long image = oracle::map_rank(row.relations, row.relation_degrees, row.generator_degrees, 2, d, kP);
    long kernel = oracle::free_piece_dim({2, 2}, 2, d) - image;
    CHECK(kernel == oracle::free_piece_dim({3}, 2, d));
  }
  CHECK(syzygies(quotient(r, {"x^2 + y^2"})).num_relations() == 0);
  GradedPresentation<PrimeField> unit;
  unit.ring = r;
  unit.generator_degrees = {0};
  unit.relation_degrees = {0};
  unit.relations = {{r->one()}};
  CHECK(prune(unit).num_generators() == 0);
  CHECK(syzygies(prune(unit)).num_relations() == 0);
}

TEST_CASE("resolutions of the example family") {
  auto r = make_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  auto res = free_resolution(m);
  auto betti = betti_table(res);
  CHECK(betti.at(0, 0) == 1);
  CHECK(betti.at(1, 2) == 2);
  CHECK(betti.at(2, 3) == 1);
  CHECK(betti.entries().size() == 3);
  CHECK(betti.projective_dimension() == 2);
  CHECK(depth_from_betti(res) == 0);
  CHECK(betti.regularity() == 1);
  check_exact(res, m, 6);
  for (int rr = 1; rr <= 5; ++rr) {
    std::string g = "x*y^" + std::to_string(rr);
    auto mr = cyclic_presentation(r, polys(r, {"x^2", g.c_str()}));
    auto b = betti_table(free_resolution(mr));
    CHECK(b.at(1, 2) == (rr == 1 ? 2 : 1));
    if (rr > 1) CHECK(b.at(1, rr + 1) == 1);
    CHECK(b.at(2, rr + 2) == 1);
    CHECK(b.regularity() == rr);
  }
}

TEST_CASE("small Betti tables") {
  auto r = make_ring({"x", "y"});
  auto hyper = free_resolution(quotient(r, {"x^2"}));
  CHECK(betti_table(hyper).at(1, 2) == 1);
  CHECK(depth_from_betti(hyper) == 1);
  auto free = free_resolution(free_presentation(r, {0}));
  CHECK(free.length() == 0);
  CHECK(depth_from_betti(free) == 2);
  CHECK(betti_table(free).regularity() == 0);
  auto table = betti_table(free_resolution(quotient(r, {"x^2", "x*y"}))).to_string();
  CHECK(table.find("0: 1 . .") != std::string::npos);
  CHECK(table.find("1: . 2 1") != std::string::npos);
}

TEST_CASE("Betti table rejects non-minimal resolutions") {
  auto r = make_ring({"x", "y"});
  GradedPresentation<PrimeField> m;
  m.ring = r;
  m.generator_degrees = {0, 1};
  m.relation_degrees = {1, 2};
  m.relations = {{poly(r, "x"), r->one()}, {poly(r, "y^2"), r->zero()}};
  auto raw = free_resolution(m, false);
  CHECK_FALSE(raw.is_minimal());
  CHECK_THROWS_AS(betti_table(raw), MathError);
  auto minimized = minimize_resolution(raw);
  CHECK(betti_table(minimized).entries() == betti_table(free_resolution(m)).entries());
}

TEST_CASE("random ideals: exactness, invariance and the syzygy theorem") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 2 + rng() % 2;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto r = make_ring(names);
    auto gens = (t % 2 == 0) ? random_monomials(r, rng, 4, 4) : random_binomials(r, rng, 3, 3);
    auto m = cyclic_presentation(r, gens);
    auto res = free_resolution(m);
    auto betti = betti_table(res);
    CHECK(betti.projective_dimension() <= static_cast<int>(n));
    CHECK(depth_from_betti(res) + betti.projective_dimension() == static_cast<int>(n));
    check_exact(res, m, 8);

    auto minimized = minimize_resolution(free_resolution(m, false));
    CHECK(betti_table(minimized).entries() == betti.entries());

    auto lex = make_ring(names, TermOrder::lex());
    std::vector<test::Poly> lex_gens;
    for (const auto& g : gens) lex_gens.push_back(lex->import(g, *r));
    CHECK(betti_table(free_resolution(cyclic_presentation(lex, lex_gens))).entries() == betti.entries());

    // Euler characteristic against the Hilbert function of M.
    auto hs = module_hilbert_series(m);
    for (int d = 0; d <= 10; ++d) {
      long euler = 0;
      for (const auto& [key, b] : betti.entries())
        euler += (key.first % 2 == 0 ? 1 : -1) * b * oracle::free_piece_dim({key.second}, n, d);
      CHECK(BigInt(euler) == hs.value(d));
      CHECK(graded_piece_dim(m, d) == oracle::quotient_piece_dim(oracle::sparse(gens), n, d, kP));
    }
  }
}

TEST_CASE("graded pieces") {
  auto r = make_ring({"x", "y"});
  CHECK(graded_piece_dim(quotient(r, {"x^2", "x*y"}), 1) == 2);
  CHECK(graded_piece_dim(quotient(r, {"x^2", "x*y"}), -1) == 0);
  CHECK(graded_piece_dim(free_presentation(r, {0}), 3) == 4);
  CHECK(graded_piece_dim(free_presentation(r, {2, -1}), 0) == 2);
}

TEST_CASE("ext modules") {
  auto r = make_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  auto res = free_resolution(m);
  auto ext2 = ext_module(res, 2);
  auto hs2 = module_hilbert_series(ext2);
  CHECK(hs2.dimension() == 0);
  CHECK(hs2.total_length() == 1);
  CHECK(graded_piece_dim(ext2, -3) == 1);
  CHECK(module_hilbert_series(ext_module(res, 0)).is_zero());
  // Ext^1(S/(x^2, xy), S) ≅ S/(x) shifted: dimension 1, multiplicity 1.
  auto hs1 = module_hilbert_series(ext_module(res, 1));
  CHECK(hs1.dimension() == 1);
  CHECK(hs1.multiplicity() == 1);
  CHECK(module_hilbert_series(ext_module(res, 3)).is_zero());

  auto free = free_resolution(free_presentation(r, {0}));
  CHECK(module_hilbert_series(ext_module(free, 0)).value(0) == 1);
  for (int i = 1; i <= 2; ++i) CHECK(module_hilbert_series(ext_module(free, i)).is_zero());

  auto point = free_resolution(quotient(r, {"x", "y"}));
  auto top = ext_module(point, 2);
  CHECK(top.generator_degrees == std::vector<int>{-2});
  CHECK(module_hilbert_series(top).total_length() == 1);
}

}
