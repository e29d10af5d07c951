#include <random>
#include <set>

#include "doctest.h"
#include "conebound/analysis.hpp"
#include "conebound/parse.hpp"

using namespace conebound;

namespace {

std::string without_timing(const AnalysisReport& rep) { return rep.to_json(false).dump(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("instance grammar") {
  auto a = parse_instance("field: F32003\nvars: x,y\nideal: x^2, x*y^3");
  CHECK(a.field == InstanceSpec::FieldKind::Prime);
  CHECK(a.characteristic == 32003);
  CHECK(a.vars == std::vector<std::string>{"x", "y"});
  CHECK(a.generators == std::vector<std::string>{"x^2", "x*y^3"});

  auto b = parse_instance("# a comment\n\nfield: Q\nvars: x\nideal: x^2 - x^3\nextdeg: 3\nlabel: cusp-ish\n");
  CHECK(b.field == InstanceSpec::FieldKind::Rational);
  CHECK(b.extdeg == BigInt(3));
  CHECK(b.label == "cusp-ish");

  auto empty = parse_instance("field: F7\nvars: x, y\nideal:\n");
  CHECK(empty.generators.empty());
}

TEST_CASE("instance errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_instance("field: F4\nvars: x\nideal: x\n"), "line 1, column 9: 4 is not prime",
                       ParseError);
  try {
    parse_instance("field: F7\nvars: x, y\nideal: x^2, x*z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 13);
  }
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x, x\nideal: x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x\nideal: x\nideal: x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x\nideal: x\ncolour: red\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x\nideal: x\nextdeg: two\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: F7\nvars: x\nideal: x/7\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("field: R\nvars: x\nideal: x\n"), ParseError);
}

TEST_CASE("emit and parse round trip") {
  for (int r = 1; r <= 4; ++r) {
    auto spec = example_family(r);
    CHECK(parse_instance(emit_instance(spec)) == spec);
  }
  for (const auto& spec : monomial_corpus(3, 20)) CHECK(parse_instance(emit_instance(spec)) == spec);
  for (const auto& spec : binomial_corpus(3, 20)) CHECK(parse_instance(emit_instance(spec)) == spec);
  auto q = parse_instance("label: q\nfield: Q\nvars: a, b\nideal: a^2 - 1/2*b^3\nextdeg: 12\n");
  CHECK(parse_instance(emit_instance(q)) == q);
}

TEST_CASE("example family") {
  CHECK(example_family(1).generators == std::vector<std::string>{"x^2", "x*y"});
  CHECK(example_family(5).generators == std::vector<std::string>{"x^2", "x*y^5"});
  CHECK_THROWS_AS(example_family(0), std::invalid_argument);
}

TEST_CASE("analysis of the family r = 2") {
  auto rep = analyze(example_family(2));
  CHECK(rep.e == 1);
  CHECK(rep.deviation == BigInt(2));
  CHECK(rep.reg == 2);
  CHECK(rep.e_coeffs == std::vector<BigInt>{1, -2});
  CHECK(rep.all_hold());
  CHECK(rep.hdeg_source == "hdeg");
  auto j = rep.to_json();
  for (const char* key : {"instance", "dim", "depth", "e", "hdeg", "deviation", "lengthL", "reg", "greg", "betti", "hs",
                          "e_coeffs", "verdicts", "skipped"})
    CHECK(j.contains(key));
  CHECK(j["betti"][0] == nlohmann::json::array({0, 0, 1}));
  CHECK(j["verdicts"][0].contains("thm"));
  CHECK(rep.to_text().find("VIOLATED") == std::string::npos);
}

TEST_CASE("analysis of the zero ideal") {
  auto rep = analyze(parse_instance("field: F101\nvars: x, y, z\nideal:\n"));
  CHECK(rep.dim == 3);
  CHECK(rep.depth == 3);
  CHECK(rep.e == 1);
  CHECK(rep.hdeg == BigInt(1));
  CHECK(rep.reg == 0);
  CHECK(rep.greg == 0);
  CHECK(rep.length_L == 0);
  CHECK(rep.e_coeffs == std::vector<BigInt>{1, 0, 0, 0});
  for (std::size_t n = 0; n < rep.samuel.size(); ++n) CHECK(rep.samuel[n] == binomial(static_cast<long>(n) + 3, 3));
  CHECK(rep.all_hold());
}

TEST_CASE("non-homogeneous input") {
  auto rep = analyze(parse_instance("field: F32003\nvars: x, y\nideal: x^2 - y^5, x*y^2\n"));
  CHECK(std::set<std::string>(rep.tangent_cone.begin(), rep.tangent_cone.end()) ==
        std::set<std::string>{"x^2", "x*y^2", "y^7"});
  CHECK(rep.hdeg_source == "none");
  CHECK(rep.dim == 0);

  auto curve = analyze(parse_instance("field: Q\nvars: x, y\nideal: x^2 - y^3 + x*y^3\n"));
  CHECK(curve.dim == 1);
  CHECK(curve.e == 2);
  CHECK_FALSE(curve.hdeg.has_value());
  bool skipped = false;
  for (const auto& s : curve.skipped)
    if (s.rfind("uniform: skipped: no extended degree", 0) == 0) skipped = true;
  CHECK(skipped);

  auto with_degree = analyze(parse_instance("field: Q\nvars: x, y\nideal: x^2 - y^3 + x*y^3\nextdeg: 2\n"));
  CHECK(with_degree.hdeg_source == "external");
  CHECK(with_degree.deviation == BigInt(0));
  CHECK(with_degree.all_hold());

  CHECK_THROWS_AS(analyze(parse_instance("field: Q\nvars: x, y\nideal: x^2 - y^3\nextdeg: 1\n")), StageError);
  try {
    analyze(parse_instance("field: F7\nvars: x\nideal: x - 1\n"));
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "tangent-cone");
  }
}

TEST_CASE("determinism") {
  for (const auto& spec : binomial_corpus(11, 5)) {
    auto a = analyze(spec);
    auto b = analyze(spec);
    CHECK(without_timing(a) == without_timing(b));
  }
  CHECK(monomial_corpus(4, 10) == monomial_corpus(4, 10));
  CHECK_FALSE(monomial_corpus(4, 10) == monomial_corpus(5, 10));
}

TEST_CASE("corpus generators respect their limits") {
  for (const auto& spec : monomial_corpus(0, 100)) {
    CHECK(spec.vars.size() >= 1);
    CHECK(spec.vars.size() <= 4);
    CHECK(spec.generators.size() >= 1);
    CHECK(spec.generators.size() <= 5);
  }
  for (const auto& spec : binomial_corpus(0, 50)) {
    CHECK(spec.vars.size() <= 4);
    CHECK(spec.field == InstanceSpec::FieldKind::Prime);
    CHECK(spec.characteristic == 32003);
  }
}

TEST_CASE("parallel corpus run equals the serial reference") {
  auto corpus = monomial_corpus(9, 30);
  auto more = binomial_corpus(9, 10);
  corpus.insert(corpus.end(), more.begin(), more.end());
  auto serial = corpus_run(corpus, Execution::Serial);
  auto parallel = corpus_run(corpus, Execution::Parallel);
  CHECK(serial.violations == 0);
  CHECK(serial.errors == 0);
  CHECK(serial.verdicts == parallel.verdicts);
  CHECK(serial.per_theorem == parallel.per_theorem);
  REQUIRE(serial.reports.size() == parallel.reports.size());
  for (std::size_t k = 0; k < serial.reports.size(); ++k)
    CHECK(without_timing(serial.reports[k]) == without_timing(parallel.reports[k]));
}

TEST_CASE("BigInt JSON encoding") {
  CHECK(bigint_json(BigInt(42)) == 42);
  BigInt huge("123456789012345678901234567890");
  CHECK(bigint_json(huge) == "123456789012345678901234567890");
}

}
