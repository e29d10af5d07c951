// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "conebound/analysis.hpp"
#include "conebound/extdeg.hpp"
#include "conebound/invariants.hpp"
#include "conebound/parse.hpp"
#include "oracles.hpp"

using namespace conebound;

namespace {

constexpr std::uint64_t kP = 32003;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::ostringstream problems;
  int problem_count = 0;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problem_count++ < 5) problems << "\n      " << what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Corpus {
  std::vector<InstanceSpec> specs;
};

Corpus acceptance_corpus() {
  Corpus c;
  c.specs = monomial_corpus(0, 100);
  auto binomials = binomial_corpus(0, 50);
  c.specs.insert(c.specs.end(), binomials.begin(), binomials.end());
  return c;
}

Ideal<PrimeField> ideal_of(const InstanceSpec& spec) {
  auto ring = std::make_shared<const PolyRing<PrimeField>>(PrimeField(spec.characteristic), spec.vars,
                                                           TermOrder::grevlex());
  std::vector<Polynomial<PrimeField>> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_polynomial(*ring, g));
  return Ideal<PrimeField>(ring, gens);
}

void criterion_family(Outcome& out) {
  const auto start = Clock::now();
  for (int r = 1; r <= 8; ++r) {
    auto rep = analyze(example_family(r));
    const std::string tag = "r=" + std::to_string(r) + ": ";
    out.require(static_cast<int>(rep.samuel.size()) > r + 10, tag + "horizon too short");
    for (int n = 0; n <= r + 10 && n < static_cast<int>(rep.samuel.size()); ++n) {
      BigInt expect = n <= r ? 2 * n + 1 : n + r + 1;
      out.require(rep.samuel[static_cast<std::size_t>(n)] == expect,
                  tag + "l(A/m^" + std::to_string(n + 1) + ") = " + to_string(rep.samuel[static_cast<std::size_t>(n)]));
    }
    out.require(rep.length_L == r, tag + "l(L) = " + to_string(rep.length_L));
    out.require(rep.hdeg == BigInt(r + 1), tag + "hdeg");
    out.require(rep.deviation == BigInt(r), tag + "I(A)");
    out.require(rep.e_coeffs.size() == 2 && rep.e_coeffs[0] == 1 && rep.e_coeffs[1] == -r, tag + "e_0, e_1");
  }
  const double t = seconds_since(start);
  out.require(t < 5.0, "runtime " + std::to_string(t) + " s");
  out.detail = "k[[x,y]]/(x^2, xy^r), r = 1..8, n = 0..r+10 (" + std::to_string(t) + " s, limit 5 s)";
}

void criterion_tightness(Outcome& out) {
  for (int r = 1; r <= 8; ++r) {
    auto rep = analyze(example_family(r));
    bool saw_reg = false, saw_coeff = false;
    for (const auto& v : rep.verdicts) {
      if (v.theorem == "regularity") {
        saw_reg = true;
        out.require(v.bound == r && v.actual == r && v.slack == 0, "r=" + std::to_string(r) + " regularity slack " +
                                                                       to_string(v.slack));
      }
      if (v.theorem == "coeff" && v.inputs.find("i=1") != std::string::npos) {
        saw_coeff = true;
        out.require(v.bound == r && v.actual == r && v.slack == 0, "r=" + std::to_string(r) + " coeff slack " +
                                                                       to_string(v.slack));
      }
    }
    out.require(saw_reg && saw_coeff, "r=" + std::to_string(r) + ": verdict missing");
  }
  out.detail = "reg(G) = e+I-1 = r and |e_1| = e(e-1)/2+I = r with slack 0, r = 1..8";
}

void criterion_bound_suite(Outcome& out, const Corpus& corpus, CorpusSummary& summary) {
  const auto start = Clock::now();
  summary = corpus_run(corpus.specs, Execution::Parallel);
  const double t = seconds_since(start);
  out.require(summary.errors == 0, std::to_string(summary.errors) + " instances failed to analyze");
  for (const auto& f : summary.failures) out.require(false, f.label + ": " + f.detail);
  for (const char* thm : {"uniform", "uniform-weak", "regularity", "coeff", "depthzero", "hoa"})
    out.require(summary.per_theorem.count(thm) > 0, std::string("no verdicts for ") + thm);
  out.require(t < 60.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << summary.instances << " instances, " << summary.verdicts << " verdicts, " << summary.violations
    << " violations (" << t << " s, limit 60 s)";
  out.detail = d.str();
}

void criterion_oracles(Outcome& out, const Corpus& corpus) {
  long checks = 0;
  for (const auto& spec : corpus.specs) {
    auto I = ideal_of(spec);
    auto g = graded_ring(tangent_cone(I).initial_ideal);
    const std::size_t n = spec.vars.size();
    const int reg_betti = regularity_from_betti(g);
    auto table = cohomology_table(g);
    out.require(table.regularity() == reg_betti, spec.label + ": regularity routes differ");
    const auto oracle_gens = oracle::sparse(g.ideal.generators());
    for (int j = 0; j <= 12; ++j) {
      out.require(g.series.value(j) == oracle::quotient_piece_dim(oracle_gens, n, j, kP),
                  spec.label + ": h(" + std::to_string(j) + ")");
      ++checks;
    }
    for (int m = reg_betti + 1; m <= reg_betti + 10; ++m) {
      out.require(g.series.value(m) == g.series.polynomial_value(m), spec.label + ": h != p beyond reg");
      ++checks;
    }
    for (int m = 0; m <= reg_betti + 5; ++m) {
      BigInt alt = 0;
      for (int i = 0; i <= static_cast<int>(n); ++i) {
        if (i % 2 == 0)
          alt += table.dim(i, m);
        else
          alt -= table.dim(i, m);
      }
      out.require(g.series.value(m) - g.series.polynomial_value(m) == alt, spec.label + ": Serre formula");
      ++checks;
    }
  }
  out.detail = std::to_string(checks) + " Hilbert function and Serre checks, regularity by Betti table and by local duality";
}

void criterion_hdeg(Outcome& out, const Corpus& corpus) {
  int gcm = 0, cm = 0;
  for (const auto& spec : corpus.specs) {
    auto I = ideal_of(spec);
    auto presentation = cyclic_presentation(I.ring(), I.generators());
    auto rep = hdeg(presentation);
    if (rep.dim < 0) continue;
    if (rep.gcm) {
      ++gcm;
      out.require(hdeg_gcm(presentation) == rep.hdeg, spec.label + ": gCM closed form");
    }
    if (depth_from_betti(free_resolution(presentation)) == rep.dim) {
      ++cm;
      out.require(rep.hdeg == rep.e, spec.label + ": CM but hdeg != e");
    }
    auto sat = colon_saturate_maximal(I);
    out.require(hdeg(sat.saturation).hdeg + sat.length == rep.hdeg, spec.label + ": hdeg(S/I) != hdeg(S/I^sat) + l(L)");
  }
  out.detail = std::to_string(gcm) + " gCM and " + std::to_string(cm) + " CM instances, additivity on all " +
               std::to_string(corpus.specs.size());
}

void criterion_tangent_cone(Outcome& out, const Corpus& corpus) {
  int homogeneous = 0;
  for (const auto& spec : corpus.specs) {
    auto I = ideal_of(spec);
    if (!I.is_homogeneous()) continue;
    ++homogeneous;
    auto cone = tangent_cone(I);
    out.require(cone.initial_ideal.groebner_basis() == I.groebner_basis(), spec.label + ": in*(I) != I");
  }
  InstanceSpec example;
  example.vars = {"x", "y"};
  example.generators = {"x^2 - y^5", "x*y^2"};
  auto I = ideal_of(example);
  auto cone = tangent_cone(I);
  Ideal<PrimeField> target(I.ring(), {parse_polynomial(*I.ring(), "x^2"), parse_polynomial(*I.ring(), "x*y^2"),
                                      parse_polynomial(*I.ring(), "y^7")});
  out.require(cone.initial_ideal == target, "in*(x^2 - y^5, xy^2) != (x^2, xy^2, y^7)");
  auto oracle_gens = oracle::sparse(I.generators());
  for (int j = 0; j <= 9; ++j) {
    long expect = oracle::initial_form_piece_dim(oracle_gens, 2, j, 16, kP);
    long have = static_cast<long>(j + 1) - oracle::standard_monomial_count({{2, 0}, {1, 2}, {0, 7}}, 2, j);
    out.require(expect == have, "Macaulay oracle disagrees in degree " + std::to_string(j));
  }
  out.detail = std::to_string(homogeneous) + " homogeneous ideals with in*(I) = I; (x^2-y^5, xy^2) against the Macaulay oracle";
}

void criterion_identities(Outcome& out) {
  GridSpec spec;
  spec.max_d = 4;
  spec.max_e = 5;
  spec.max_I = 3;
  spec.max_i = 3;
  auto rows = bound_grid(spec, Execution::Parallel);
  std::map<std::tuple<int, long, long>, const GridRow*> at;
  for (const auto& row : rows) at[{row.d, row.e, row.I}] = &row;
  long checks = 0;
  for (const auto& row : rows) {
    if (row.I == 0) {
      out.require(row.reg == row.reg_cm, "reg CM identity");
      for (std::size_t i = 0; i < row.coeff_main.size(); ++i) {
        out.require(row.coeff_main[i] == row.coeff_cm[i], "coeff CM identity");
        out.require(row.coeff_main[i] <= row.coeff_st[i], "coeff dominance");
        checks += 2;
      }
      ++checks;
    }
    for (auto [de, di] : {std::pair{1l, 0l}, std::pair{0l, 1l}}) {
      auto it = at.find({row.d, row.e + de, row.I + di});
      if (it == at.end()) continue;
      const GridRow& next = *it->second;
      out.require(row.reg <= next.reg, "reg monotone");
      for (std::size_t n = 0; n < row.hs.size(); ++n) {
        out.require(row.hs[n] <= next.hs[n], "hs monotone");
        out.require(row.hs_weak[n] <= next.hs_weak[n], "weak hs monotone");
      }
      for (std::size_t i = 0; i < row.coeff_main.size(); ++i) out.require(row.coeff_main[i] <= next.coeff_main[i], "coeff monotone");
      checks += 1 + 2 * static_cast<long>(row.hs.size()) + static_cast<long>(row.coeff_main.size());
    }
  }
  out.detail = std::to_string(rows.size()) + " grid points, " + std::to_string(checks) + " comparisons";
}

void criterion_envelope(Outcome& out) {
  const auto start = Clock::now();
  auto one = finiteness_envelope(1, 1);
  out.require(one.count == 1, "envelope(1, 1) has " + to_string(one.count) + " candidates");
  std::size_t max_digits = 0;
  for (int d = 1; d <= 3; ++d)
    for (long q = 1; q <= 4; ++q) {
      auto env = finiteness_envelope(d, q);
      out.require(env.count >= 1, "empty envelope");
      max_digits = std::max(max_digits, env.count.get_str().size());
    }
  const double t = seconds_since(start);
  out.require(t < 10.0, "runtime " + std::to_string(t) + " s");
  out.detail = "envelope(1,1) = 1 candidate; d <= 3, q <= 4 finite, largest count has " + std::to_string(max_digits) +
               " digits (" + std::to_string(t) + " s, limit 10 s)";
}

}  // namespace

int main() {
  const Corpus corpus = acceptance_corpus();
  CorpusSummary summary;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"example family", criterion_family},
      {"tightness", criterion_tightness},
      {"bound suite", [&](Outcome& o) { criterion_bound_suite(o, corpus, summary); }},
      {"oracle cross-checks", [&](Outcome& o) { criterion_oracles(o, corpus); }},
      {"hdeg consistency", [&](Outcome& o) { criterion_hdeg(o, corpus); }},
      {"tangent cone", [&](Outcome& o) { criterion_tangent_cone(o, corpus); }},
      {"formula identities", criterion_identities},
      {"finiteness envelope", criterion_envelope},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      criteria[k].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": " << out.detail
              << out.problems.str() << "\n";
  }
  return all ? 0 : 1;
}
