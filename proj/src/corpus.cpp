#include <chrono>
#include <random>
#include <sstream>

#include "conebound/analysis.hpp"
#include "conebound/parse.hpp"
#include "conebound/polynomial.hpp"

namespace conebound {

namespace {

const std::vector<std::string> kNames{"x", "y", "z", "w"};

std::mt19937_64 engine_for(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_exponents(std::mt19937_64& rng, int nvars, int degree) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int t = 0; t < degree; ++t) ++e[static_cast<std::size_t>(uniform(rng, 0, nvars - 1))];
  return e;
}

std::string monomial_text(const std::vector<int>& e, int nvars) {
  return Monomial(std::span<const int>(e)).to_string(std::vector<std::string>(kNames.begin(), kNames.begin() + nvars));
}

std::string reproduction_label(const char* kind, std::uint64_t seed, int index) {
  return std::string(kind) + " seed=" + std::to_string(seed) + " index=" + std::to_string(index);
}

}  // namespace

std::vector<InstanceSpec> monomial_corpus(std::uint64_t seed, int count) {
  std::vector<InstanceSpec> out;
  for (int k = 0; k < count; ++k) {
    auto rng = engine_for(seed, k);
    InstanceSpec spec;
    const int n = uniform(rng, 1, 4);
    spec.vars.assign(kNames.begin(), kNames.begin() + n);
    const int gens = uniform(rng, 1, 5);
    for (int g = 0; g < gens; ++g) spec.generators.push_back(monomial_text(random_exponents(rng, n, uniform(rng, 1, 5)), n));
    spec.label = reproduction_label("monomial", seed, k);
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<InstanceSpec> binomial_corpus(std::uint64_t seed, int count) {
  std::vector<InstanceSpec> out;
  for (int k = 0; k < count; ++k) {
    auto rng = engine_for(seed ^ 0x9e3779b97f4a7c15ull, k);
    InstanceSpec spec;
    const int n = uniform(rng, 2, 4);
    spec.vars.assign(kNames.begin(), kNames.begin() + n);
    const int gens = uniform(rng, 1, 4);
    for (int g = 0; g < gens; ++g) {
      const int degree = uniform(rng, 1, 4);
      auto a = random_exponents(rng, n, degree);
      auto b = random_exponents(rng, n, degree);
      const int c = uniform(rng, 1, 32002);
      if (a == b) {
        spec.generators.push_back(monomial_text(a, n));
      } else {
        spec.generators.push_back(monomial_text(a, n) + " - " + std::to_string(c) + "*" + monomial_text(b, n));
      }
    }
    spec.label = reproduction_label("binomial", seed, k);
    out.push_back(std::move(spec));
  }
  return out;
}

CorpusSummary corpus_run(const std::vector<InstanceSpec>& corpus, Execution mode, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const long total = static_cast<long>(corpus.size());
  std::vector<std::optional<AnalysisReport>> reports(corpus.size());
  std::vector<std::string> errors(corpus.size());
  auto work = [&](long k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      reports[i] = analyze(corpus[i], options);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  if (mode == Execution::Serial) {
    for (long k = 0; k < total; ++k) work(k);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) work(k);
  }

  CorpusSummary summary;
  summary.instances = static_cast<int>(total);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!reports[i]) {
      ++summary.errors;
      summary.failures.push_back({corpus[i].label, emit_instance(corpus[i]), "error: " + errors[i]});
      continue;
    }
    ++summary.analyzed;
    const auto& rep = *reports[i];
    for (const auto& v : rep.verdicts) {
      ++summary.verdicts;
      ++summary.per_theorem[v.theorem];
      if (!v.holds) {
        ++summary.violations;
        summary.failures.push_back({corpus[i].label, emit_instance(corpus[i]),
                                    "violation: " + v.theorem + " [" + v.inputs + "] bound " + to_string(v.bound) +
                                        " actual " + to_string(v.actual)});
      }
    }
    for (const auto& s : rep.skipped) ++summary.skipped[s.substr(0, s.find(':'))];
    summary.reports.push_back(rep);
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

nlohmann::json CorpusSummary::to_json() const {
  nlohmann::json j;
  j["instances"] = instances;
  j["analyzed"] = analyzed;
  j["verdicts"] = verdicts;
  j["violations"] = violations;
  j["errors"] = errors;
  j["per_theorem"] = per_theorem;
  j["skipped"] = skipped;
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) f.push_back({{"label", x.label}, {"instance", x.instance}, {"detail", x.detail}});
  j["failures"] = f;
  j["seconds"] = seconds;
  return j;
}

std::string CorpusSummary::to_text() const {
  std::ostringstream out;
  out << "instances " << instances << "  analyzed " << analyzed << "  errors " << errors << "\n";
  out << "verdicts " << verdicts << "  violations " << violations << "\n";
  for (const auto& [thm, n] : per_theorem) out << "  " << thm << ": " << n << "\n";
  for (const auto& [what, n] : skipped) out << "  skipped " << what << ": " << n << "\n";
  for (const auto& f : failures) out << "FAIL " << f.label << "  " << f.detail << "\n" << f.instance;
  out << "elapsed " << seconds << " s\n";
  return out.str();
}

}  // namespace conebound
