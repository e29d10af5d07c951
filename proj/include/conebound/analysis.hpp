#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "conebound/bounds.hpp"
#include "conebound/instance.hpp"

namespace conebound {

/// A failure inside one pipeline stage. `unsupported` marks inputs outside
/// the implemented scope as opposed to mathematical errors.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message, bool unsupported)
      : std::runtime_error("stage " + stage + ": " + message), stage_(std::move(stage)), unsupported_(unsupported) {}
  const std::string& stage() const { return stage_; }
  bool unsupported() const { return unsupported_; }

 private:
  std::string stage_;
  bool unsupported_;
};

struct AnalysisOptions {
  /// Tabulation horizon for the Hilbert-Samuel table; -1 picks
  /// max(reg + d + 10, uniform_horizon).
  int horizon = -1;
  int uniform_horizon = 20;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct AnalysisReport {
  InstanceSpec instance;
  bool homogeneous = false;
  std::vector<std::string> standard_basis;  ///< under the local order
  std::vector<std::string> tangent_cone;    ///< reduced generators of in*(I)
  int dim = 0;
  int depth = 0;  ///< depth of the tangent cone G
  BigInt e;
  std::optional<BigInt> hdeg;  ///< D(A): computed hdeg or the supplied extdeg
  std::string hdeg_source;     ///< "hdeg", "external" or "none"
  std::optional<BigInt> deviation;
  BigInt length_L;
  std::optional<int> reg_quotient;
  std::vector<std::tuple<int, int, long>> betti;  ///< (i, j, b_ij) of G
  std::string betti_table;
  int reg = 0;
  std::optional<int> greg;
  int weak_reg = 0;
  int horizon = 0;
  std::vector<BigInt> hilbert;  ///< h_G(n), n = 0..horizon
  std::vector<BigInt> samuel;   ///< ℓ(A/m^{n+1}), n = 0..horizon
  std::vector<BigInt> e_coeffs;
  std::vector<BoundVerdict> verdicts;
  std::vector<std::string> skipped;
  std::vector<StageTiming> timing;

  bool all_hold() const;
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

/// Throws ParseError for generators that do not parse and StageError for
/// failures in a computation stage.
AnalysisReport analyze(const InstanceSpec& spec, const AnalysisOptions& options = {});

/// Exact integers go to JSON numbers when they fit in int64, else strings.
nlohmann::json bigint_json(const BigInt& v);
nlohmann::json verdict_json(const BoundVerdict& v);

// ---------------------------------------------------------------------------
// Corpora

/// Random monomial ideals: 1..4 variables, 1..5 generators of degree 1..5.
/// Instance k is generated from its own engine seeded with (seed, k).
std::vector<InstanceSpec> monomial_corpus(std::uint64_t seed, int count);
/// Homogeneous binomial ideals over F_32003: 2..4 variables, 1..4 generators
/// m1 - c m2 with deg m1 = deg m2 in 1..4.
std::vector<InstanceSpec> binomial_corpus(std::uint64_t seed, int count);

struct CorpusFailure {
  std::string label;
  std::string instance;  ///< emitted spec, for reproduction
  std::string detail;
};

struct CorpusSummary {
  int instances = 0;
  int analyzed = 0;
  long verdicts = 0;
  long violations = 0;
  int errors = 0;
  std::map<std::string, long> per_theorem;
  std::map<std::string, long> skipped;
  std::vector<CorpusFailure> failures;  ///< violations and errors, in corpus order
  std::vector<AnalysisReport> reports;  ///< in corpus order; empty entries for errors are omitted
  double seconds = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

CorpusSummary corpus_run(const std::vector<InstanceSpec>& corpus, Execution mode = Execution::Parallel,
                         const AnalysisOptions& options = {});

}  // namespace conebound
