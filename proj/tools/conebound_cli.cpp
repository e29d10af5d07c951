#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conebound/analysis.hpp"
#include "conebound/parse.hpp"

using namespace conebound;

namespace {

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kViolation = 3 };

int emit_report(const AnalysisReport& rep, bool json) {
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_hold() ? kOk : kViolation;
}

BigInt big(const std::string& text, const char* what) {
  BigInt v;
  if (v.set_str(text, 10) != 0) throw std::invalid_argument(std::string(what) + " must be an integer");
  return v;
}

int bounds_command(int d, const std::string& e_text, const std::string& i_text, long n, const std::string& c_text,
                   bool json) {
  const BigInt e = big(e_text, "--e");
  const BigInt I = big(i_text, "--i");
  const BigInt c = c_text.empty() ? BigInt(2 * I) : big(c_text, "--c");
  nlohmann::json j;
  j["inputs"] = {{"d", d}, {"e", bigint_json(e)}, {"I", bigint_json(I)}, {"n", n}, {"c", bigint_json(c)}};
  j["hs_upper_bound"] = bigint_json(hs_upper_bound(n, d, e, I));
  j["hs_upper_bound_weak"] = bigint_json(hs_upper_bound_weak(n, d, e + I));
  j["reg_upper_bound"] = bigint_json(reg_upper_bound(d, e, I));
  if (I == 0) j["reg_upper_bound_cm"] = bigint_json(reg_upper_bound_cm(d, e));
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 1; i <= d; ++i) {
    nlohmann::json row = {{"i", i},
                          {"main", bigint_json(coeff_upper_bound(i, e, I))},
                          {"srinivas-trivedi", bigint_json(coeff_upper_bound(i, e, I, CoeffVariant::srinivas_trivedi()))},
                          {"trivedi", bigint_json(coeff_upper_bound(i, e, I, CoeffVariant::trivedi(c)))}};
    if (I == 0) row["cm"] = bigint_json(coeff_upper_bound(i, e, I, CoeffVariant::cm()));
    coeffs.push_back(row);
  }
  j["coeff_upper_bound"] = coeffs;
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  auto str = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::cout << "d = " << d << "  e = " << e << "  I = " << I << "  n = " << n << "  c = " << c << "\n";
  std::cout << "Hilbert-Samuel bound at n        " << str(j["hs_upper_bound"]) << "\n";
  std::cout << "weak Hilbert-Samuel bound (D=e+I) " << str(j["hs_upper_bound_weak"]) << "\n";
  std::cout << "regularity bound                  " << str(j["reg_upper_bound"]) << "\n";
  if (I == 0) std::cout << "regularity bound, CM form         " << str(j["reg_upper_bound_cm"]) << "\n";
  for (const auto& row : coeffs) {
    std::cout << "|e_" << row["i"].get<int>() << "| bounds  main " << str(row["main"]);
    if (row.contains("cm")) std::cout << "  cm " << str(row["cm"]);
    std::cout << "  srinivas-trivedi " << str(row["srinivas-trivedi"]) << "  trivedi(c) " << str(row["trivedi"])
              << "\n";
  }
  return kOk;
}

int envelope_command(int d, const std::string& q_text, bool json) {
  auto env = finiteness_envelope(d, big(q_text, "--q"));
  if (json) {
    nlohmann::json splits = nlohmann::json::array();
    for (const auto& s : env.splits) {
      nlohmann::json hs = nlohmann::json::array(), cb = nlohmann::json::array();
      for (const auto& v : s.hs_upper) hs.push_back(bigint_json(v));
      for (const auto& v : s.coeff_bound) cb.push_back(bigint_json(v));
      splits.push_back({{"e", bigint_json(s.e)},
                        {"I", bigint_json(s.I)},
                        {"n0", bigint_json(s.n0)},
                        {"hs_upper", hs},
                        {"coeff_bound", cb},
                        {"count", bigint_json(s.count)}});
    }
    std::cout << nlohmann::json{{"d", d}, {"q", bigint_json(env.q)}, {"splits", splits}, {"count", bigint_json(env.count)}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "d = " << d << "  D(A) = e + I = " << env.q << "\n";
  for (const auto& s : env.splits) {
    std::cout << "  e = " << s.e << "  I = " << s.I << "  n0 = " << s.n0 << "  |e_i| <= ";
    for (std::size_t i = 0; i < s.coeff_bound.size(); ++i) std::cout << (i ? ", " : "") << s.coeff_bound[i];
    std::cout << "\n    l(A/m^{n+1}) in [1, b_n], b = ";
    const std::size_t shown = std::min<std::size_t>(s.hs_upper.size(), 12);
    for (std::size_t n = 0; n < shown; ++n) std::cout << (n ? ", " : "") << s.hs_upper[n];
    if (shown < s.hs_upper.size()) std::cout << ", ... (" << s.hs_upper.size() << " values)";
    const std::string digits = s.count.get_str();
    std::cout << "\n    candidates " << (digits.size() > 60 ? "a " + std::to_string(digits.size()) + "-digit number" : digits)
              << "\n";
  }
  const std::string digits = env.count.get_str();
  std::cout << "total candidates "
            << (digits.size() > 60 ? "a " + std::to_string(digits.size()) + "-digit number" : digits) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel functions, regularity and extended degrees of local rings"};
  app.require_subcommand(1);

  bool json = false;
  int horizon = -1;
  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze an instance file");
  analyze_cmd->add_option("file", file, "instance file")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable output");
  analyze_cmd->add_option("--horizon", horizon, "Hilbert-Samuel tabulation horizon");

  int r = 1;
  auto* family_cmd = app.add_subcommand("family", "analyze k[[x,y]]/(x^2, x y^r)");
  family_cmd->add_option("--r", r, "family parameter")->required()->check(CLI::PositiveNumber);
  family_cmd->add_flag("--json", json, "machine-readable output");
  family_cmd->add_option("--horizon", horizon, "Hilbert-Samuel tabulation horizon");

  std::uint64_t seed = 0;
  int count = 100;
  std::string kind = "monomial";
  bool serial = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "analyze a seeded random corpus");
  corpus_cmd->add_option("--seed", seed, "generator seed");
  corpus_cmd->add_option("--count", count, "number of instances")->check(CLI::NonNegativeNumber);
  corpus_cmd->add_option("--kind", kind, "monomial or binomial")->check(CLI::IsMember({"monomial", "binomial"}));
  corpus_cmd->add_flag("--serial", serial, "run without OpenMP");
  corpus_cmd->add_flag("--json", json, "machine-readable output");

  int d = 1;
  std::string e_text = "1", i_text = "0", c_text, q_text = "1";
  long n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound formula");
  bounds_cmd->add_option("--d", d, "dimension")->required();
  bounds_cmd->add_option("--e", e_text, "multiplicity")->required();
  bounds_cmd->add_option("--i", i_text, "Cohen-Macaulay deviation")->required();
  bounds_cmd->add_option("--n", n, "Hilbert-Samuel argument")->required();
  bounds_cmd->add_option("--c", c_text, "constant for the Trivedi variant (default 2I)");
  bounds_cmd->add_flag("--json", json, "machine-readable output");

  auto* envelope_cmd = app.add_subcommand("envelope", "finiteness envelope for dim A = d, D(A) = q");
  envelope_cmd->add_option("--d", d, "dimension")->required();
  envelope_cmd->add_option("--q", q_text, "extended degree")->required();
  envelope_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  AnalysisOptions options;
  options.horizon = horizon;
  try {
    if (*analyze_cmd) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return kUsage;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return emit_report(analyze(parse_instance(buf.str()), options), json);
    }
    if (*family_cmd) return emit_report(analyze(example_family(r), options), json);
    if (*corpus_cmd) {
      auto corpus = kind == "monomial" ? monomial_corpus(seed, count) : binomial_corpus(seed, count);
      auto summary = corpus_run(corpus, serial ? Execution::Serial : Execution::Parallel, options);
      if (json)
        std::cout << summary.to_json().dump(2) << "\n";
      else
        std::cout << summary.to_text();
      if (summary.violations > 0) return kViolation;
      return summary.errors > 0 ? kComputation : kOk;
    }
    if (*bounds_cmd) return bounds_command(d, e_text, i_text, n, c_text, json);
    if (*envelope_cmd) return envelope_command(d, q_text, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    // For the formula commands a domain error means bad arguments.
    std::cerr << "error: " << e.what() << "\n";
    return (*bounds_cmd || *envelope_cmd) ? kUsage : kComputation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
