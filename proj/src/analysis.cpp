#include "conebound/analysis.hpp"

#include <chrono>
#include <sstream>

#include "conebound/extdeg.hpp"
#include "conebound/ideal.hpp"
#include "conebound/invariants.hpp"
#include "conebound/parse.hpp"

namespace conebound {

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

  template <class Fn>
  auto run(const std::string& stage, Fn&& fn) -> decltype(fn()) {
    auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      out_.push_back({stage, ms.count()});
    };
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        finish();
      } else {
        auto value = fn();
        finish();
        return value;
      }
    } catch (const StageError&) {
      throw;
    } catch (const UnsupportedError& e) {
      throw StageError(stage, e.what(), true);
    } catch (const std::exception& e) {
      throw StageError(stage, e.what(), false);
    }
  }

 private:
  std::vector<StageTiming>& out_;
};

void inconsistent(const std::string& what) { throw MathError("internal inconsistency: " + what); }

template <class F>
AnalysisReport run_pipeline(const InstanceSpec& spec, F field, const AnalysisOptions& options) {
  AnalysisReport rep;
  rep.instance = spec;
  StageClock clock(rep.timing);

  auto ring = std::make_shared<const PolyRing<F>>(std::move(field), spec.vars, TermOrder::grevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_polynomial(*ring, g));
  Ideal<F> ideal(ring, gens);
  rep.homogeneous = ideal.is_homogeneous();

  auto cone = clock.run("tangent-cone", [&] { return tangent_cone(ideal); });
  for (const auto& f : cone.standard_basis) rep.standard_basis.push_back(cone.local_ring->to_string(f));
  for (const auto& f : cone.initial_ideal.groebner_basis()) rep.tangent_cone.push_back(ring->to_string(f));

  auto g = clock.run("resolution", [&] { return graded_ring(cone.initial_ideal); });
  rep.dim = g.series.dimension();
  rep.e = g.series.multiplicity();
  rep.depth = depth_from_betti(g.resolution);
  for (const auto& [key, b] : g.betti.entries()) rep.betti.emplace_back(key.first, key.second, b);
  rep.betti_table = g.betti.to_string();

  auto table = clock.run("cohomology", [&] {
    rep.reg = regularity(g);
    auto t = cohomology_table(g);
    rep.greg = t.g_regularity();
    rep.weak_reg = weak_regularity(t);
    return t;
  });

  long serre_lemma = 0, serre_formula = 0;
  clock.run("hilbert-samuel", [&] {
    int horizon = options.horizon;
    if (horizon < 0) horizon = std::max(rep.reg + rep.dim + 10, options.uniform_horizon);
    auto data = hilbert_samuel(g.series, rep.reg, horizon);
    rep.horizon = data.horizon;
    rep.hilbert = data.hilbert;
    rep.samuel = data.samuel;
    rep.e_coeffs = data.e;
    if (rep.e_coeffs.front() != rep.e) inconsistent("e_0 differs from the multiplicity");
    for (int n = rep.reg + 1; n <= rep.reg + 10; ++n)
      if (g.series.value(n) != g.series.polynomial_value(n)) ++serre_lemma;
    const int n_vars = static_cast<int>(ring->nvars());
    for (int n = 0; n <= rep.reg + 5; ++n) {
      BigInt alternating = 0;
      for (int i = 0; i <= n_vars; ++i) {
        if (i % 2 == 0)
          alternating += table.dim(i, n);
        else
          alternating -= table.dim(i, n);
      }
      if (g.series.value(n) - g.series.polynomial_value(n) != alternating) ++serre_formula;
    }
  });

  clock.run("saturation", [&] {
    auto q = reg_of_quotient_mod_L(ideal);
    rep.length_L = q.length;
    rep.reg_quotient = q.reg_quotient;
  });

  clock.run("hdeg", [&] {
    if (spec.extdeg) {
      rep.hdeg = *spec.extdeg;
      rep.hdeg_source = "external";
    } else if (rep.homogeneous) {
      HomologicalDegree<F> calc;
      auto degree = calc.report(g.presentation, &g.ext);
      if (degree.e != rep.e) inconsistent("hdeg multiplicity differs from the Hilbert series");
      rep.hdeg = degree.hdeg;
      rep.hdeg_source = "hdeg";
    } else {
      rep.hdeg_source = "none";
    }
    if (rep.hdeg) rep.deviation = *rep.hdeg - rep.e;
  });

  clock.run("verdicts", [&] {
    InstanceData data;
    data.d = rep.dim;
    data.e = rep.e;
    data.extended_degree = rep.hdeg;
    data.reg = rep.reg;
    data.greg = rep.greg;
    data.depth = rep.depth;
    data.samuel = rep.samuel;
    data.e_coeffs = rep.e_coeffs;
    data.length_L = rep.length_L;
    data.reg_quotient = rep.reg_quotient;
    data.serre_lemma_mismatches = serre_lemma;
    data.serre_formula_mismatches = serre_formula;
    data.weak_regularity_mismatches = rep.weak_reg == rep.reg ? 0 : 1;
    auto v = verify_instance(data, options.uniform_horizon);
    rep.verdicts = std::move(v.verdicts);
    rep.skipped = std::move(v.skipped);
    if (!rep.hdeg && rep.dim > 0 && !rep.homogeneous)
      for (auto& s : rep.skipped)
        if (s.find("no extended degree") != std::string::npos) s += " (non-homogeneous input; supply extdeg)";
  });
  return rep;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

nlohmann::json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

nlohmann::json verdict_json(const BoundVerdict& v) {
  return {{"thm", v.theorem},         {"inputs", v.inputs}, {"bound", bigint_json(v.bound)},
          {"actual", bigint_json(v.actual)}, {"holds", v.holds}, {"slack", bigint_json(v.slack)}};
}

bool AnalysisReport::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

nlohmann::json AnalysisReport::to_json(bool with_timing) const {
  using nlohmann::json;
  auto big_list = [](const std::vector<BigInt>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(bigint_json(x));
    return a;
  };
  auto opt_big = [](const std::optional<BigInt>& x) { return x ? bigint_json(*x) : json(nullptr); };
  auto opt = [](const std::optional<int>& x) { return x ? json(*x) : json(nullptr); };
  json j;
  j["instance"] = {{"label", instance.label},
                   {"field", instance.field_name()},
                   {"vars", instance.vars},
                   {"ideal", instance.generators},
                   {"extdeg", opt_big(instance.extdeg)}};
  j["homogeneous"] = homogeneous;
  j["standard_basis"] = standard_basis;
  j["tangent_cone"] = tangent_cone;
  j["dim"] = dim;
  j["depth"] = depth;
  j["e"] = bigint_json(e);
  j["hdeg"] = opt_big(hdeg);
  j["hdeg_source"] = hdeg_source;
  j["deviation"] = opt_big(deviation);
  j["lengthL"] = bigint_json(length_L);
  j["reg_quotient"] = opt(reg_quotient);
  j["reg"] = reg;
  j["greg"] = opt(greg);
  j["weak_reg"] = weak_reg;
  json betti_json = json::array();
  for (const auto& [i, jj, b] : betti) betti_json.push_back({i, jj, b});
  j["betti"] = betti_json;
  j["horizon"] = horizon;
  j["hilbert"] = big_list(hilbert);
  j["hs"] = big_list(samuel);
  j["e_coeffs"] = big_list(e_coeffs);
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back(verdict_json(v));
  j["verdicts"] = vs;
  j["skipped"] = skipped;
  if (with_timing) {
    json t = json::object();
    for (const auto& s : timing) t[s.stage] = s.milliseconds;
    j["timing_ms"] = t;
  }
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << "instance   " << (instance.label.empty() ? "(unlabelled)" : instance.label) << "\n";
  out << "ring       " << instance.field_name() << "[";
  for (std::size_t i = 0; i < instance.vars.size(); ++i) out << (i ? "," : "") << instance.vars[i];
  out << "] localized at the origin\n";
  out << "ideal      (";
  for (std::size_t i = 0; i < instance.generators.size(); ++i) out << (i ? ", " : "") << instance.generators[i];
  out << ")" << (homogeneous ? "  homogeneous" : "") << "\n";
  out << "std basis  ";
  for (std::size_t i = 0; i < standard_basis.size(); ++i) out << (i ? ", " : "") << standard_basis[i];
  out << "\nin*(I)     (";
  for (std::size_t i = 0; i < tangent_cone.size(); ++i) out << (i ? ", " : "") << tangent_cone[i];
  out << ")\n\n";
  out << "d = " << dim << "   depth G = " << depth << "   e = " << e << "   D = "
      << (hdeg ? to_string(*hdeg) + " (" + hdeg_source + ")" : "-")
      << "   I = " << (deviation ? to_string(*deviation) : "-") << "   l(L) = " << length_L << "\n";
  out << "reg G = " << reg << "   g-reg G = " << opt_int(greg) << "   weak reg G = " << weak_reg
      << "   reg G' = " << opt_int(reg_quotient) << "\n\n";
  out << "Betti table of G\n" << betti_table << "\n";
  out << "Hilbert-Samuel table\n   n      h_G(n)  l(A/m^{n+1})\n";
  for (std::size_t n = 0; n < samuel.size(); ++n) {
    out.width(4);
    out << n;
    out.width(12);
    out << hilbert[n].get_str();
    out.width(14);
    out << samuel[n].get_str() << "\n";
  }
  out << "\ne_i        ";
  for (std::size_t i = 0; i < e_coeffs.size(); ++i) out << (i ? ", " : "") << "e" << i << " = " << e_coeffs[i];
  out << "\n\nverdicts\n";
  std::map<std::string, std::pair<long, long>> grouped;
  for (const auto& v : verdicts) {
    auto& [held, total] = grouped[v.theorem];
    ++total;
    if (v.holds) ++held;
  }
  for (const auto& v : verdicts) {
    const auto& [held, total] = grouped[v.theorem];
    if (total > 1 && v.holds) continue;
    out << "  " << (v.holds ? "holds   " : "VIOLATED") << "  " << v.theorem << "  [" << v.inputs << "]  bound "
        << v.bound << "  actual " << v.actual << "  slack " << v.slack << "\n";
  }
  for (const auto& [name, counts] : grouped)
    if (counts.second > 1)
      out << "  " << (counts.first == counts.second ? "holds   " : "VIOLATED") << "  " << name << "  ("
          << counts.first << "/" << counts.second << " points)\n";
  for (const auto& s : skipped) out << "  skipped   " << s << "\n";
  out << "\ntiming (ms)";
  for (const auto& t : timing) out << "  " << t.stage << " " << static_cast<long>(t.milliseconds * 1000) / 1000.0;
  out << "\n";
  return out.str();
}

AnalysisReport analyze(const InstanceSpec& spec, const AnalysisOptions& options) {
  if (spec.field == InstanceSpec::FieldKind::Rational) return run_pipeline(spec, RationalField(), options);
  return run_pipeline(spec, PrimeField(spec.characteristic), options);
}

}  // namespace conebound
