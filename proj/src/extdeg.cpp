#include "conebound/extdeg.hpp"

namespace conebound {

template <class F>
int module_dimension(const GradedPresentation<F>& module) {
  return module_hilbert_series(module).dimension();
}

template <class F>
BigInt multiplicity(const GradedPresentation<F>& module) {
  return module_hilbert_series(module).multiplicity();
}

template <class F>
std::optional<BigInt> graded_length(const GradedPresentation<F>& module) {
  HilbertSeries s = module_hilbert_series(module);
  if (s.is_zero()) return BigInt(0);
  if (s.dimension() > 0) return std::nullopt;
  return s.total_length();
}

template <class F>
BigInt HomologicalDegree<F>::operator()(const GradedPresentation<F>& module) {
  GradedPresentation<F> pruned = prune(module);
  const std::string key = pruned.to_string();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  BigInt value = report(pruned).hdeg;
  memo_.emplace(key, value);
  return value;
}

template <class F>
DegreeReport HomologicalDegree<F>::report(const GradedPresentation<F>& module,
                                          const std::vector<GradedPresentation<F>>* ext) {
  DegreeReport rep;
  HilbertSeries series = module_hilbert_series(module);
  rep.dim = series.dimension();
  if (series.is_zero()) {
    rep.e = 0;
    rep.hdeg = 0;
    rep.deviation = 0;
    rep.gcm = true;
    return rep;
  }
  rep.e = series.multiplicity();
  if (rep.dim == 0) {
    rep.hdeg = rep.e;
    rep.deviation = 0;
    rep.gcm = true;
    return rep;
  }
  const int n = static_cast<int>(module.ring->nvars());
  const int r = rep.dim;
  std::vector<GradedPresentation<F>> computed;
  if (ext == nullptr) {
    auto res = free_resolution(module, true);
    for (int j = 0; j <= n; ++j) computed.push_back(ext_module(res, j));
    ext = &computed;
  }
  rep.hdeg = rep.e;
  rep.gcm = true;
  for (int i = 0; i < r; ++i) {
    const auto& e = (*ext)[static_cast<std::size_t>(n - i)];
    ExtLevel level;
    level.i = i;
    level.ext_index = n - i;
    level.weight = binomial(r - 1, i);
    HilbertSeries es = module_hilbert_series(e);
    level.dimension = es.dimension();
    if (level.dimension >= r)
      throw MathError("hdeg recursion is not well founded: dim Ext^" + std::to_string(n - i) + " = " +
                      std::to_string(level.dimension) + " >= " + std::to_string(r));
    level.hdeg = es.is_zero() ? BigInt(0) : (*this)(e);
    rep.hdeg += level.weight * level.hdeg;
    if (es.is_zero() || es.dimension() == 0) {
      rep.local_lengths.push_back(es.is_zero() ? BigInt(0) : es.total_length());
    } else {
      rep.local_lengths.push_back(std::nullopt);
      rep.gcm = false;
    }
    rep.levels.push_back(std::move(level));
  }
  rep.deviation = rep.hdeg - rep.e;
  return rep;
}

template <class F>
DegreeReport hdeg(const GradedPresentation<F>& module) {
  HomologicalDegree<F> calc;
  return calc.report(prune(module));
}

template <class F>
DegreeReport hdeg(const Ideal<F>& ideal) {
  if (!ideal.is_homogeneous()) throw UnsupportedError("unsupported: supply D(A) externally");
  return hdeg(cyclic_presentation(ideal.ring(), ideal.generators()));
}

template <class F>
BigInt hdeg_gcm(const GradedPresentation<F>& module) {
  DegreeReport rep = hdeg(module);
  if (!rep.gcm) throw MathError("not gCM");
  BigInt value = rep.e;
  if (rep.dim <= 0) return rep.hdeg;
  for (int i = 0; i < rep.dim; ++i) value += binomial(rep.dim - 1, i) * *rep.local_lengths[static_cast<std::size_t>(i)];
  return value;
}

template <class F>
BigInt cm_deviation(const GradedPresentation<F>& module) {
  return hdeg(module).deviation;
}

#define CONEBOUND_INSTANTIATE_EXTDEG(F)                                                 \
  template int module_dimension<F>(const GradedPresentation<F>&);                       \
  template BigInt multiplicity<F>(const GradedPresentation<F>&);                        \
  template std::optional<BigInt> graded_length<F>(const GradedPresentation<F>&);        \
  template class HomologicalDegree<F>;                                                  \
  template DegreeReport hdeg<F>(const GradedPresentation<F>&);                          \
  template DegreeReport hdeg<F>(const Ideal<F>&);                                       \
  template BigInt hdeg_gcm<F>(const GradedPresentation<F>&);                            \
  template BigInt cm_deviation<F>(const GradedPresentation<F>&);

CONEBOUND_INSTANTIATE_EXTDEG(PrimeField)
CONEBOUND_INSTANTIATE_EXTDEG(RationalField)

}  // namespace conebound
