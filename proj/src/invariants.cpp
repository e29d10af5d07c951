#include "conebound/invariants.hpp"

#include <algorithm>

namespace conebound {

template <class F>
GradedRing<F> graded_ring(const Ideal<F>& ideal) {
  if (!ideal.is_homogeneous()) throw MathError("graded invariants need a homogeneous ideal");
  if (ideal.is_unit()) throw MathError("the quotient by the unit ideal is zero");
  auto presentation = cyclic_presentation(ideal.ring(), ideal.generators());
  auto resolution = free_resolution(presentation, true);
  auto betti = betti_table(resolution);
  std::vector<GradedPresentation<F>> ext;
  for (std::size_t j = 0; j <= ideal.ring()->nvars(); ++j) ext.push_back(ext_module(resolution, static_cast<int>(j)));
  auto series = module_hilbert_series(presentation);
  return GradedRing<F>{ideal, std::move(presentation), std::move(resolution), std::move(betti), std::move(ext),
                       std::move(series)};
}

CohomologyTable::CohomologyTable(int nvars, std::vector<HilbertSeries> ext_series)
    : nvars_(nvars), ext_(std::move(ext_series)) {
  if (static_cast<int>(ext_.size()) != nvars_ + 1) throw MathError("cohomology table needs Ext^0..Ext^n");
}

BigInt CohomologyTable::dim(int i, int m) const {
  if (i < 0 || i > nvars_) return 0;
  return ext_[static_cast<std::size_t>(nvars_ - i)].value(-m - nvars_);
}

std::optional<int> CohomologyTable::a(int i) const {
  if (i < 0 || i > nvars_) return std::nullopt;
  const HilbertSeries& s = ext_[static_cast<std::size_t>(nvars_ - i)];
  if (s.is_zero()) return std::nullopt;
  return -s.numerator().low_degree() - nvars_;
}

std::vector<std::pair<int, BigInt>> CohomologyTable::nonvanishing(int i, int lowest) const {
  std::vector<std::pair<int, BigInt>> out;
  auto top = a(i);
  if (!top) return out;
  for (int m = lowest; m <= *top; ++m) {
    BigInt d = dim(i, m);
    if (d != 0) out.emplace_back(m, d);
  }
  return out;
}

std::optional<int> CohomologyTable::regularity() const {
  std::optional<int> reg;
  for (int i = 0; i <= nvars_; ++i)
    if (auto ai = a(i)) reg = std::max(reg.value_or(*ai + i), *ai + i);
  return reg;
}

std::optional<int> CohomologyTable::g_regularity() const {
  std::optional<int> reg;
  for (int i = 1; i <= nvars_; ++i)
    if (auto ai = a(i)) reg = std::max(reg.value_or(*ai + i), *ai + i);
  return reg;
}

template <class F>
CohomologyTable cohomology_table(const GradedRing<F>& ring) {
  std::vector<HilbertSeries> series;
  for (const auto& e : ring.ext) series.push_back(module_hilbert_series(e));
  return CohomologyTable(static_cast<int>(ring.ideal.ring()->nvars()), std::move(series));
}

template <class F>
int regularity_from_betti(const GradedRing<F>& ring) {
  return ring.betti.regularity();
}

template <class F>
int regularity(const GradedRing<F>& ring) {
  int betti = regularity_from_betti(ring);
  auto cohomology = cohomology_table(ring).regularity();
  if (!cohomology || *cohomology != betti)
    throw MathError("internal inconsistency: regularity " + std::to_string(betti) +
                    " from the Betti table but " + (cohomology ? std::to_string(*cohomology) : "none") +
                    " from local cohomology");
  return betti;
}

int weak_regularity(const CohomologyTable& table) {
  auto reg = table.regularity();
  if (!reg) throw MathError("weak regularity of the zero module is undefined");
  for (int m = 0; m <= std::max(*reg, 0); ++m) {
    bool vanishes = true;
    for (int i = 0; i <= table.nvars() && vanishes; ++i)
      if (table.dim(i, m - i + 1) != 0) vanishes = false;
    if (vanishes) return m;
  }
  throw MathError("no weak regularity found up to the regularity");
}

BigInt HilbertData::samuel_polynomial(long n) const {
  BigInt s = 0;
  const int d = dimension;
  for (int i = 0; i <= d; ++i) {
    BigInt term = e[static_cast<std::size_t>(i)] * binomial(n + d - i, d - i);
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

HilbertData hilbert_samuel(const HilbertSeries& series, int reg, int horizon) {
  if (series.is_zero()) throw MathError("Hilbert-Samuel data of the zero ring");
  HilbertData data{series, 0, 0, {}, {}, {}, {}};
  data.dimension = series.dimension();
  data.horizon = horizon >= 0 ? horizon : reg + data.dimension + 10;
  for (int n = 0; n <= data.horizon; ++n) {
    data.hilbert.push_back(series.value(n));
    data.samuel.push_back(series.samuel_value(n));
  }
  data.hilbert_polynomial = series.polynomial_coefficients();
  data.e = series.samuel_coefficients();
  for (int n = reg + 1; n <= reg + 5; ++n)
    if (data.samuel_polynomial(n) != series.samuel_value(n))
      throw MathError("Hilbert-Samuel coefficients do not reproduce the Hilbert-Samuel function at n = " +
                      std::to_string(n));
  return data;
}

template <class F>
QuotientByFiniteLength<F> reg_of_quotient_mod_L(const Ideal<F>& ideal) {
  auto sat = colon_saturate_maximal(ideal);
  const auto& ring = *ideal.ring();
  bool locally_unit = false;
  for (const auto& g : sat.saturation.generators())
    if (!ring.field().is_zero(ring.constant_coefficient(g))) locally_unit = true;
  std::optional<int> reg;
  if (!locally_unit) {
    auto cone = tangent_cone(sat.saturation);
    if (!cone.initial_ideal.is_unit()) reg = regularity(graded_ring(cone.initial_ideal));
  }
  return QuotientByFiniteLength<F>{std::move(sat.saturation), std::move(sat.length), reg};
}

#define CONEBOUND_INSTANTIATE_INVARIANTS(F)                                              \
  template struct GradedRing<F>;                                                         \
  template GradedRing<F> graded_ring<F>(const Ideal<F>&);                                \
  template CohomologyTable cohomology_table<F>(const GradedRing<F>&);                    \
  template int regularity_from_betti<F>(const GradedRing<F>&);                           \
  template int regularity<F>(const GradedRing<F>&);                                      \
  template struct QuotientByFiniteLength<F>;                                             \
  template QuotientByFiniteLength<F> reg_of_quotient_mod_L<F>(const Ideal<F>&);

CONEBOUND_INSTANTIATE_INVARIANTS(PrimeField)
CONEBOUND_INSTANTIATE_INVARIANTS(RationalField)

}  // namespace conebound
