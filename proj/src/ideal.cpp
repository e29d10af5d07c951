#include "conebound/ideal.hpp"

#include <algorithm>

namespace conebound {

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    ring_->check(g);
    if (g.is_zero()) continue;
    if (!ring_->is_homogeneous(g)) homogeneous_ = false;
    gens_.push_back(std::move(g));
  }
}

template <class F>
std::shared_ptr<const std::vector<Polynomial<F>>> Ideal<F>::basis_for(const TermOrder& order,
                                                                       RingPtr<F>* ring_out) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(order.key());
  if (it != cache_->bases.end()) {
    if (ring_out) *ring_out = it->second.first;
    return it->second.second;
  }
  RingPtr<F> ring = order == ring_->order() ? ring_ : std::make_shared<const PolyRing<F>>(ring_->with_order(order));
  std::vector<Poly> gens;
  for (const auto& g : gens_) gens.push_back(ring->import(g, *ring_));
  auto basis = std::make_shared<const std::vector<Poly>>(buchberger(ring, gens));
  cache_->bases.emplace(order.key(), std::make_pair(ring, basis));
  if (ring_out) *ring_out = ring;
  return basis;
}

template <class F>
const std::vector<Polynomial<F>>& Ideal<F>::groebner_basis() const {
  return *basis_for(ring_->order(), nullptr);
}

template <class F>
std::pair<RingPtr<F>, std::vector<Polynomial<F>>> Ideal<F>::groebner_basis(const TermOrder& order) const {
  RingPtr<F> ring;
  auto basis = basis_for(order, &ring);
  return {ring, *basis};
}

template <class F>
bool Ideal<F>::contains(const Poly& f) const {
  return normal_form(ring_, f, groebner_basis()).is_zero();
}

template <class F>
bool Ideal<F>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().lead().mono.is_one();
}

template <class F>
bool Ideal<F>::operator==(const Ideal& o) const {
  if (ring_->id() != o.ring_->id()) return false;
  return groebner_basis() == o.groebner_basis();
}

template <class F>
std::string Ideal<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + ring_->to_string(gens_[i]);
  return out + ")";
}

template <class F>
std::vector<Monomial> initial_monomials(const Ideal<F>& ideal, const TermOrder& order) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.groebner_basis(order).second) out.push_back(g.lead().mono);
  return out;
}

template <class F>
Ideal<F> initial_monomial_ideal(const Ideal<F>& ideal, const TermOrder& order) {
  std::vector<Polynomial<F>> gens;
  for (const auto& m : initial_monomials(ideal, order)) gens.push_back(ideal.ring()->monomial(m));
  return Ideal<F>(ideal.ring(), std::move(gens));
}

template <class F>
int ideal_dimension(const Ideal<F>& ideal) {
  int d = monomial_dimension(initial_monomials(ideal, TermOrder::grevlex()), ideal.ring()->nvars());
  if (d < 0) throw MathError("the unit ideal has no dimension");
  return d;
}

template <class F>
HilbertSeries quotient_hilbert_series(const Ideal<F>& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  return HilbertSeries(hilbert_numerator(initial_monomials(ideal, TermOrder::grevlex()), n),
                       static_cast<int>(n));
}

template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& f) {
  const auto& ring = ideal.ring();
  ring->check(f);
  if (f.is_zero()) return Ideal<F>(ring, {ring->one()});
  std::vector<Vector<F>> inputs;
  std::vector<int> degrees;
  for (const auto& g : ideal.generators()) {
    inputs.push_back(Vector<F>{g});
    degrees.push_back(ring->degree(g));
  }
  inputs.push_back(Vector<F>{f});
  degrees.push_back(ring->degree(f));
  GroebnerOptions opts;
  opts.collect_syzygies = true;
  ModuleGroebner<F> gb(FreeModule<F>(ring, {0}), std::move(inputs), std::move(degrees), opts);
  std::vector<Polynomial<F>> gens;
  for (const auto& s : gb.syzygies()) gens.push_back(s.back());
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
Ideal<F> colon_maximal(const Ideal<F>& ideal) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (n == 0 || ideal.is_unit()) return Ideal<F>(ring, {ring->one()});
  FreeModule<F> target(ring, std::vector<int>(n, 0));
  std::vector<Vector<F>> inputs;
  std::vector<int> degrees;
  Vector<F> vars = target.zero();
  for (std::size_t i = 0; i < n; ++i) vars[i] = ring->variable(i);
  inputs.push_back(std::move(vars));
  degrees.push_back(1);
  for (const auto& g : ideal.groebner_basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector<F> v = target.zero();
      v[i] = g;
      inputs.push_back(std::move(v));
      degrees.push_back(ring->degree(g));
    }
  }
  GroebnerOptions opts;
  opts.collect_syzygies = true;
  ModuleGroebner<F> gb(target, std::move(inputs), std::move(degrees), opts);
  std::vector<Polynomial<F>> gens = ideal.groebner_basis();
  for (const auto& s : gb.syzygies()) gens.push_back(s.front());
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
SaturationResult<F> colon_saturate_maximal(const Ideal<F>& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  if (ideal.is_unit()) throw MathError("saturation of the unit ideal");
  // Iteration cap: twice the degree of the lcm of the leading monomials plus
  // the number of variables. Exceeding it signals a bug, not a slow input.
  std::vector<Monomial> leads = initial_monomials(ideal, TermOrder::grevlex());
  Monomial lcm(n);
  for (const auto& m : leads) lcm = lcm.lcm(m);
  const int cap = 2 * lcm.degree() + static_cast<int>(n) + 1;

  Ideal<F> current = ideal;
  int steps = 0;
  while (true) {
    Ideal<F> next = colon_maximal(current);
    if (next == current) break;
    current = std::move(next);
    if (++steps > cap) throw MathError("saturation did not stabilize within " + std::to_string(cap) + " steps");
  }

  LaurentPolynomial diff = quotient_hilbert_series(ideal).numerator() - quotient_hilbert_series(current).numerator();
  for (std::size_t k = 0; k < n; ++k) diff = diff.divide_one_minus_t();
  BigInt length = diff.evaluate_at_one();
  if (length < 0) throw MathError("negative length of the finite-length part");
  return SaturationResult<F>{std::move(current), std::move(length), steps};
}

namespace {

template <class F>
int ecart(const PolyRing<F>& ring, const Polynomial<F>& f) {
  return ring.degree(f) - f.lead().mono.degree();
}

}  // namespace

template <class F>
Polynomial<F> mora_normal_form(const PolyRing<F>& ring, const Polynomial<F>& f,
                               const std::vector<Polynomial<F>>& basis) {
  if (ring.order().is_global()) throw MathError("Mora normal form needs a local order");
  const auto& field = ring.field();
  std::vector<Polynomial<F>> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(g);
  Polynomial<F> h = f;
  while (!h.is_zero()) {
    const Monomial lm = h.lead().mono;
    const Polynomial<F>* best = nullptr;
    int best_ecart = 0;
    for (const auto& g : reducers) {
      if (!g.lead().mono.divides(lm)) continue;
      int e = ecart(ring, g);
      if (best == nullptr || e < best_ecart) {
        best = &g;
        best_ecart = e;
      }
    }
    if (best == nullptr) break;
    Polynomial<F> g = *best;
    if (best_ecart > ecart(ring, h)) reducers.push_back(h);
    auto coeff = field.neg(field.div(h.lead().coeff, g.lead().coeff));
    h = ring.combine(h, coeff, lm / g.lead().mono, g);
  }
  return h;
}

template <class F>
std::vector<Polynomial<F>> standard_basis(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  if (ring->order().is_global()) throw MathError("standard bases need a local order");
  const auto& field = ring->field();
  std::vector<Polynomial<F>> basis;
  for (const auto& g : gens) {
    ring->check(g);
    if (g.is_zero()) continue;
    if (!field.is_zero(ring->constant_coefficient(g)))
      throw MathError("ideal is the unit ideal locally: generator " + ring->to_string(g) +
                      " has a nonzero constant term");
    basis.push_back(ring->make_monic(g));
  }
  struct Pair {
    std::size_t i, j;
    int degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      int d = basis[i].lead().mono.lcm(basis[n].lead().mono).degree();
      pairs.push_back(Pair{i, n, d});
    }
  };
  for (std::size_t n = 1; n < basis.size(); ++n) add_pairs(n);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    Pair p = *it;
    pairs.erase(it);
    const auto& a = basis[p.i];
    const auto& b = basis[p.j];
    if (a.lead().mono.coprime(b.lead().mono)) continue;
    Monomial l = a.lead().mono.lcm(b.lead().mono);
    Polynomial<F> s = ring->combine(ring->mul_term(a, l / a.lead().mono, field.one()),
                                    field.neg(field.one()), l / b.lead().mono, b);
    Polynomial<F> h = mora_normal_form(*ring, s, basis);
    if (h.is_zero()) continue;
    basis.push_back(ring->make_monic(h));
    add_pairs(basis.size() - 1);
  }

  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead().mono.divides(basis[i].lead().mono)) continue;
      if (basis[j].lead().mono == basis[i].lead().mono && j > i) continue;
      redundant = true;
    }
    if (!redundant) out.push_back(basis[i]);
  }
  return out;
}

template <class F>
TangentConeData<F> tangent_cone(const Ideal<F>& ideal) {
  const auto& ring = ideal.ring();
  auto local = std::make_shared<const PolyRing<F>>(ring->with_order(TermOrder::local()));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(local->import(g, *ring));
  std::vector<Polynomial<F>> sb = standard_basis<F>(local, gens);
  std::vector<Polynomial<F>> forms;
  for (const auto& g : sb) forms.push_back(ring->import(local->initial_form(g), *local));
  return TangentConeData<F>{local, std::move(sb), Ideal<F>(ring, std::move(forms))};
}

#define CONEBOUND_INSTANTIATE_IDEAL(F)                                                          \
  template class Ideal<F>;                                                                      \
  template std::vector<Monomial> initial_monomials<F>(const Ideal<F>&, const TermOrder&);       \
  template Ideal<F> initial_monomial_ideal<F>(const Ideal<F>&, const TermOrder&);               \
  template int ideal_dimension<F>(const Ideal<F>&);                                             \
  template HilbertSeries quotient_hilbert_series<F>(const Ideal<F>&);                           \
  template Ideal<F> colon<F>(const Ideal<F>&, const Polynomial<F>&);                            \
  template Ideal<F> colon_maximal<F>(const Ideal<F>&);                                          \
  template SaturationResult<F> colon_saturate_maximal<F>(const Ideal<F>&);                      \
  template Polynomial<F> mora_normal_form<F>(const PolyRing<F>&, const Polynomial<F>&,          \
                                             const std::vector<Polynomial<F>>&);                \
  template std::vector<Polynomial<F>> standard_basis<F>(const RingPtr<F>&,                      \
                                                        const std::vector<Polynomial<F>>&);     \
  template TangentConeData<F> tangent_cone<F>(const Ideal<F>&);

CONEBOUND_INSTANTIATE_IDEAL(PrimeField)
CONEBOUND_INSTANTIATE_IDEAL(RationalField)

}  // namespace conebound
