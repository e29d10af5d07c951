#include "conebound/groebner.hpp"

#include <algorithm>
#include <queue>

namespace conebound {

template <class F>
ModuleGroebner<F>::ModuleGroebner(FreeModule<F> module, std::vector<Vec> inputs,
                                  std::vector<int> input_degrees, GroebnerOptions options)
    : module_(std::move(module)),
      rep_module_(module_.ring_ptr(), input_degrees),
      inputs_(std::move(inputs)),
      input_degrees_(std::move(input_degrees)),
      options_(options) {
  if (options_.collect_syzygies) options_.track = true;
  if (inputs_.size() != input_degrees_.size())
    throw MathError("each Gröbner input needs a degree");
  for (const auto& v : inputs_)
    if (v.size() != module_.rank()) throw MathError("input vector has the wrong rank");
  run();
}

template <class F>
void ModuleGroebner<F>::run() {
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  std::uint64_t seq = 0;
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    int d = FreeModule<F>::is_zero(inputs_[k]) ? input_degrees_[k] : module_.degree(inputs_[k]);
    queue.push(Item{d, 1, seq++, k, 0});
  }
  const auto& field = module_.ring().field();

  auto push_pairs = [&](std::size_t n) {
    const Entry& e = basis_[n];
    for (std::size_t i = 0; i < n; ++i) {
      const Entry& o = basis_[i];
      if (o.comp != e.comp) continue;
      if (options_.criteria && !options_.collect_syzygies && module_.rank() == 1 &&
          o.lead.coprime(e.lead))
        continue;
      Monomial l = o.lead.lcm(e.lead);
      int sugar = std::max(o.sugar + l.degree() - o.lead.degree(), e.sugar + l.degree() - e.lead.degree());
      pending_[i][n] = pending_[n][i] = 1;
      queue.push(Item{sugar, 0, seq++, i, n});
    }
  };

  while (!queue.empty()) {
    Item item = queue.top();
    queue.pop();
    Vec v;
    Vec rep;
    if (item.kind == 1) {
      v = inputs_[item.i];
      if (options_.track) rep = rep_module_.basis(item.i);
    } else {
      std::size_t i = item.i, j = item.j;
      pending_[i][j] = pending_[j][i] = 0;
      const Entry& a = basis_[i];
      const Entry& b = basis_[j];
      Monomial l = a.lead.lcm(b.lead);
      if (options_.criteria && chain_skip(i, j, l)) continue;
      Monomial ma = l / a.lead;
      Monomial mb = l / b.lead;
      v = module_.zero();
      module_.combine_into(v, field.one(), ma, a.v);
      module_.combine_into(v, field.neg(field.one()), mb, b.v);
      if (options_.track) {
        rep = rep_module_.zero();
        rep_module_.combine_into(rep, field.one(), ma, a.rep);
        rep_module_.combine_into(rep, field.neg(field.one()), mb, b.rep);
      }
    }
    Vec r = reduce_impl(std::move(v), options_.track ? &rep : nullptr);
    if (FreeModule<F>::is_zero(r)) {
      if (options_.collect_syzygies && !FreeModule<F>::is_zero(rep)) syzygies_.push_back(std::move(rep));
      continue;
    }
    if (item.kind == 1) minimal_inputs_.push_back(item.i);
    insert(std::move(r), std::move(rep), item.sugar);
    push_pairs(basis_.size() - 1);
  }
}

template <class F>
void ModuleGroebner<F>::insert(Vec v, Vec rep, int sugar) {
  const auto& field = module_.ring().field();
  int c = module_.lead_component(v);
  auto lc = v[c].lead().coeff;
  if (!field.is_one(lc)) {
    auto inv = field.inv(lc);
    v = module_.scale(v, inv);
    if (options_.track) rep = rep_module_.scale(rep, inv);
  }
  Entry e;
  e.lead = v[c].lead().mono;
  e.comp = static_cast<std::size_t>(c);
  e.sugar = sugar;
  e.terms = 0;
  for (const auto& p : v) e.terms += p.size();
  e.v = std::move(v);
  e.rep = std::move(rep);
  basis_.push_back(std::move(e));
  for (auto& row : pending_) row.push_back(0);
  pending_.emplace_back(basis_.size(), 0);
}

template <class F>
bool ModuleGroebner<F>::chain_skip(std::size_t i, std::size_t j, const Monomial& lcm) const {
  const std::size_t comp = basis_[i].comp;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k == i || k == j || basis_[k].comp != comp) continue;
    if (!basis_[k].lead.divides(lcm)) continue;
    if (pending_[i][k] || pending_[j][k]) continue;
    return true;
  }
  return false;
}

template <class F>
const typename ModuleGroebner<F>::Entry* ModuleGroebner<F>::find_reducer(const Monomial& m,
                                                                         std::size_t comp) const {
  const Entry* best = nullptr;
  for (const auto& e : basis_) {
    if (e.comp != comp || !e.lead.divides(m)) continue;
    if (best == nullptr || e.terms < best->terms) best = &e;
  }
  return best;
}

template <class F>
typename ModuleGroebner<F>::Vec ModuleGroebner<F>::reduce_impl(Vec v, Vec* rep) const {
  const auto& ring = module_.ring();
  const auto& field = ring.field();
  std::vector<std::vector<Term<F>>> rest(module_.rank());
  while (true) {
    int c = module_.lead_component(v);
    if (c < 0) break;
    const Term<F>& t = v[c].lead();
    const Entry* g = find_reducer(t.mono, static_cast<std::size_t>(c));
    if (g == nullptr) {
      rest[c].push_back(t);
      v[c] = ring.drop_lead(v[c]);
      continue;
    }
    Monomial q = t.mono / g->lead;
    auto coeff = field.neg(t.coeff);
    if (rep != nullptr) rep_module_.combine_into(*rep, coeff, q, g->rep);
    module_.combine_into(v, coeff, q, g->v);
  }
  Vec out(module_.rank());
  for (std::size_t c = 0; c < module_.rank(); ++c) out[c] = ring.from_sorted_terms(std::move(rest[c]));
  return out;
}

template <class F>
typename ModuleGroebner<F>::Vec ModuleGroebner<F>::reduce(const Vec& v) const {
  return reduce_impl(v, nullptr);
}

template <class F>
std::optional<typename ModuleGroebner<F>::Vec> ModuleGroebner<F>::lift(const Vec& v) const {
  if (!options_.track) throw MathError("lift requires a tracked Gröbner basis");
  Vec rep = rep_module_.zero();
  Vec r = reduce_impl(v, &rep);
  if (!FreeModule<F>::is_zero(r)) return std::nullopt;
  return rep_module_.scale(rep, module_.ring().field().neg(module_.ring().field().one()));
}

template <class F>
std::vector<typename ModuleGroebner<F>::Vec> ModuleGroebner<F>::basis() const {
  std::vector<Vec> out;
  out.reserve(basis_.size());
  for (const auto& e : basis_) out.push_back(e.v);
  return out;
}

template <class F>
std::vector<typename ModuleGroebner<F>::Vec> ModuleGroebner<F>::reduced_basis() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (i == j || basis_[j].comp != basis_[i].comp) continue;
      if (!basis_[j].lead.divides(basis_[i].lead)) continue;
      if (basis_[j].lead == basis_[i].lead && j > i) continue;
      redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  // Tail-reduce each kept element against the others.
  ModuleGroebner<F> shell(*this);
  shell.basis_.clear();
  for (std::size_t i : keep) {
    Entry e = basis_[i];
    e.rep.clear();
    shell.basis_.push_back(std::move(e));
  }
  const auto& ring = module_.ring();
  std::vector<Vec> out;
  for (std::size_t idx = 0; idx < shell.basis_.size(); ++idx) {
    Entry self = shell.basis_[idx];
    Vec tail = self.v;
    tail[self.comp] = ring.drop_lead(tail[self.comp]);
    shell.basis_[idx].comp = static_cast<std::size_t>(-1);  // exclude itself
    Vec reduced = shell.reduce_impl(std::move(tail), nullptr);
    shell.basis_[idx].comp = self.comp;
    reduced[self.comp] = ring.add(reduced[self.comp], ring.monomial(self.lead));
    out.push_back(std::move(reduced));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    int ca = module_.lead_component(a), cb = module_.lead_component(b);
    return module_.compare(a[ca].lead().mono, ca, b[cb].lead().mono, cb) > 0;
  });
  return out;
}

template <class F>
std::vector<std::vector<Monomial>> ModuleGroebner<F>::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(module_.rank());
  for (const auto& v : reduced_basis()) {
    int c = module_.lead_component(v);
    out[c].push_back(v[c].lead().mono);
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  if (!ring->order().is_global()) throw MathError("Buchberger's algorithm needs a global order");
  std::vector<Vector<F>> inputs;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    ring->check(g);
    if (g.is_zero()) continue;
    inputs.push_back(Vector<F>{g});
    degrees.push_back(ring->degree(g));
  }
  ModuleGroebner<F> gb(FreeModule<F>(ring, {0}), std::move(inputs), std::move(degrees));
  std::vector<Polynomial<F>> out;
  for (auto& v : gb.reduced_basis()) out.push_back(std::move(v[0]));
  return out;
}

template <class F>
Polynomial<F> normal_form(const RingPtr<F>& ring, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& basis) {
  const auto& field = ring->field();
  std::vector<Term<F>> rest;
  Polynomial<F> h = f;
  while (!h.is_zero()) {
    const Term<F>& t = h.lead();
    const Polynomial<F>* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.lead().mono.divides(t.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      rest.push_back(t);
      h = ring->drop_lead(h);
      continue;
    }
    auto coeff = field.neg(field.div(t.coeff, reducer->lead().coeff));
    h = ring->combine(h, coeff, t.mono / reducer->lead().mono, *reducer);
  }
  return ring->from_sorted_terms(std::move(rest));
}

#define CONEBOUND_INSTANTIATE_GROEBNER(F)                                                      \
  template class ModuleGroebner<F>;                                                           \
  template std::vector<Polynomial<F>> buchberger<F>(const RingPtr<F>&,                        \
                                                    const std::vector<Polynomial<F>>&);       \
  template Polynomial<F> normal_form<F>(const RingPtr<F>&, const Polynomial<F>&,              \
                                        const std::vector<Polynomial<F>>&);

CONEBOUND_INSTANTIATE_GROEBNER(PrimeField)
CONEBOUND_INSTANTIATE_GROEBNER(RationalField)

}  // namespace conebound
