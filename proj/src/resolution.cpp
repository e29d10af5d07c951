#include "conebound/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace conebound {

namespace {

template <class F>
bool is_unit_entry(const PolyRing<F>& ring, const Polynomial<F>& p) {
  return !p.is_zero() && p.lead().mono.is_one() && ring.degree(p) == 0;
}

template <class F>
void require_homogeneous(const FreeModule<F>& module, const std::vector<Vector<F>>& vectors,
                         const std::vector<int>& degrees) {
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (FreeModule<F>::is_zero(vectors[k])) continue;
    if (!module.is_homogeneous(vectors[k]) || module.degree(vectors[k]) != degrees[k])
      throw MathError("graded module computations need homogeneous input of the declared degree");
  }
}

}  // namespace

template <class F>
std::vector<std::size_t> minimal_generator_indices(const FreeModule<F>& module, const std::vector<Vector<F>>& vectors,
                                                   const std::vector<int>& degrees) {
  require_homogeneous(module, vectors, degrees);
  GroebnerOptions opts;
  ModuleGroebner<F> gb(module, vectors, degrees, opts);
  std::vector<std::size_t> idx = gb.minimal_input_indices();
  std::sort(idx.begin(), idx.end());
  return idx;
}

template <class F>
SyzygyModule<F> syzygy_module(const FreeModule<F>& module, const std::vector<Vector<F>>& vectors,
                              const std::vector<int>& degrees, bool minimal) {
  require_homogeneous(module, vectors, degrees);
  GroebnerOptions opts;
  opts.collect_syzygies = true;
  ModuleGroebner<F> gb(module, vectors, degrees, opts);
  FreeModule<F> source(module.ring_ptr(), degrees);
  SyzygyModule<F> out;
  std::vector<int> syz_degrees;
  for (const auto& s : gb.syzygies()) syz_degrees.push_back(source.degree(s));
  if (!minimal) {
    out.generators = gb.syzygies();
    out.degrees = std::move(syz_degrees);
    return out;
  }
  for (std::size_t k : minimal_generator_indices(source, gb.syzygies(), syz_degrees)) {
    out.generators.push_back(gb.syzygies()[k]);
    out.degrees.push_back(syz_degrees[k]);
  }
  return out;
}

template <class F>
GradedPresentation<F> syzygies(const GradedPresentation<F>& presentation) {
  presentation.validate();
  SyzygyModule<F> syz =
      syzygy_module(presentation.target(), presentation.relations, presentation.relation_degrees, true);
  GradedPresentation<F> out;
  out.ring = presentation.ring;
  out.generator_degrees = presentation.relation_degrees;
  out.relation_degrees = std::move(syz.degrees);
  out.relations = std::move(syz.generators);
  return out;
}

namespace {

template <class V>
void erase_index(V& v, std::size_t i) {
  v.erase(v.begin() + static_cast<long>(i));
}

/// In maps[k] (columns of d_{k+1}), cancels the unit entry at (row, col) and
/// the two free summands it connects.
template <class F>
void cancel_unit(FreeResolution<F>& res, std::size_t k, std::size_t row, std::size_t col) {
  const auto& ring = *res.ring;
  const auto& field = ring.field();
  auto& cols = res.maps[k];
  const Vector<F> pivot = cols[col];
  const auto inv = field.inv(pivot[row].lead().coeff);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c == col || cols[c][row].is_zero()) continue;
    // col_c -= (entry / u) * pivot
    const Polynomial<F> factor = ring.scale(cols[c][row], field.neg(inv));
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      if (!pivot[r].is_zero()) cols[c][r] = ring.add(cols[c][r], ring.mul(factor, pivot[r]));
  }
  erase_index(cols, col);
  for (auto& v : cols) erase_index(v, row);
  if (k + 1 < res.maps.size())
    for (auto& v : res.maps[k + 1]) erase_index(v, col);
  if (k >= 1) erase_index(res.maps[k - 1], row);
  erase_index(res.degrees[k], row);
  erase_index(res.degrees[k + 1], col);
}

template <class F>
bool find_unit(const FreeResolution<F>& res, std::size_t k, std::size_t& row, std::size_t& col) {
  for (std::size_t c = 0; c < res.maps[k].size(); ++c)
    for (std::size_t r = 0; r < res.maps[k][c].size(); ++r)
      if (is_unit_entry(*res.ring, res.maps[k][c][r])) {
        row = r;
        col = c;
        return true;
      }
  return false;
}

template <class F>
void trim_trailing(FreeResolution<F>& res) {
  while (res.degrees.size() > 1 && res.degrees.back().empty()) {
    res.degrees.pop_back();
    res.maps.pop_back();
  }
}

}  // namespace

template <class F>
GradedPresentation<F> prune(const GradedPresentation<F>& presentation) {
  presentation.validate();
  FreeResolution<F> res;
  res.ring = presentation.ring;
  res.degrees = {presentation.generator_degrees, presentation.relation_degrees};
  res.maps = {presentation.relations};
  std::size_t row = 0, col = 0;
  while (find_unit(res, 0, row, col)) cancel_unit(res, 0, row, col);

  GradedPresentation<F> out;
  out.ring = presentation.ring;
  out.generator_degrees = res.degrees[0];
  FreeModule<F> target = out.target();
  std::vector<Vector<F>> nonzero;
  std::vector<int> degrees;
  for (std::size_t c = 0; c < res.maps[0].size(); ++c) {
    if (FreeModule<F>::is_zero(res.maps[0][c])) continue;
    nonzero.push_back(res.maps[0][c]);
    degrees.push_back(res.degrees[1][c]);
  }
  for (std::size_t k : minimal_generator_indices(target, nonzero, degrees)) {
    out.relations.push_back(nonzero[k]);
    out.relation_degrees.push_back(degrees[k]);
  }
  return out;
}

template <class F>
int FreeResolution<F>::length() const {
  for (std::size_t i = degrees.size(); i-- > 0;)
    if (!degrees[i].empty()) return static_cast<int>(i);
  return -1;
}

template <class F>
bool FreeResolution<F>::is_minimal() const {
  for (const auto& cols : maps)
    for (const auto& v : cols)
      for (const auto& p : v)
        if (is_unit_entry(*ring, p)) return false;
  return true;
}

template <class F>
FreeResolution<F> free_resolution(const GradedPresentation<F>& presentation, bool minimal) {
  GradedPresentation<F> start = minimal ? prune(presentation) : presentation;
  start.validate();
  const int n = static_cast<int>(start.ring->nvars());
  FreeResolution<F> res;
  res.ring = start.ring;
  res.degrees.push_back(start.generator_degrees);

  std::vector<Vector<F>> cols;
  std::vector<int> col_degrees;
  for (std::size_t j = 0; j < start.relations.size(); ++j) {
    if (FreeModule<F>::is_zero(start.relations[j])) continue;
    cols.push_back(start.relations[j]);
    col_degrees.push_back(start.relation_degrees[j]);
  }
  while (!cols.empty()) {
    const std::size_t k = res.degrees.size() - 1;
    res.maps.push_back(cols);
    res.degrees.push_back(col_degrees);
    if (static_cast<int>(k) > n + 1) throw MathError("resolution longer than the number of variables");
    bool take_minimal = minimal || static_cast<int>(k) + 1 >= n;
    SyzygyModule<F> syz = syzygy_module(res.free_module(k), cols, col_degrees, take_minimal);
    cols = std::move(syz.generators);
    col_degrees = std::move(syz.degrees);
  }
  return res;
}

template <class F>
FreeResolution<F> minimize_resolution(FreeResolution<F> res) {
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    std::size_t row = 0, col = 0;
    while (find_unit(res, k, row, col)) cancel_unit(res, k, row, col);
  }
  trim_trailing(res);
  return res;
}

BettiTable::BettiTable(std::map<std::pair<int, int>, long> entries, int nvars)
    : entries_(std::move(entries)), nvars_(nvars) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second == 0) {
      it = entries_.erase(it);
      continue;
    }
    pd_ = std::max(pd_, it->first.first);
    ++it;
  }
}

long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw MathError("regularity of the zero module is undefined");
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, b] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(zero module)\n";
  int lo = entries_.begin()->first.second - entries_.begin()->first.first;
  int hi = lo;
  for (const auto& [key, b] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int i = 0; i <= pd_; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> line{std::to_string(r) + ":"};
    for (int i = 0; i <= pd_; ++i) {
      long b = at(i, i + r);
      line.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += std::string(width[c] - line[c].size() + (c ? 1 : 0), ' ');
      out += line[c];
    }
    out += '\n';
  }
  return out;
}

template <class F>
BettiTable betti_table(const FreeResolution<F>& resolution) {
  if (!resolution.is_minimal()) throw MathError("Betti numbers need a minimal resolution");
  std::map<std::pair<int, int>, long> entries;
  for (std::size_t i = 0; i < resolution.degrees.size(); ++i)
    for (int d : resolution.degrees[i]) ++entries[{static_cast<int>(i), d}];
  return BettiTable(std::move(entries), static_cast<int>(resolution.ring->nvars()));
}

template <class F>
int depth_from_betti(const FreeResolution<F>& resolution) {
  BettiTable t = betti_table(resolution);
  if (t.projective_dimension() < 0) throw MathError("depth of the zero module is undefined");
  return t.nvars() - t.projective_dimension();
}

template <class F>
GradedPresentation<F> ext_module(const FreeResolution<F>& res, int i) {
  GradedPresentation<F> out;
  out.ring = res.ring;
  const int p = res.length();
  if (i < 0 || i > p) return out;
  const std::size_t ui = static_cast<std::size_t>(i);
  const std::size_t rank = res.degrees[ui].size();

  std::vector<int> dual_degrees;
  for (int d : res.degrees[ui]) dual_degrees.push_back(-d);
  FreeModule<F> dual(res.ring, dual_degrees);

  // Kernel of the transpose of d_{i+1}.
  std::vector<Vector<F>> kernel;
  std::vector<int> kernel_degrees;
  if (i == p) {
    for (std::size_t k = 0; k < rank; ++k) {
      kernel.push_back(dual.basis(k));
      kernel_degrees.push_back(dual_degrees[k]);
    }
  } else {
    const auto& next = res.maps[ui];
    std::vector<int> next_dual;
    for (int d : res.degrees[ui + 1]) next_dual.push_back(-d);
    FreeModule<F> next_module(res.ring, next_dual);
    std::vector<Vector<F>> transposed;
    for (std::size_t k = 0; k < rank; ++k) {
      Vector<F> v = next_module.zero();
      for (std::size_t c = 0; c < next.size(); ++c) v[c] = next[c][k];
      transposed.push_back(std::move(v));
    }
    SyzygyModule<F> syz = syzygy_module(next_module, transposed, dual_degrees, true);
    kernel = std::move(syz.generators);
    kernel_degrees = std::move(syz.degrees);
  }
  if (kernel.empty()) return out;

  GroebnerOptions opts;
  opts.collect_syzygies = true;
  ModuleGroebner<F> gb(dual, kernel, kernel_degrees, opts);
  out.generator_degrees = kernel_degrees;
  FreeModule<F> target = out.target();

  if (i >= 1) {
    // Image of the transpose of d_i, written in the kernel generators.
    const auto& prev = res.maps[ui - 1];
    const std::size_t prev_rank = res.degrees[ui - 1].size();
    for (std::size_t l = 0; l < prev_rank; ++l) {
      Vector<F> v = dual.zero();
      for (std::size_t k = 0; k < rank; ++k) v[k] = prev[k][l];
      if (FreeModule<F>::is_zero(v)) continue;
      auto coeffs = gb.lift(v);
      if (!coeffs) throw MathError("complex is not exact: image of the dual map lies outside the kernel");
      if (FreeModule<F>::is_zero(*coeffs)) continue;
      out.relations.push_back(std::move(*coeffs));
      out.relation_degrees.push_back(-res.degrees[ui - 1][l]);
    }
  }
  for (const auto& s : gb.syzygies()) {
    out.relations.push_back(s);
    out.relation_degrees.push_back(target.degree(s));
  }
  return prune(out);
}

template <class F>
GradedPresentation<F> ext_module(const GradedPresentation<F>& presentation, int i) {
  return ext_module(free_resolution(presentation, true), i);
}

template <class F>
HilbertSeries module_hilbert_series(const GradedPresentation<F>& presentation) {
  const int n = static_cast<int>(presentation.ring->nvars());
  if (presentation.num_generators() == 0) return HilbertSeries(LaurentPolynomial(), n);
  FreeModule<F> target = presentation.target();
  std::vector<Vector<F>> cols;
  std::vector<int> degrees;
  for (std::size_t j = 0; j < presentation.relations.size(); ++j) {
    if (FreeModule<F>::is_zero(presentation.relations[j])) continue;
    cols.push_back(presentation.relations[j]);
    degrees.push_back(presentation.relation_degrees[j]);
  }
  require_homogeneous(target, cols, degrees);
  ModuleGroebner<F> gb(target, std::move(cols), std::move(degrees));
  auto leads = gb.leading_monomials();
  LaurentPolynomial numerator;
  for (std::size_t c = 0; c < target.rank(); ++c)
    numerator = numerator + hilbert_numerator(leads[c], presentation.ring->nvars())
                                .shifted(presentation.generator_degrees[c]);
  return HilbertSeries(std::move(numerator), n);
}

template <class F>
BigInt graded_piece_dim(const GradedPresentation<F>& presentation, int j) {
  return module_hilbert_series(presentation).value(j);
}

template <class F>
std::vector<Vector<F>> compose(const FreeResolution<F>& res, std::size_t k) {
  // d_k ∘ d_{k+1}: columns of d_{k+1} are vectors of F_k, mapped by d_k.
  if (k == 0 || k >= res.maps.size()) throw MathError("compose needs 1 <= k < number of maps");
  const auto& ring = *res.ring;
  FreeModule<F> target = res.free_module(k - 1);
  std::vector<Vector<F>> out;
  for (const auto& col : res.maps[k]) {
    Vector<F> v = target.zero();
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (col[r].is_zero()) continue;
      for (std::size_t s = 0; s < target.rank(); ++s)
        v[s] = ring.add(v[s], ring.mul(col[r], res.maps[k - 1][r][s]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

#define CONEBOUND_INSTANTIATE_RESOLUTION(F)                                                           \
  template std::vector<std::size_t> minimal_generator_indices<F>(                                     \
      const FreeModule<F>&, const std::vector<Vector<F>>&, const std::vector<int>&);                  \
  template struct SyzygyModule<F>;                                                                    \
  template SyzygyModule<F> syzygy_module<F>(const FreeModule<F>&, const std::vector<Vector<F>>&,      \
                                            const std::vector<int>&, bool);                           \
  template GradedPresentation<F> syzygies<F>(const GradedPresentation<F>&);                           \
  template GradedPresentation<F> prune<F>(const GradedPresentation<F>&);                              \
  template struct FreeResolution<F>;                                                                  \
  template FreeResolution<F> free_resolution<F>(const GradedPresentation<F>&, bool);                  \
  template FreeResolution<F> minimize_resolution<F>(FreeResolution<F>);                               \
  template BettiTable betti_table<F>(const FreeResolution<F>&);                                       \
  template int depth_from_betti<F>(const FreeResolution<F>&);                                         \
  template GradedPresentation<F> ext_module<F>(const FreeResolution<F>&, int);                        \
  template GradedPresentation<F> ext_module<F>(const GradedPresentation<F>&, int);                    \
  template HilbertSeries module_hilbert_series<F>(const GradedPresentation<F>&);                      \
  template BigInt graded_piece_dim<F>(const GradedPresentation<F>&, int);                             \
  template std::vector<Vector<F>> compose<F>(const FreeResolution<F>&, std::size_t);

CONEBOUND_INSTANTIATE_RESOLUTION(PrimeField)
CONEBOUND_INSTANTIATE_RESOLUTION(RationalField)

}  // namespace conebound
