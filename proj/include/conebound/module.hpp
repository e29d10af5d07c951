#pragma once

#include <string>
#include <vector>

#include "conebound/polynomial.hpp"

namespace conebound {

/// Element of a free module S^r, one polynomial per component.
template <class F>
using Vector = std::vector<Polynomial<F>>;

/// Graded free module F = ⊕ S(-a_i) with a term-over-position order that
/// compares shifted degree first (for graded base orders), then the base
/// order, then the component index (smaller index is larger).
template <class F>
class FreeModule {
 public:
  using Element = typename F::Element;
  using Poly = Polynomial<F>;
  using Vec = Vector<F>;

  FreeModule(RingPtr<F> ring, std::vector<int> degrees)
      : ring_(std::move(ring)), degrees_(std::move(degrees)) {
    if (!ring_->order().is_global()) throw MathError("free modules need a global term order");
  }

  const PolyRing<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }

  Vec zero() const { return Vec(rank(), ring_->zero()); }
  Vec basis(std::size_t i) const {
    Vec v = zero();
    v[i] = ring_->one();
    return v;
  }

  static bool is_zero(const Vec& v) {
    for (const auto& p : v)
      if (!p.is_zero()) return false;
    return true;
  }

  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
    if (ring_->order().is_graded()) {
      int da = a.degree() + degrees_[ca];
      int db = b.degree() + degrees_[cb];
      if (da != db) return da > db ? 1 : -1;
    }
    int c = ring_->order().compare(a, b);
    if (c != 0) return c;
    if (ca == cb) return 0;
    return ca < cb ? 1 : -1;
  }

  /// Component holding the leading term, or -1 for the zero vector.
  int lead_component(const Vec& v) const {
    int best = -1;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      if (best < 0 || compare(v[c].lead().mono, c, v[best].lead().mono, best) > 0)
        best = static_cast<int>(c);
    }
    return best;
  }

  /// Largest shifted degree of any term, or a sentinel for zero.
  int degree(const Vec& v) const {
    int d = kNoDegree;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) d = std::max(d, ring_->degree(v[c]) + degrees_[c]);
    return d;
  }

  bool is_homogeneous(const Vec& v) const {
    int d = kNoDegree;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      if (!ring_->is_homogeneous(v[c])) return false;
      int dc = ring_->degree(v[c]) + degrees_[c];
      if (d != kNoDegree && d != dc) return false;
      d = dc;
    }
    return true;
  }

  Vec add(const Vec& a, const Vec& b) const {
    Vec r(rank());
    for (std::size_t c = 0; c < rank(); ++c) r[c] = ring_->add(a[c], b[c]);
    return r;
  }
  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(rank());
    for (std::size_t c = 0; c < rank(); ++c) r[c] = ring_->sub(a[c], b[c]);
    return r;
  }
  Vec scale(const Vec& a, const Element& s) const {
    Vec r(rank());
    for (std::size_t c = 0; c < rank(); ++c) r[c] = ring_->scale(a[c], s);
    return r;
  }
  Vec mul_poly(const Vec& a, const Poly& p) const {
    Vec r(rank());
    for (std::size_t c = 0; c < rank(); ++c) r[c] = ring_->mul(a[c], p);
    return r;
  }
  /// a += s * m * b
  void combine_into(Vec& a, const Element& s, const Monomial& m, const Vec& b) const {
    for (std::size_t c = 0; c < rank(); ++c)
      if (!b[c].is_zero()) a[c] = ring_->combine(a[c], s, m, b[c]);
  }

  std::string to_string(const Vec& v) const {
    std::string out = "[";
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) out += ", ";
      out += ring_->to_string(v[c]);
    }
    return out + "]";
  }

  static constexpr int kNoDegree = -(1 << 30);

 private:
  RingPtr<F> ring_;
  std::vector<int> degrees_;
};

/// Graded module presented as the cokernel of a matrix: the target free
/// module has generators in `generator_degrees`; each relation (matrix
/// column) is homogeneous of degree `relation_degrees[j]`, so an entry in row
/// i has degree relation_degrees[j] - generator_degrees[i] or is zero.
template <class F>
struct GradedPresentation {
  RingPtr<F> ring;
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  std::vector<Vector<F>> relations;

  FreeModule<F> target() const { return FreeModule<F>(ring, generator_degrees); }
  std::size_t num_generators() const { return generator_degrees.size(); }
  std::size_t num_relations() const { return relations.size(); }

  /// Entry (row, column) of the presentation matrix.
  const Polynomial<F>& entry(std::size_t row, std::size_t col) const { return relations[col][row]; }

  /// Checks the degree bookkeeping; throws MathError on inconsistency.
  void validate() const;
  /// Canonical text used as a memo key and for debugging.
  std::string to_string() const;
};

/// Presentation of S/I for an ideal given by generators.
template <class F>
GradedPresentation<F> cyclic_presentation(RingPtr<F> ring, const std::vector<Polynomial<F>>& gens);

/// Presentation of the free module ⊕ S(-a_i).
template <class F>
GradedPresentation<F> free_presentation(RingPtr<F> ring, std::vector<int> degrees);

}  // namespace conebound
