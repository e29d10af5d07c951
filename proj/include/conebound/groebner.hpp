#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conebound/module.hpp"

namespace conebound {

struct GroebnerOptions {
  /// Carry, for every basis element, its expression in the input generators.
  bool track = false;
  /// Record the syzygies of the inputs found along the way (implies track).
  bool collect_syzygies = false;
  /// Buchberger's coprime and chain criteria.
  bool criteria = true;
};

/// Buchberger's algorithm for submodules of a graded free module under a
/// global order, with the normal selection strategy (smallest sugar degree
/// first, pairs before same-degree generators).
///
/// Inputs are queued with their degrees and processed in degree order, so for
/// homogeneous input the inputs that do not reduce to zero when they are
/// reached form a minimal generating set. With tracking enabled each basis
/// element g satisfies g = Σ rep(g)_k f_k, and every S-pair that reduces to
/// zero yields a syzygy of the inputs; these generate the full syzygy module.
template <class F>
class ModuleGroebner {
 public:
  using Element = typename F::Element;
  using Vec = Vector<F>;

  ModuleGroebner(FreeModule<F> module, std::vector<Vec> inputs, std::vector<int> input_degrees,
                 GroebnerOptions options = {});

  const FreeModule<F>& module() const { return module_; }
  std::size_t num_inputs() const { return inputs_.size(); }

  /// All basis elements produced (not interreduced).
  std::vector<Vec> basis() const;
  /// Minimal, tail-reduced, monic basis sorted by leading term (descending).
  std::vector<Vec> reduced_basis() const;
  /// Leading monomials per component, from the minimal basis.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  /// Syzygies of the inputs in S^m, m = number of inputs (collect_syzygies).
  const std::vector<Vec>& syzygies() const { return syzygies_; }
  /// Indices of inputs that were not in the span of earlier material.
  const std::vector<std::size_t>& minimal_input_indices() const { return minimal_inputs_; }

  /// Full normal form of v.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return FreeModule<F>::is_zero(reduce(v)); }
  /// Coefficients c in S^m with v = Σ c_k f_k, when v lies in the submodule.
  std::optional<Vec> lift(const Vec& v) const;

 private:
  struct Entry {
    Vec v;
    Vec rep;
    Monomial lead;
    std::size_t comp;
    int sugar;
    std::size_t terms;
  };
  struct Item {
    int sugar;
    int kind;  // 0 = pair, 1 = input
    std::uint64_t seq;
    std::size_t i, j;
    bool operator>(const Item& o) const {
      if (sugar != o.sugar) return sugar > o.sugar;
      if (kind != o.kind) return kind > o.kind;
      return seq > o.seq;
    }
  };

  void run();
  void insert(Vec v, Vec rep, int sugar);
  bool chain_skip(std::size_t i, std::size_t j, const Monomial& lcm) const;
  const Entry* find_reducer(const Monomial& m, std::size_t comp) const;
  /// Reduces v in place; rep (if non-null) is updated alongside.
  Vec reduce_impl(Vec v, Vec* rep) const;

  FreeModule<F> module_;
  FreeModule<F> rep_module_;
  std::vector<Vec> inputs_;
  std::vector<int> input_degrees_;
  GroebnerOptions options_;
  std::vector<Entry> basis_;
  std::vector<std::vector<std::uint8_t>> pending_;
  std::vector<Vec> syzygies_;
  std::vector<std::size_t> minimal_inputs_;
};

/// Reduced Gröbner basis of an ideal under the ring's (global) order.
template <class F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens);

/// Full normal form of f with respect to a Gröbner basis.
template <class F>
Polynomial<F> normal_form(const RingPtr<F>& ring, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& basis);

}  // namespace conebound
