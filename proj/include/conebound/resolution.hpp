#pragma once

#include <map>
#include <string>
#include <vector>

#include "conebound/groebner.hpp"
#include "conebound/hilbert.hpp"

namespace conebound {

/// Indices of a minimal generating subset of homogeneous vectors, scanning
/// them in degree order.
template <class F>
std::vector<std::size_t> minimal_generator_indices(const FreeModule<F>& module, const std::vector<Vector<F>>& vectors,
                                                   const std::vector<int>& degrees);

/// Generators of the module of relations among homogeneous vectors of
/// `module`; result vectors live in ⊕ S(-degrees[k]).
template <class F>
struct SyzygyModule {
  std::vector<Vector<F>> generators;
  std::vector<int> degrees;
};

template <class F>
SyzygyModule<F> syzygy_module(const FreeModule<F>& module, const std::vector<Vector<F>>& vectors,
                              const std::vector<int>& degrees, bool minimal);

/// First syzygies of the presentation matrix of M, as a presentation whose
/// target is the source of M's matrix. Minimal generators.
template <class F>
GradedPresentation<F> syzygies(const GradedPresentation<F>& presentation);

/// Minimal presentation: cancels unit entries, then keeps minimal relations.
template <class F>
GradedPresentation<F> prune(const GradedPresentation<F>& presentation);

/// 0 <- F_0 <- F_1 <- ... <- F_p. maps[k] holds the columns of
/// d_{k+1}: F_{k+1} -> F_k as vectors of F_k.
template <class F>
struct FreeResolution {
  RingPtr<F> ring;
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<Vector<F>>> maps;

  /// Index of the last nonzero free module; -1 for the zero module.
  int length() const;
  FreeModule<F> free_module(std::size_t i) const { return FreeModule<F>(ring, degrees.at(i)); }
  /// True when no map has a nonzero constant entry.
  bool is_minimal() const;
};

/// Graded free resolution of a homogeneous presentation. The minimal variant
/// prunes M and takes minimal syzygy generators at every step. The
/// non-minimal variant uses every syzygy produced by Buchberger's algorithm
/// up to homological degree n - 1 and minimal generators from there on, so
/// that it stops.
template <class F>
FreeResolution<F> free_resolution(const GradedPresentation<F>& presentation, bool minimal = true);

/// Gaussian elimination on unit entries, homological degree by degree.
template <class F>
FreeResolution<F> minimize_resolution(FreeResolution<F> resolution);

class BettiTable {
 public:
  BettiTable(std::map<std::pair<int, int>, long> entries, int nvars);

  /// b_{i,j}
  long at(int i, int j) const;
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  int projective_dimension() const { return pd_; }
  int nvars() const { return nvars_; }
  /// max{j - i}; throws for the zero module.
  int regularity() const;
  /// Macaulay2-style table with rows j - i and columns i.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, long> entries_;
  int pd_ = -1;
  int nvars_;
};

/// Throws MathError when the resolution is not minimal.
template <class F>
BettiTable betti_table(const FreeResolution<F>& resolution);

/// Auslander-Buchsbaum: n - pd.
template <class F>
int depth_from_betti(const FreeResolution<F>& resolution);

/// Ext^i(M, S) from a minimal resolution of M, as a pruned presentation.
template <class F>
GradedPresentation<F> ext_module(const FreeResolution<F>& resolution, int i);

template <class F>
GradedPresentation<F> ext_module(const GradedPresentation<F>& presentation, int i);

/// Σ_j dim_k M_j t^j, from the leading monomials of a Gröbner basis of the
/// relations.
template <class F>
HilbertSeries module_hilbert_series(const GradedPresentation<F>& presentation);

template <class F>
BigInt graded_piece_dim(const GradedPresentation<F>& presentation, int j);

/// Matrix product d_k ∘ d_{k+1} as a list of column vectors of F_{k-1}.
template <class F>
std::vector<Vector<F>> compose(const FreeResolution<F>& resolution, std::size_t k);

}  // namespace conebound
