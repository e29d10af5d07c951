#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conebound/ideal.hpp"
#include "conebound/resolution.hpp"

namespace conebound {

/// Krull dimension; -1 for the zero module.
template <class F>
int module_dimension(const GradedPresentation<F>& module);

/// e(M) = Q(1); throws MathError for the zero module.
template <class F>
BigInt multiplicity(const GradedPresentation<F>& module);

/// Total k-dimension when finite, nullopt otherwise.
template <class F>
std::optional<BigInt> graded_length(const GradedPresentation<F>& module);

/// Contribution of Ext^{n-i}(M, S) to hdeg(M).
struct ExtLevel {
  int i = 0;
  int ext_index = 0;
  int dimension = -1;
  BigInt hdeg;
  BigInt weight;  ///< C(r-1, i)
};

struct DegreeReport {
  int dim = -1;
  BigInt e;
  BigInt hdeg;
  BigInt deviation;  ///< hdeg - e
  std::vector<ExtLevel> levels;
  /// ℓ(H^i_m(M)) for i < dim, where finite.
  std::vector<std::optional<BigInt>> local_lengths;
  bool gcm = false;
};

/// Recursive homological degree with a per-instance memo keyed on the
/// pruned presentation. Not thread-safe; use one instance per computation.
template <class F>
class HomologicalDegree {
 public:
  BigInt operator()(const GradedPresentation<F>& module);
  /// Full report for M. `ext`, when given, holds Ext^j(M, S) for j = 0..n.
  DegreeReport report(const GradedPresentation<F>& module,
                      const std::vector<GradedPresentation<F>>* ext = nullptr);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::string, BigInt> memo_;
};

template <class F>
DegreeReport hdeg(const GradedPresentation<F>& module);

/// hdeg(S/I); throws UnsupportedError for a non-homogeneous ideal.
template <class F>
DegreeReport hdeg(const Ideal<F>& ideal);

/// e + Σ C(r-1, i) ℓ(H^i_m(M)); throws MathError("not gCM") if some lower
/// local cohomology has infinite length.
template <class F>
BigInt hdeg_gcm(const GradedPresentation<F>& module);

template <class F>
BigInt cm_deviation(const GradedPresentation<F>& module);

}  // namespace conebound
