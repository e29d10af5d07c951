#pragma once

#include <optional>
#include <vector>

#include "conebound/ideal.hpp"
#include "conebound/resolution.hpp"

namespace conebound {

/// A standard graded quotient R = S/J with its minimal resolution and all
/// Ext^j(R, S), j = 0..n.
template <class F>
struct GradedRing {
  Ideal<F> ideal;
  GradedPresentation<F> presentation;
  FreeResolution<F> resolution;
  BettiTable betti;
  std::vector<GradedPresentation<F>> ext;
  HilbertSeries series;
};

/// Throws MathError for a non-homogeneous or unit ideal.
template <class F>
GradedRing<F> graded_ring(const Ideal<F>& ideal);

/// Graded pieces of H^i_{R+}(R) through local duality:
/// dim H^i(R)_m = dim Ext^{N-i}(R, S)_{-m-N}, N the number of variables.
class CohomologyTable {
 public:
  /// ext_series[j] is the Hilbert series of Ext^j(R, S).
  CohomologyTable(int nvars, std::vector<HilbertSeries> ext_series);

  int nvars() const { return nvars_; }
  BigInt dim(int i, int m) const;
  /// a_i = max{m : H^i_m != 0}; nullopt when H^i = 0.
  std::optional<int> a(int i) const;
  /// (m, dim H^i_m) for lowest <= m <= a_i with nonzero dimension.
  std::vector<std::pair<int, BigInt>> nonvanishing(int i, int lowest) const;
  /// max{a_i + i : i >= 0}; nullopt for the zero module.
  std::optional<int> regularity() const;
  /// max{a_i + i : i > 0}; nullopt when every H^i with i > 0 vanishes.
  std::optional<int> g_regularity() const;

 private:
  int nvars_;
  std::vector<HilbertSeries> ext_;
};

template <class F>
CohomologyTable cohomology_table(const GradedRing<F>& ring);

/// max{j - i} over the Betti table.
template <class F>
int regularity_from_betti(const GradedRing<F>& ring);

/// Both routes; throws MathError if they disagree.
template <class F>
int regularity(const GradedRing<F>& ring);

/// Least m >= 0 with H^i(R)_{m-i+1} = 0 for every i (weak m-regularity).
int weak_regularity(const CohomologyTable& table);

struct HilbertData {
  HilbertSeries series;
  int dimension = 0;
  int horizon = 0;
  std::vector<BigInt> hilbert;                 ///< h_G(n), n = 0..horizon
  std::vector<BigInt> samuel;                  ///< ℓ(A/m^{n+1}), n = 0..horizon
  std::vector<BigRational> hilbert_polynomial; ///< p_G(X), constant term first
  std::vector<BigInt> e;                       ///< e_0..e_d

  /// P_A(n) = Σ (-1)^i e_i C(n+d-i, d-i)
  BigInt samuel_polynomial(long n) const;
};

/// Hilbert-Samuel data of a local ring from the Hilbert series of its
/// tangent cone. The horizon defaults to reg + d + 10. The e_i are checked
/// against the Hilbert-Samuel function at five points beyond reg; a mismatch
/// throws MathError.
HilbertData hilbert_samuel(const HilbertSeries& tangent_cone_series, int reg, int horizon = -1);

template <class F>
struct QuotientByFiniteLength {
  Ideal<F> saturation;            ///< I : m^∞
  BigInt length;                  ///< ℓ(L)
  std::optional<int> reg_quotient; ///< reg of the tangent cone of A/L; empty when A/L = 0
};

/// reg(G') and ℓ(L) for G' the tangent cone of A/L.
template <class F>
QuotientByFiniteLength<F> reg_of_quotient_mod_L(const Ideal<F>& ideal);

}  // namespace conebound
