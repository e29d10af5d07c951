#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "conebound/groebner.hpp"
#include "conebound/hilbert.hpp"

namespace conebound {

/// Finitely generated ideal of S with lazily computed, internally
/// synchronized Gröbner bases per term order.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(RingPtr<F> ring, std::vector<Poly> gens);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Gröbner basis under the ideal's ring order.
  const std::vector<Poly>& groebner_basis() const;
  /// Reduced Gröbner basis under another global order; polynomials live in
  /// the returned ring.
  std::pair<RingPtr<F>, std::vector<Poly>> groebner_basis(const TermOrder& order) const;

  bool contains(const Poly& f) const;
  bool is_unit() const;
  /// Same ideal (compares reduced Gröbner bases).
  bool operator==(const Ideal& o) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::pair<RingPtr<F>, std::shared_ptr<const std::vector<Poly>>>> bases;
  };
  std::shared_ptr<const std::vector<Poly>> basis_for(const TermOrder& order, RingPtr<F>* ring_out) const;

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

/// Leading-monomial ideal of the reduced Gröbner basis under `order`,
/// returned as monomial generators.
template <class F>
std::vector<Monomial> initial_monomials(const Ideal<F>& ideal, const TermOrder& order);

/// Monomial ideal in(I) as an Ideal over the same ring.
template <class F>
Ideal<F> initial_monomial_ideal(const Ideal<F>& ideal, const TermOrder& order);

/// Krull dimension of S/I; throws MathError for the unit ideal.
template <class F>
int ideal_dimension(const Ideal<F>& ideal);

/// Hilbert series of S/I (via the grevlex initial ideal). For a
/// non-homogeneous ideal this is the series of S/in(I) under a degree order,
/// whose partial sums count standard monomials by degree.
template <class F>
HilbertSeries quotient_hilbert_series(const Ideal<F>& ideal);

/// (I : f), computed from the syzygies of (g_1, ..., g_k, f).
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& f);

/// (I : m) for m = (x_1, ..., x_n), from the syzygies of the columns
/// (x_1, ..., x_n)^T and g_k e_i.
template <class F>
Ideal<F> colon_maximal(const Ideal<F>& ideal);

template <class F>
struct SaturationResult {
  Ideal<F> saturation;  ///< I : m^∞
  BigInt length;        ///< ℓ((I : m^∞)/I)
  int steps;            ///< colon iterations until stable
};

/// Iterates J <- J : m until stable.
template <class F>
SaturationResult<F> colon_saturate_maximal(const Ideal<F>& ideal);

/// Weak normal form under a local order (Mora's algorithm with écart).
template <class F>
Polynomial<F> mora_normal_form(const PolyRing<F>& local_ring, const Polynomial<F>& f,
                               const std::vector<Polynomial<F>>& basis);

/// Standard basis under the ring's local order. Throws MathError when a
/// generator has a nonzero constant term.
template <class F>
std::vector<Polynomial<F>> standard_basis(const RingPtr<F>& local_ring, const std::vector<Polynomial<F>>& gens);

template <class F>
struct TangentConeData {
  RingPtr<F> local_ring;
  std::vector<Polynomial<F>> standard_basis;  ///< in local_ring
  Ideal<F> initial_ideal;                     ///< in*(I), in the source ring
};

/// Tangent cone G = S/in*(I) of the local ring S_(x)/I.
template <class F>
TangentConeData<F> tangent_cone(const Ideal<F>& ideal);

}  // namespace conebound
