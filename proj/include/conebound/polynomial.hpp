#pragma once

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conebound/arith.hpp"
#include "conebound/monomial.hpp"

namespace conebound {

template <class F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

template <class F>
class PolyRing;

/// A polynomial as a list of terms strictly sorted descending under the term
/// order of the ring that built it. Arithmetic goes through the ring.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  Polynomial() = default;

  std::uint32_t ring_id() const { return ring_id_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximal term under the ring's order.
  const Term<F>& lead() const {
    if (terms_.empty()) throw MathError("leading term of the zero polynomial");
    return terms_.front();
  }

  /// Structural equality (same ring, same terms).
  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (!terms_.empty() && ring_id_ != o.ring_id_) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
  }

 private:
  friend class PolyRing<F>;
  std::vector<Term<F>> terms_;
  std::uint32_t ring_id_ = 0;
};

namespace detail {
inline std::uint32_t next_ring_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace detail

/// S = k[x_1..x_n] with a fixed term order. Immutable after construction.
template <class F>
class PolyRing {
 public:
  using Element = typename F::Element;
  using Poly = Polynomial<F>;

  PolyRing(F field, std::vector<std::string> names, TermOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)),
        id_(detail::next_ring_id()) {
    if (names_.size() > kMaxVariables)
      throw UnsupportedError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw MathError("duplicate variable name " + names_[i]);
  }

  /// Same field and variables, different order.
  PolyRing with_order(TermOrder order) const { return PolyRing(field_, names_, std::move(order)); }

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }
  std::uint32_t id() const { return id_; }

  Monomial unit_monomial() const { return Monomial(nvars()); }

  Poly zero() const { return bind({}); }
  Poly constant(const Element& c) const {
    if (field_.is_zero(c)) return zero();
    return bind({Term<F>{unit_monomial(), c}});
  }
  Poly one() const { return constant(field_.one()); }
  Poly variable(std::size_t i) const {
    return bind({Term<F>{Monomial::variable(nvars(), i), field_.one()}});
  }
  Poly monomial(const Monomial& m, const Element& c) const {
    if (field_.is_zero(c)) return zero();
    check_monomial(m);
    return bind({Term<F>{m, c}});
  }
  Poly monomial(const Monomial& m) const { return monomial(m, field_.one()); }

  /// Builds a canonical polynomial from arbitrary terms (sorts, merges, drops zeros).
  Poly from_terms(std::vector<Term<F>> terms) const {
    for (const auto& t : terms) check_monomial(t.mono);
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order_.greater(a.mono, b.mono); });
    std::vector<Term<F>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    return bind(std::move(out));
  }

  /// Wraps terms the caller guarantees to be sorted, distinct and nonzero.
  Poly from_sorted_terms(std::vector<Term<F>> terms) const { return bind(std::move(terms)); }

  /// f without its leading term.
  Poly drop_lead(const Poly& f) const {
    check(f);
    if (f.is_zero()) return f;
    return bind(std::vector<Term<F>>(f.terms_.begin() + 1, f.terms_.end()));
  }

  /// Re-sorts a polynomial from another ring over the same field and variables.
  Poly import(const Poly& f, const PolyRing& from) const {
    if (!(from.field_ == field_) || from.names_ != names_)
      throw MathError("ring mismatch: cannot map between rings with different fields or variables");
    if (from.id_ == id_) return f;
    return from_terms(f.terms_);
  }

  Poly add(const Poly& f, const Poly& g) const { return combine(f, field_.one(), unit_monomial(), g); }
  Poly sub(const Poly& f, const Poly& g) const {
    return combine(f, field_.neg(field_.one()), unit_monomial(), g);
  }
  Poly neg(const Poly& f) const { return scale(f, field_.neg(field_.one())); }

  Poly scale(const Poly& f, const Element& c) const {
    check(f);
    if (field_.is_zero(c)) return zero();
    std::vector<Term<F>> out = f.terms_;
    for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
    return bind(std::move(out));
  }

  /// c * m * f; orders are multiplicative so the result stays sorted.
  Poly mul_term(const Poly& f, const Monomial& m, const Element& c) const {
    check(f);
    if (field_.is_zero(c)) return zero();
    std::vector<Term<F>> out;
    out.reserve(f.size());
    for (const auto& t : f.terms_) out.push_back(Term<F>{t.mono * m, field_.mul(t.coeff, c)});
    return bind(std::move(out));
  }

  Poly mul(const Poly& f, const Poly& g) const {
    check(f);
    check(g);
    if (f.is_zero() || g.is_zero()) return zero();
    const Poly& small = f.size() <= g.size() ? f : g;
    const Poly& big = f.size() <= g.size() ? g : f;
    Poly acc = zero();
    for (const auto& t : small.terms_) acc = combine(acc, t.coeff, t.mono, big);
    return acc;
  }

  /// f + c * m * g, by a single merge.
  Poly combine(const Poly& f, const Element& c, const Monomial& m, const Poly& g) const {
    check(f);
    check(g);
    if (field_.is_zero(c) || g.is_zero()) return f;
    std::vector<Term<F>> out;
    out.reserve(f.size() + g.size());
    auto fi = f.terms_.begin();
    auto gi = g.terms_.begin();
    while (fi != f.terms_.end() || gi != g.terms_.end()) {
      if (gi == g.terms_.end()) {
        out.push_back(*fi++);
        continue;
      }
      Monomial gm = gi->mono * m;
      int cmp = fi == f.terms_.end() ? -1 : order_.compare(fi->mono, gm);
      if (cmp > 0) {
        out.push_back(*fi++);
      } else if (cmp < 0) {
        out.push_back(Term<F>{gm, field_.mul(c, gi->coeff)});
        ++gi;
      } else {
        Element s = field_.add(fi->coeff, field_.mul(c, gi->coeff));
        if (!field_.is_zero(s)) out.push_back(Term<F>{gm, std::move(s)});
        ++fi;
        ++gi;
      }
    }
    return bind(std::move(out));
  }

  Poly power(const Poly& f, unsigned e) const {
    Poly r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, f);
    return r;
  }

  const Term<F>& leading_term(const Poly& f) const {
    check(f);
    return f.lead();
  }

  /// Lowest-degree homogeneous component.
  Poly initial_form(const Poly& f) const {
    check(f);
    if (f.is_zero()) throw MathError("initial form of the zero polynomial");
    int low = low_degree(f);
    std::vector<Term<F>> out;
    for (const auto& t : f.terms_)
      if (t.mono.degree() == low) out.push_back(t);
    return bind(std::move(out));
  }

  Poly homogeneous_part(const Poly& f, int degree) const {
    check(f);
    std::vector<Term<F>> out;
    for (const auto& t : f.terms_)
      if (t.mono.degree() == degree) out.push_back(t);
    return bind(std::move(out));
  }

  int degree(const Poly& f) const {
    if (f.is_zero()) return -1;
    int d = 0;
    for (const auto& t : f.terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int low_degree(const Poly& f) const {
    if (f.is_zero()) return -1;
    int d = f.terms_.front().mono.degree();
    for (const auto& t : f.terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous(const Poly& f) const {
    return f.is_zero() || degree(f) == low_degree(f);
  }

  /// Scales so the leading coefficient is 1.
  Poly make_monic(const Poly& f) const {
    if (f.is_zero() || field_.is_one(f.lead().coeff)) return f;
    return scale(f, field_.inv(f.lead().coeff));
  }

  Element constant_coefficient(const Poly& f) const {
    check(f);
    for (const auto& t : f.terms_)
      if (t.mono.is_one()) return t.coeff;
    return field_.zero();
  }

  /// Coefficient of one monomial (zero when absent).
  Element coefficient(const Poly& f, const Monomial& m) const {
    for (const auto& t : f.terms_)
      if (t.mono == m) return t.coeff;
    return field_.zero();
  }

  std::string to_string(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms_) {
      bool negative = field_.is_negative(t.coeff);
      Element mag = negative ? field_.neg(t.coeff) : t.coeff;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      bool unit = field_.is_one(mag);
      if (t.mono.is_one()) {
        out += field_.to_string(mag);
      } else {
        if (!unit) out += field_.to_string(mag) + "*";
        out += t.mono.to_string(names_);
      }
    }
    return out;
  }

  void check(const Poly& f) const {
    if (f.ring_id_ != id_ && !(f.ring_id_ == 0 && f.terms_.empty()))
      throw MathError("ring mismatch: polynomial belongs to a different ring");
  }

 private:
  Poly bind(std::vector<Term<F>> terms) const {
    Poly p;
    p.terms_ = std::move(terms);
    p.ring_id_ = id_;
    return p;
  }
  void check_monomial(const Monomial& m) const {
    if (m.nvars() != nvars()) throw MathError("monomial has the wrong number of variables");
  }

  F field_;
  std::vector<std::string> names_;
  TermOrder order_;
  std::uint32_t id_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

}  // namespace conebound
