#include "conebound/hilbert.hpp"

#include <algorithm>

namespace conebound {

LaurentPolynomial::LaurentPolynomial(int offset, std::vector<BigInt> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const BigInt& c) {
  return LaurentPolynomial(exponent, {c});
}

void LaurentPolynomial::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<long>(lead), coeffs_.begin() + static_cast<long>(tail));
  offset_ += static_cast<int>(lead);
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  if (is_zero() || exponent < offset_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(offset_, o.offset_);
  int hi = std::max(high_degree(), o.high_degree());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coefficient(e) + o.coefficient(e);
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return LaurentPolynomial(offset_ + o.offset_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.offset_ += by;
  return r;
}

BigInt LaurentPolynomial::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::divide_one_minus_t() const {
  if (evaluate_at_one() != 0) throw MathError("polynomial is not divisible by (1 - t)");
  if (is_zero()) return {};
  // p = (1 - t) q  =>  q_k = q_{k-1} + p_k
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt acc = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    acc += coeffs_[k];
    q[k] = acc;
  }
  return LaurentPolynomial(offset_, std::move(q));
}

BigInt LaurentPolynomial::derivative_at_one(int i) const {
  BigInt s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) s += coeffs_[k] * binomial(offset_ + static_cast<long>(k), i);
  return s;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    int e = offset_ + static_cast<int>(k);
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

namespace {

LaurentPolynomial one_minus_t_power(int degree) {
  return LaurentPolynomial::one() - LaurentPolynomial::monomial(degree);
}

LaurentPolynomial numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return LaurentPolynomial::one();
  if (gens.front().is_one()) return {};

  // Split off generators coprime to every other generator.
  LaurentPolynomial factor = LaurentPolynomial::one();
  std::vector<Monomial> rest;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool isolated = true;
    for (std::size_t j = 0; j < gens.size() && isolated; ++j)
      if (i != j && !gens[i].coprime(gens[j])) isolated = false;
    if (isolated)
      factor = factor * one_minus_t_power(gens[i].degree());
    else
      rest.push_back(gens[i]);
  }
  if (rest.empty()) return factor;

  // Pivot on the variable occurring in the most generators, at its smallest
  // positive exponent: N(J) = N(J + p) + t^deg(p) N(J : p).
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const auto& g : rest)
      if (g[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  int e = 1 << 14;
  for (const auto& g : rest)
    if (g[best_var] > 0) e = std::min(e, g[best_var]);
  Monomial pivot = Monomial::variable(nvars, best_var, e);

  std::vector<Monomial> with_pivot = rest;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (const auto& g : rest) colon.push_back(g.colon(pivot));

  LaurentPolynomial n = numerator_rec(std::move(with_pivot), nvars) +
                        numerator_rec(std::move(colon), nvars).shifted(pivot.degree());
  return factor * n;
}

}  // namespace

LaurentPolynomial hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  return numerator_rec(gens, nvars);
}

int monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<Monomial> mins = minimalize_monomials(gens);
  if (!mins.empty() && mins.front().is_one()) return -1;
  std::vector<unsigned> supports;
  for (const auto& g : mins) {
    unsigned s = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) s |= 1u << v;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned set = 0; set < (1u << nvars); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

HilbertSeries::HilbertSeries(LaurentPolynomial numerator, int nvars)
    : numerator_(std::move(numerator)), nvars_(nvars) {
  if (numerator_.is_zero()) return;
  LaurentPolynomial q = numerator_;
  int k = 0;
  while (q.evaluate_at_one() == 0) {
    q = q.divide_one_minus_t();
    ++k;
  }
  if (k > nvars_) throw MathError("Hilbert numerator has a root of too high order at t = 1");
  dimension_ = nvars_ - k;
  reduced_ = std::move(q);
}

BigInt HilbertSeries::multiplicity() const {
  if (is_zero()) throw MathError("multiplicity of the zero module is undefined");
  return reduced_.evaluate_at_one();
}

BigInt HilbertSeries::value(int j) const {
  if (is_zero()) return 0;
  const int d = dimension_;
  BigInt s = 0;
  for (int k = reduced_.low_degree(); k <= std::min(j, reduced_.high_degree()); ++k) {
    BigInt c = reduced_.coefficient(k);
    if (c == 0) continue;
    if (d == 0)
      s += (k == j) ? c : BigInt(0);
    else
      s += c * binomial(j - k + d - 1, d - 1);
  }
  return s;
}

BigInt HilbertSeries::polynomial_value(int j) const {
  if (is_zero() || dimension_ == 0) return 0;
  const int d = dimension_;
  BigInt s = 0;
  for (int k = reduced_.low_degree(); k <= reduced_.high_degree(); ++k)
    s += reduced_.coefficient(k) * binomial(j - k + d - 1, d - 1);
  return s;
}

std::vector<BigRational> HilbertSeries::polynomial_coefficients() const {
  if (is_zero() || dimension_ == 0) return {};
  const int m = dimension_ - 1;
  std::vector<BigRational> total(static_cast<std::size_t>(m + 1), BigRational(0));
  BigInt mfact = factorial(static_cast<unsigned long>(m));
  for (int k = reduced_.low_degree(); k <= reduced_.high_degree(); ++k) {
    BigInt c = reduced_.coefficient(k);
    if (c == 0) continue;
    // C(X - k + m, m) = Π_{t < m} (X + (m - k - t)) / m!
    std::vector<BigRational> poly{BigRational(1)};
    for (int t = 0; t < m; ++t) {
      BigRational a(m - k - t);
      std::vector<BigRational> next(poly.size() + 1, BigRational(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * a;
        next[i + 1] += poly[i];
      }
      poly = std::move(next);
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
      BigRational term = poly[i] * BigRational(c) / BigRational(mfact);
      term.canonicalize();
      total[i] += term;
      total[i].canonicalize();
    }
  }
  return total;
}

BigInt HilbertSeries::samuel_value(int n) const {
  if (is_zero()) return 0;
  const int d = dimension_;
  BigInt s = 0;
  for (int k = reduced_.low_degree(); k <= std::min(n, reduced_.high_degree()); ++k)
    s += reduced_.coefficient(k) * binomial(n - k + d, d);
  return s;
}

BigInt HilbertSeries::samuel_polynomial_value(int n) const {
  if (is_zero()) return 0;
  const int d = dimension_;
  BigInt s = 0;
  for (int k = reduced_.low_degree(); k <= reduced_.high_degree(); ++k)
    s += reduced_.coefficient(k) * binomial(n - k + d, d);
  return s;
}

std::vector<BigInt> HilbertSeries::samuel_coefficients() const {
  std::vector<BigInt> e;
  if (is_zero()) return e;
  for (int i = 0; i <= dimension_; ++i) e.push_back(reduced_.derivative_at_one(i));
  return e;
}

BigInt HilbertSeries::total_length() const {
  if (is_zero()) return 0;
  if (dimension_ > 0) throw MathError("module has positive dimension; its length is infinite");
  return reduced_.evaluate_at_one();
}

}  // namespace conebound
