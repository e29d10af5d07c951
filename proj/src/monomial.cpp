#include "conebound/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "conebound/arith.hpp"

namespace conebound {

namespace {

Monomial::Exponent checked_exponent(long e) {
  if (e < 0) throw MathError("negative exponent");
  if (e > std::numeric_limits<Monomial::Exponent>::max())
    throw MathError("exponent overflow: " + std::to_string(e));
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables)
    throw UnsupportedError("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ += checked_exponent(e) - exps_[i];
  exps_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = checked_exponent(long{exps_[i]} + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = checked_exponent(long{exps_[i]} - o.exps_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::colon(const Monomial& o) const { return *this / gcd(o); }

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

TermOrder::TermOrder(Kind kind, std::vector<int> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  if (!perm_.empty()) {
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(sorted.size());
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw MathError("term order permutation is not a permutation");
  }
}

int TermOrder::lex_compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  for (std::size_t r = 0; r < n; ++r) {
    int v = var(r, n);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::revlex_compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  for (std::size_t r = n; r-- > 0;) {
    int v = var(r, n);
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::GradedLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return lex_compare(a, b);
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_compare(a, b);
    case Kind::NegGradedRevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_compare(a, b);
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GradedLex: return "glex";
    case Kind::Grevlex: return "grevlex";
    case Kind::NegGradedRevlex: return "negrevlex";
  }
  return "?";
}

std::string TermOrder::key() const {
  std::string k = name();
  for (int v : perm_) k += "," + std::to_string(v);
  return k;
}

}  // namespace conebound
