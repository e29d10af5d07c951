#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conebound {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector of a monomial in a fixed number of variables. Total degree
/// is cached. Multiplication is overflow-checked.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires divides.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  /// Monomial colon: this / gcd(this, o).
  Monomial colon(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::vector<int> exponents() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::int32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// A monomial order. Global orders have 1 as smallest monomial; the local
/// order (negative graded reverse lexicographic) has 1 as largest.
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, GradedLex, NegGradedRevlex };

  TermOrder() = default;
  explicit TermOrder(Kind kind, std::vector<int> permutation = {});

  static TermOrder grevlex() { return TermOrder(Kind::Grevlex); }
  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder graded_lex() { return TermOrder(Kind::GradedLex); }
  static TermOrder local() { return TermOrder(Kind::NegGradedRevlex); }

  Kind kind() const { return kind_; }
  bool is_global() const { return kind_ != Kind::NegGradedRevlex; }
  bool is_graded() const { return kind_ == Kind::Grevlex || kind_ == Kind::GradedLex; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  /// Name plus permutation; distinct for distinct orders.
  std::string key() const;

  bool operator==(const TermOrder& o) const = default;

 private:
  int var(std::size_t rank, std::size_t /*nvars*/) const {
    return perm_.empty() ? static_cast<int>(rank) : perm_[rank];
  }
  int lex_compare(const Monomial& a, const Monomial& b) const;
  int revlex_compare(const Monomial& a, const Monomial& b) const;

  Kind kind_ = Kind::Grevlex;
  std::vector<int> perm_;
};

}  // namespace conebound
