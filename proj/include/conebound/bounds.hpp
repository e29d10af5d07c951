#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conebound/arith.hpp"

namespace conebound {

/// e·C(n+d-1, d) + I·C(n+d-2, d-1) + C(n+d-1, d-1). Requires d >= 1, n >= 0, e >= 1, I >= 0.
BigInt hs_upper_bound(long n, int d, const BigInt& e, const BigInt& I);
/// D·C(n+d-1, d) + C(n+d-1, d-1).
BigInt hs_upper_bound_weak(long n, int d, const BigInt& D);

/// d = 1: e + I - 1.  d >= 2: e^{(d-1)!-1} [e² + eI + 2I - e]^{(d-1)!} - I.
BigInt reg_upper_bound(int d, const BigInt& e, const BigInt& I);
/// Cohen-Macaulay form. d = 1: e - 1.  d >= 2: e^{2(d-1)!-1} (e-1)^{(d-1)!}.
BigInt reg_upper_bound_cm(int d, const BigInt& e);

struct CoeffVariant {
  enum class Kind { Main, CohenMacaulay, SrinivasTrivedi, Trivedi };
  Kind kind = Kind::Main;
  BigInt c;  ///< Trivedi's invariant; must satisfy c >= 2I

  static CoeffVariant main() { return {Kind::Main, 0}; }
  static CoeffVariant cm() { return {Kind::CohenMacaulay, 0}; }
  static CoeffVariant srinivas_trivedi() { return {Kind::SrinivasTrivedi, 0}; }
  static CoeffVariant trivedi(BigInt c) { return {Kind::Trivedi, std::move(c)}; }
  /// "main", "cm", "srinivas-trivedi" or "trivedi:<c>".
  static CoeffVariant parse(const std::string& text);
  std::string name() const;
};

/// Upper bound for |e_i|, i >= 1.
///   main        i = 1: e(e-1)/2 + I;  i >= 2: e^{i!-i} [e² + eI + 2I]^{i!} - 1
///   cm          i = 1: e(e-1)/2;      i >= 2: e^{3·i!-i} - 1
///   srinivas-trivedi  (9e^5)^{i!}
///   trivedi     [(3+c)² e^5]^{i!}
/// The cm and srinivas-trivedi variants ignore I.
BigInt coeff_upper_bound(int i, const BigInt& e, const BigInt& I, const CoeffVariant& variant = CoeffVariant::main());

struct BoundVerdict {
  std::string theorem;
  std::string inputs;
  BigInt bound;
  BigInt actual;
  bool holds = true;
  BigInt slack;  ///< bound - actual
};

BoundVerdict make_verdict(std::string theorem, std::string inputs, BigInt bound, BigInt actual);

/// Everything the verdicts consume, gathered from an analysis.
struct InstanceData {
  int d = 0;
  BigInt e;
  std::optional<BigInt> extended_degree;  ///< D(A); I = D - e
  int reg = 0;                            ///< reg(G)
  std::optional<int> greg;
  int depth = 0;                          ///< depth G
  std::vector<BigInt> samuel;             ///< ℓ(A/m^{n+1}), n = 0..
  std::vector<BigInt> e_coeffs;           ///< e_0..e_d
  BigInt length_L;                        ///< ℓ(L); zero exactly when depth A > 0
  std::optional<int> reg_quotient;        ///< reg(G'), G' the tangent cone of A/L
  long serre_lemma_mismatches = 0;
  long serre_formula_mismatches = 0;
  long weak_regularity_mismatches = 0;
};

struct Verification {
  std::vector<BoundVerdict> verdicts;
  std::vector<std::string> skipped;
  bool all_hold() const;
};

/// Throws MathError when D < e.
Verification verify_instance(const InstanceData& data, int uniform_horizon = 20);

struct EnvelopeSplit {
  BigInt e;
  BigInt I;
  BigInt n0;                        ///< reg_upper_bound(d, e, I)
  std::vector<BigInt> hs_upper;     ///< upper end of [1, ·] for n = 0..n0
  std::vector<BigInt> coeff_bound;  ///< |e_i| <= coeff_bound[i-1], i = 1..d
  BigInt count;
};

/// Candidate Hilbert-Samuel functions for dim A = d and D(A) <= q, split by
/// e + I = q. The count is the size of the enumerated candidate space, an
/// upper bound rather than a count of realizable functions.
struct Envelope {
  int d = 0;
  BigInt q;
  std::vector<EnvelopeSplit> splits;
  BigInt count;
};

/// Throws UnsupportedError when some n0 exceeds `max_horizon`.
Envelope finiteness_envelope(int d, const BigInt& q, long max_horizon = 1'000'000);

enum class Execution { Serial, Parallel };

struct GridSpec {
  int max_d = 4;
  long max_e = 5;
  long max_I = 3;
  int max_i = 3;
  long max_n = 10;
};

struct GridRow {
  int d = 0;
  long e = 0;
  long I = 0;
  BigInt reg;
  BigInt reg_cm;                      ///< evaluated only at I = 0, else 0
  std::vector<BigInt> hs;             ///< n = 0..max_n
  std::vector<BigInt> hs_weak;        ///< with D = e + I
  std::vector<BigInt> coeff_main;     ///< i = 1..max_i
  std::vector<BigInt> coeff_cm;
  std::vector<BigInt> coeff_st;
  std::vector<BigInt> coeff_trivedi;  ///< c = 2I
};

/// Every bound at every (d, e, I) with 1 <= d, 1 <= e, 0 <= I; rows are in
/// (d, e, I) lexicographic order regardless of the execution mode.
std::vector<GridRow> bound_grid(const GridSpec& spec, Execution mode = Execution::Parallel);

}  // namespace conebound
