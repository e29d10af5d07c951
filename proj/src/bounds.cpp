#include "conebound/bounds.hpp"

#include <cstdlib>
#include <stdexcept>

namespace conebound {

namespace {

constexpr unsigned long kMaxBits = 1ul << 27;

unsigned long small_factorial(int k) {
  if (k > 12) throw UnsupportedError("unsupported: factorial exponent " + std::to_string(k) + "! is too large");
  unsigned long f = 1;
  for (int j = 2; j <= k; ++j) f *= static_cast<unsigned long>(j);
  return f;
}

BigInt checked_power(const BigInt& base, unsigned long exponent) {
  const unsigned long bits = mpz_sizeinbase(base.get_mpz_t(), 2);
  if (abs(base) > 1 && exponent > kMaxBits / bits)
    throw UnsupportedError("unsupported: bound value would exceed " + std::to_string(kMaxBits) + " bits");
  return power(base, exponent);
}

void require_dimension(int d) {
  if (d < 1) throw MathError("bounds need dim A >= 1, got " + std::to_string(d));
}

void require_e_I(const BigInt& e, const BigInt& I) {
  if (e < 1) throw MathError("multiplicity must be positive, got " + to_string(e));
  if (I < 0) throw MathError("Cohen-Macaulay deviation must be non-negative, got " + to_string(I));
}

}  // namespace

BigInt hs_upper_bound(long n, int d, const BigInt& e, const BigInt& I) {
  require_dimension(d);
  require_e_I(e, I);
  if (n < 0) throw MathError("n must be non-negative");
  return e * binomial(n + d - 1, d) + I * binomial(n + d - 2, d - 1) + binomial(n + d - 1, d - 1);
}

BigInt hs_upper_bound_weak(long n, int d, const BigInt& D) {
  require_dimension(d);
  if (D < 1) throw MathError("extended degree must be positive");
  if (n < 0) throw MathError("n must be non-negative");
  return D * binomial(n + d - 1, d) + binomial(n + d - 1, d - 1);
}

BigInt reg_upper_bound(int d, const BigInt& e, const BigInt& I) {
  require_dimension(d);
  require_e_I(e, I);
  if (d == 1) return e + I - 1;
  const unsigned long f = small_factorial(d - 1);
  return checked_power(e, f - 1) * checked_power(e * e + e * I + 2 * I - e, f) - I;
}

BigInt reg_upper_bound_cm(int d, const BigInt& e) {
  require_dimension(d);
  require_e_I(e, 0);
  if (d == 1) return e - 1;
  const unsigned long f = small_factorial(d - 1);
  return checked_power(e, 2 * f - 1) * checked_power(e - 1, f);
}

CoeffVariant CoeffVariant::parse(const std::string& text) {
  if (text == "main") return main();
  if (text == "cm") return cm();
  if (text == "srinivas-trivedi") return srinivas_trivedi();
  const std::string prefix = "trivedi:";
  if (text.rfind(prefix, 0) == 0) {
    BigInt c;
    if (c.set_str(text.substr(prefix.size()), 10) != 0) throw std::invalid_argument("bad Trivedi constant in '" + text + "'");
    return trivedi(c);
  }
  throw std::invalid_argument("unknown coefficient bound variant '" + text + "'");
}

std::string CoeffVariant::name() const {
  switch (kind) {
    case Kind::Main: return "main";
    case Kind::CohenMacaulay: return "cm";
    case Kind::SrinivasTrivedi: return "srinivas-trivedi";
    case Kind::Trivedi: return "trivedi:" + to_string(c);
  }
  return "";
}

BigInt coeff_upper_bound(int i, const BigInt& e, const BigInt& I, const CoeffVariant& variant) {
  if (i < 1) throw MathError("coefficient bounds start at i = 1; e_0 is the multiplicity");
  require_e_I(e, I);
  const unsigned long f = small_factorial(i);
  switch (variant.kind) {
    case CoeffVariant::Kind::Main:
      if (i == 1) return e * (e - 1) / 2 + I;
      return checked_power(e, f - static_cast<unsigned long>(i)) * checked_power(e * e + e * I + 2 * I, f) - 1;
    case CoeffVariant::Kind::CohenMacaulay:
      if (i == 1) return e * (e - 1) / 2;
      return checked_power(e, 3 * f - static_cast<unsigned long>(i)) - 1;
    case CoeffVariant::Kind::SrinivasTrivedi:
      return checked_power(9 * checked_power(e, 5), f);
    case CoeffVariant::Kind::Trivedi:
      if (variant.c < 2 * I)
        throw MathError("Trivedi's constant must satisfy c >= 2I: c = " + to_string(variant.c) + ", I = " + to_string(I));
      return checked_power((3 + variant.c) * (3 + variant.c) * checked_power(e, 5), f);
  }
  return 0;
}

BoundVerdict make_verdict(std::string theorem, std::string inputs, BigInt bound, BigInt actual) {
  BoundVerdict v;
  v.theorem = std::move(theorem);
  v.inputs = std::move(inputs);
  v.slack = bound - actual;
  v.holds = v.slack >= 0;
  v.bound = std::move(bound);
  v.actual = std::move(actual);
  return v;
}

bool Verification::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

Verification verify_instance(const InstanceData& data, int uniform_horizon) {
  Verification out;
  const int d = data.d;
  const BigInt& e = data.e;
  std::optional<BigInt> I;
  if (data.extended_degree) {
    if (*data.extended_degree < e)
      throw MathError("extended degree " + to_string(*data.extended_degree) + " is below the multiplicity " +
                      to_string(e));
    I = *data.extended_degree - e;
  }
  const std::string base = "d=" + std::to_string(d) + " e=" + to_string(e) + (I ? " I=" + to_string(*I) : "");
  const int top = std::min<int>(uniform_horizon, static_cast<int>(data.samuel.size()) - 1);

  if (d == 0) {
    for (const char* name : {"uniform", "uniform-weak", "regularity", "coeff", "depthzero", "hoa"})
      out.skipped.push_back(std::string(name) + ": dimension 0");
  } else if (I) {
    for (int n = 0; n <= top; ++n)
      out.verdicts.push_back(make_verdict("uniform", base + " n=" + std::to_string(n), hs_upper_bound(n, d, e, *I),
                                          data.samuel[static_cast<std::size_t>(n)]));
    for (int n = 0; n <= top; ++n)
      out.verdicts.push_back(make_verdict("uniform-weak", base + " n=" + std::to_string(n),
                                          hs_upper_bound_weak(n, d, *data.extended_degree),
                                          data.samuel[static_cast<std::size_t>(n)]));
    out.verdicts.push_back(make_verdict("regularity", base, reg_upper_bound(d, e, *I), data.reg));
    for (int i = 1; i <= d && i < static_cast<int>(data.e_coeffs.size()); ++i)
      out.verdicts.push_back(make_verdict("coeff", base + " i=" + std::to_string(i), coeff_upper_bound(i, e, *I),
                                          abs(data.e_coeffs[static_cast<std::size_t>(i)])));
  } else {
    for (const char* name : {"uniform", "uniform-weak", "regularity", "coeff"})
      out.skipped.push_back(std::string(name) + ": skipped: no extended degree");
  }

  if (d > 0 && data.reg_quotient)
    out.verdicts.push_back(make_verdict("depthzero", base + " l(L)=" + to_string(data.length_L),
                                        *data.reg_quotient + data.length_L, data.reg));
  else if (d > 0)
    out.skipped.push_back("depthzero: A/L = 0");

  // depth A > 0 exactly when the finite-length part L vanishes.
  if (d > 0 && data.length_L == 0) {
    if (!data.greg) throw MathError("positive depth but no geometric regularity");
    out.verdicts.push_back(make_verdict("hoa", base + " depth(G)=" + std::to_string(data.depth), *data.greg, data.reg));
  } else if (d > 0) {
    out.skipped.push_back("hoa: depth A = 0");
  }

  out.verdicts.push_back(make_verdict("serre-lemma", base, 0, data.serre_lemma_mismatches));
  out.verdicts.push_back(make_verdict("serre-formula", base, 0, data.serre_formula_mismatches));
  out.verdicts.push_back(make_verdict("weak-regularity", base, 0, data.weak_regularity_mismatches));
  return out;
}

Envelope finiteness_envelope(int d, const BigInt& q, long max_horizon) {
  require_dimension(d);
  if (q < 1) throw MathError("q must be positive");
  Envelope env;
  env.d = d;
  env.q = q;
  env.count = 0;
  for (BigInt e = 1; e <= q; ++e) {
    EnvelopeSplit split;
    split.e = e;
    split.I = q - e;
    split.n0 = reg_upper_bound(d, e, split.I);
    if (split.n0 < 0) split.n0 = 0;
    if (split.n0 > max_horizon)
      throw UnsupportedError("unsupported: postulation horizon " + to_string(split.n0) + " exceeds " +
                             std::to_string(max_horizon));
    const long n0 = split.n0.get_si();
    split.count = 1;
    for (long n = 0; n <= n0; ++n) {
      split.hs_upper.push_back(hs_upper_bound(n, d, e, split.I));
      split.count *= split.hs_upper.back();
    }
    for (int i = 1; i <= d; ++i) {
      split.coeff_bound.push_back(coeff_upper_bound(i, e, split.I));
      split.count *= 2 * split.coeff_bound.back() + 1;
    }
    env.count += split.count;
    env.splits.push_back(std::move(split));
  }
  return env;
}

namespace {

GridRow grid_row(const GridSpec& spec, int d, long e, long I) {
  GridRow row;
  row.d = d;
  row.e = e;
  row.I = I;
  const BigInt be = e;
  const BigInt bi = I;
  row.reg = reg_upper_bound(d, be, bi);
  row.reg_cm = I == 0 ? reg_upper_bound_cm(d, be) : BigInt(0);
  for (long n = 0; n <= spec.max_n; ++n) {
    row.hs.push_back(hs_upper_bound(n, d, be, bi));
    row.hs_weak.push_back(hs_upper_bound_weak(n, d, be + bi));
  }
  for (int i = 1; i <= spec.max_i; ++i) {
    row.coeff_main.push_back(coeff_upper_bound(i, be, bi, CoeffVariant::main()));
    row.coeff_cm.push_back(coeff_upper_bound(i, be, 0, CoeffVariant::cm()));
    row.coeff_st.push_back(coeff_upper_bound(i, be, 0, CoeffVariant::srinivas_trivedi()));
    row.coeff_trivedi.push_back(coeff_upper_bound(i, be, bi, CoeffVariant::trivedi(2 * bi)));
  }
  return row;
}

}  // namespace

std::vector<GridRow> bound_grid(const GridSpec& spec, Execution mode) {
  const long ne = spec.max_e;
  const long ni = spec.max_I + 1;
  const long total = spec.max_d * ne * ni;
  std::vector<GridRow> rows(static_cast<std::size_t>(std::max(total, 0l)));
  auto fill = [&](long k) {
    const int d = 1 + static_cast<int>(k / (ne * ni));
    const long e = 1 + (k / ni) % ne;
    const long I = k % ni;
    rows[static_cast<std::size_t>(k)] = grid_row(spec, d, e, I);
  };
  if (mode == Execution::Serial) {
    for (long k = 0; k < total; ++k) fill(k);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) fill(k);
  }
  return rows;
}

}  // namespace conebound
