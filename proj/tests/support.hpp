#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "conebound/ideal.hpp"
#include "conebound/parse.hpp"

namespace test {

using conebound::PrimeField;
using conebound::RationalField;
using Fp = PrimeField;
using Poly = conebound::Polynomial<Fp>;
using Ring = conebound::RingPtr<Fp>;

inline Ring make_ring(std::vector<std::string> names,
                      conebound::TermOrder order = conebound::TermOrder::grevlex(),
                      std::uint32_t p = 32003) {
  return std::make_shared<const conebound::PolyRing<Fp>>(Fp(p), std::move(names), std::move(order));
}

inline Poly poly(const Ring& ring, const std::string& text) { return conebound::parse_polynomial(*ring, text); }

inline std::vector<Poly> polys(const Ring& ring, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(poly(ring, t));
  return out;
}

inline conebound::Ideal<Fp> ideal(const Ring& ring, std::initializer_list<const char*> texts) {
  return conebound::Ideal<Fp>(ring, polys(ring, texts));
}

inline std::vector<std::string> strings(const Ring& ring, const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(ring->to_string(p));
  return out;
}

}  // namespace test
