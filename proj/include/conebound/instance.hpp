#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conebound/arith.hpp"

namespace conebound {

/// A local ring k[x_1..x_n]_(x) / I described in text:
///
///   # comment
///   field: F32003        (or Q)
///   vars: x, y
///   ideal: x^2, x*y^3    (may be empty for the zero ideal)
///   extdeg: 5            (optional externally supplied extended degree)
///   label: some text     (optional)
struct InstanceSpec {
  enum class FieldKind { Prime, Rational };

  FieldKind field = FieldKind::Prime;
  std::uint32_t characteristic = 32003;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::optional<BigInt> extdeg;
  std::string label;

  std::string field_name() const;
  bool operator==(const InstanceSpec&) const = default;
};

/// Throws ParseError with a line and column.
InstanceSpec parse_instance(std::string_view text);
std::string emit_instance(const InstanceSpec& spec);

/// k[[x,y]]/(x^2, x y^r) over F_32003.
InstanceSpec example_family(int r);

}  // namespace conebound
