#include "conebound/instance.hpp"

#include <cctype>
#include <set>

#include "conebound/parse.hpp"
#include "conebound/polynomial.hpp"

namespace conebound {

namespace {

std::string_view trim(std::string_view s, int& column) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++column;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

void parse_field(InstanceSpec& spec, std::string_view value, int line, int column) {
  if (value == "Q") {
    spec.field = InstanceSpec::FieldKind::Rational;
    spec.characteristic = 0;
    return;
  }
  if (value.size() < 2 || value[0] != 'F') throw ParseError("field must be F<p> or Q", line, column);
  std::uint64_t p = 0;
  for (std::size_t i = 1; i < value.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(value[i])))
      throw ParseError("bad characteristic '" + std::string(value.substr(1)) + "'", line, column + static_cast<int>(i));
    p = p * 10 + static_cast<std::uint64_t>(value[i] - '0');
    if (p >= (1ull << 31)) throw ParseError("characteristic must be below 2^31", line, column + 1);
  }
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime", line, column + 1);
  spec.field = InstanceSpec::FieldKind::Prime;
  spec.characteristic = static_cast<std::uint32_t>(p);
}

}  // namespace

std::string InstanceSpec::field_name() const {
  return field == FieldKind::Rational ? "Q" : "F" + std::to_string(characteristic);
}

InstanceSpec parse_instance(std::string_view text) {
  InstanceSpec spec;
  std::set<std::string> seen;
  struct Pending {
    std::string value;
    int line;
    int column;
  };
  std::optional<Pending> ideal_line;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    int column = 1;
    std::string_view content = trim(raw, column);
    if (content.empty() || content.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = content.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line, column);
    std::string key(content.substr(0, colon));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    int value_column = column + static_cast<int>(colon) + 1;
    std::string_view value = trim(content.substr(colon + 1), value_column);
    if (!seen.insert(key).second) throw ParseError("duplicate directive '" + key + "'", line, column);
    if (key == "field") {
      parse_field(spec, value, line, value_column);
    } else if (key == "vars") {
      std::set<std::string> names;
      for (auto& [name, col] : split_list(value, value_column)) {
        if (!is_identifier(name)) throw ParseError("bad variable name '" + name + "'", line, col);
        if (!names.insert(name).second) throw ParseError("duplicate variable '" + name + "'", line, col);
        spec.vars.push_back(name);
      }
      if (spec.vars.size() > kMaxVariables)
        throw ParseError("at most " + std::to_string(kMaxVariables) + " variables are supported", line,
                         value_column);
    } else if (key == "ideal") {
      ideal_line = Pending{std::string(value), line, value_column};
    } else if (key == "extdeg") {
      BigInt v;
      if (value.empty() || v.set_str(std::string(value), 10) != 0)
        throw ParseError("extdeg must be an integer", line, value_column);
      if (v < 0) throw ParseError("extdeg must be non-negative", line, value_column);
      spec.extdeg = v;
    } else if (key == "label") {
      spec.label = std::string(value);
    } else {
      throw ParseError("unknown directive '" + key + "'", line, column);
    }
    if (end == text.size()) break;
  }
  if (!seen.count("field")) throw ParseError("missing 'field' directive", line, 1);
  if (!seen.count("vars")) throw ParseError("missing 'vars' directive", line, 1);
  if (!ideal_line) throw ParseError("missing 'ideal' directive", line, 1);
  int blank_column = ideal_line->column;
  if (!trim(ideal_line->value, blank_column).empty()) {
    for (auto& [gen, col] : split_list(ideal_line->value, ideal_line->column)) {
      if (gen.empty()) throw ParseError("empty generator", ideal_line->line, col);
      RawPolynomial raw = parse_raw_polynomial(gen, spec.vars, ideal_line->line, col);
      if (spec.field == InstanceSpec::FieldKind::Prime)
        for (const auto& t : raw)
          if (t.den % spec.characteristic == 0)
            throw ParseError("denominator divisible by the characteristic", ideal_line->line, col);
      spec.generators.push_back(gen);
    }
  }
  return spec;
}

std::string emit_instance(const InstanceSpec& spec) {
  std::string out;
  if (!spec.label.empty()) out += "label: " + spec.label + "\n";
  out += "field: " + spec.field_name() + "\n";
  out += "vars: ";
  for (std::size_t i = 0; i < spec.vars.size(); ++i) out += (i ? ", " : "") + spec.vars[i];
  out += "\nideal: ";
  for (std::size_t i = 0; i < spec.generators.size(); ++i) out += (i ? ", " : "") + spec.generators[i];
  out += "\n";
  if (spec.extdeg) out += "extdeg: " + to_string(*spec.extdeg) + "\n";
  return out;
}

InstanceSpec example_family(int r) {
  if (r < 1) throw std::invalid_argument("the example family needs r >= 1");
  InstanceSpec spec;
  spec.vars = {"x", "y"};
  spec.generators = {"x^2", r == 1 ? "x*y" : "x*y^" + std::to_string(r)};
  spec.label = "family r=" + std::to_string(r);
  return spec;
}

}  // namespace conebound
