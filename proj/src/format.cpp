#include "numsg/format.hpp"

#include <charconv>

namespace numsg {

namespace {

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_text(const NumericalSemigroup& s) { return "⟨" + join(s.msg()) + "⟩"; }

std::string to_text(const std::vector<Int>& values) { return "{" + join(values) + "}"; }

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["frobenius"] = s.frobenius();
  j["gaps"] = s.gaps();
  j["genus"] = s.genus();
  j["msg"] = s.msg();
  return j;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  try {
    const auto gaps = j.at("gaps").get<std::vector<Int>>();
    auto s = NumericalSemigroup::from_gaps(gaps);
    if (j.at("msg").get<std::vector<Int>>() != s.msg() || j.at("frobenius").get<Int>() != s.frobenius() ||
        j.at("genus").get<Int>() != s.genus()) {
      fail(Errc::invalid_input, "semigroup JSON fields are inconsistent");
    }
    return s;
  } catch (const Json::exception& e) {
    fail(Errc::invalid_input, std::string("malformed semigroup JSON: ") + e.what());
  }
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      fail(Errc::invalid_input, "not an integer list: \"" + std::string(text) + "\"");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view spec) {
  spec = trim(spec);
  constexpr std::string_view prefix = "gaps:";
  if (spec.substr(0, prefix.size()) == prefix) {
    return NumericalSemigroup::from_gaps(parse_int_list(spec.substr(prefix.size())));
  }
  const auto gens = parse_int_list(spec);
  if (gens.empty()) fail(Errc::invalid_input, "empty generator list");
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace numsg
