#include "ringtop/ringspec.hpp"

#include <cctype>
#include <fstream>

namespace ringtop {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

FiniteRing field_by_tag(std::string_view tag) {
  if (tag == "f2") return build_zn(2);
  if (tag == "f3") return build_zn(3);
  throw error("parse-error",
              "expected field tag f2 or f3, got '" + std::string(tag) + "'");
}

// Consumes one spec starting at pos; leaves pos just past it. prod specs
// nest, so the comma separating the two factors is found by recursion, not
// by splitting.
FiniteRing parse_at(const std::string& s, std::size_t& pos);

std::string_view take_until(const std::string& s, std::size_t& pos,
                            bool (*stop)(char)) {
  const std::size_t start = pos;
  while (pos < s.size() && !stop(s[pos])) ++pos;
  return std::string_view(s).substr(start, pos - start);
}

FiniteRing parse_at(const std::string& s, std::size_t& pos) {
  auto starts = [&](std::string_view prefix) {
    if (s.compare(pos, prefix.size(), prefix) == 0) {
      pos += prefix.size();
      return true;
    }
    return false;
  };
  auto token = [&]() {
    return take_until(s, pos, [](char c) { return c == ','; });
  };

  if (starts("zn:")) {
    const std::string_view digits = token();
    if (!all_digits(digits))
      throw error("parse-error", "zn: expects a decimal order, got '" +
                                     std::string(digits) + "'");
    return build_zn(std::uint32_t(std::stoul(std::string(digits))));
  }
  if (starts("prod:")) {
    FiniteRing r1 = parse_at(s, pos);
    if (pos >= s.size() || s[pos] != ',')
      throw error("parse-error", "prod: expects two comma-separated specs");
    ++pos;
    FiniteRing r2 = parse_at(s, pos);
    return build_product(r1, r2);
  }
  if (starts("ut:")) return build_upper_triangular(field_by_tag(token()));
  if (starts("m2:")) return build_matrix_ring(field_by_tag(token()), 2);
  if (starts("file:")) {
    const std::string path(take_until(s, pos, [](char) { return false; }));
    std::ifstream in(path);
    if (!in)
      throw error("parse-error", "cannot open ring spec file '" + path + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw error("parse-error",
                  "ring spec file '" + path + "': " + e.what());
    }
    return ring_from_json(j);
  }
  throw error("parse-error",
              "unknown ring spec at '" + s.substr(pos) +
                  "' (expected zn:<n> | prod:<spec>,<spec> | ut:f2|f3 | "
                  "m2:f2|f3 | file:<path>)");
}

template <typename T>
T field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name))
    throw error("parse-error",
                std::string("ring spec object missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw error("parse-error",
                std::string("ring spec field '") + name + "': " + e.what());
  }
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec) {
  std::size_t pos = 0;
  FiniteRing r = parse_at(spec, pos);
  if (pos != spec.size())
    throw error("parse-error",
                "trailing characters in ring spec: '" + spec.substr(pos) + "'");
  r.spec = spec;  // echo the shorthand so reports replay verbatim
  return r;
}

FiniteRing ring_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw error("parse-error", "ring spec must be a JSON object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "zn") return build_zn(field<std::uint32_t>(j, "n"));
  if (kind == "matrix")
    return build_matrix_ring(ring_from_json(j.at("base")),
                             field<std::uint32_t>(j, "k"));
  if (kind == "upper_triangular")
    return build_upper_triangular(ring_from_json(j.at("base")));
  if (kind == "product")
    return build_product(ring_from_json(j.at("first")),
                         ring_from_json(j.at("second")));
  if (kind == "tables") {
    const auto order = field<std::uint32_t>(j, "order");
    auto add = field<std::vector<elem>>(j, "add");
    auto mul = field<std::vector<elem>>(j, "mul");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
    return build_from_tables(order, std::move(add), std::move(mul),
                             field<elem>(j, "zero"), field<elem>(j, "one"),
                             std::move(labels));
  }
  throw error("parse-error", "unknown ring spec kind '" + kind + "'");
}

elem parse_element(const FiniteRing& r, std::string_view text) {
  if (auto hit = r.element_by_label(text)) return *hit;
  if (all_digits(text)) {
    const unsigned long v = std::stoul(std::string(text));
    if (v < r.order) return elem(v);
    throw error("bad-element", "element index " + std::string(text) +
                                   " out of range for ring of order " +
                                   std::to_string(r.order));
  }
  throw error("bad-element", "no element of " + r.spec + " has label '" +
                                 std::string(text) + "'");
}

ActionSide parse_side(std::string_view text) {
  if (text == "right") return ActionSide::right;
  if (text == "left") return ActionSide::left;
  throw error("parse-error",
              "side must be 'right' or 'left', got '" + std::string(text) +
                  "'");
}

}  // namespace ringtop
