#include "torsionlab/specs.hpp"

#include <charconv>

#include "torsionlab/serialize.hpp"

namespace torsionlab {

namespace {

std::optional<std::size_t> builtin_size(const std::string& spec, const std::string& prefix) {
  if (spec.rfind(prefix, 0) != 0) return std::nullopt;
  const char* first = spec.data() + prefix.size();
  const char* last = spec.data() + spec.size();
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n == 0) {
    throw ParseError("expected a positive integer after \"" + prefix + "\" in \"" + spec + "\"");
  }
  return n;
}

}  // namespace

Poset parse_poset_spec(const std::string& spec, bool op) {
  Poset p;
  if (auto n = builtin_size(spec, "int:")) {
    p = interval_poset(*n);
  } else {
    p = poset_from_json(read_json_file(spec));
  }
  return op ? opposite(p) : p;
}

Algebra parse_algebra_spec(const std::string& spec, Scalar p, bool op) {
  if (spec == "example") return example_algebra(p);
  if (auto n = builtin_size(spec, "int:")) {
    const Poset q = interval_poset(*n);
    return incidence_algebra(op ? opposite(q) : q, p);
  }
  if (auto n = builtin_size(spec, "An:")) return linear_path_algebra(*n, p);
  json j = read_json_file(spec);
  if (!j.contains("field")) j["field"] = p;
  return algebra_from_json(j);
}

}  // namespace torsionlab
