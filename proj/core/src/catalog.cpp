#include "loopkit/catalog.hpp"

#include <algorithm>
#include <vector>

#include "loopkit/errors.hpp"
#include "loopkit/identity_parser.hpp"

namespace loopkit {

namespace {

struct Entry {
  const char* name;
  const char* text;
};

constexpr Entry kEntries[] = {
    {"left_cheban", "x*((x*y)*z) = (y*x)*(x*z)"},
    {"right_cheban", "(z*(y*x))*x = (z*x)*(x*y)"},
    {"cheban", "x*((x*y)*z) = (y*(z*x))*x"},
    {"moufang", "(x*y)*(z*x) = (x*(y*z))*x"},
    {"extra", "x*(y*(z*x)) = ((x*y)*z)*x"},
    {"flexible", "x*(y*x) = (x*y)*x"},
    {"lap", "x*(x*y) = (x*x)*y"},
    {"rap", "(y*x)*x = y*(x*x)"},
    {"lcc", "z*(y*x) = ((z*y)/z)*(z*x)"},
    {"osborn", "x*((y*z)*x) = ((x*(y*x))/x)*(z*x)"},
    // The published form has an unbalanced parenthesis; this is the balanced
    // reading that keeps its term order.
    {"generalized_moufang", "x*((y*z)*x) = (((1/y)*(1/x))\\1)*(z*x)"},
    {"wip", "x*((y*x)^rho) = y^rho"},
    {"wippacc_ax1", "((x*y)*x)*(x*z) = x*(((y*x)*x)*z)"},
    {"wippacc_ax2", "(z*x)*(x*(y*x)) = (z*(x*(x*y)))*x"},
};

std::vector<NamedIdentity> build() {
  std::vector<NamedIdentity> out;
  for (const auto& e : kEntries) out.push_back({e.name, e.text, parse_identity(e.text)});
  return out;
}

}  // namespace

std::span<const NamedIdentity> catalog() {
  static const std::vector<NamedIdentity> entries = build();
  return entries;
}

std::optional<NamedIdentity> find_identity(std::string_view name) {
  const auto all = catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const NamedIdentity& e) { return e.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

const Identity& catalog_identity(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.identity;
  }
  throw UnknownIdentity("no catalog identity named '" + std::string(name) + "'");
}

Identity resolve_identity(std::string_view name_or_expression) {
  if (auto named = find_identity(name_or_expression)) return named->identity;
  if (name_or_expression.find('=') == std::string_view::npos) {
    throw UnknownIdentity("'" + std::string(name_or_expression) +
                          "' is neither a catalog name nor an identity (no '=')");
  }
  return parse_identity(name_or_expression);
}

}  // namespace loopkit
