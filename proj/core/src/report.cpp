#include "loopkit/report.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "loopkit/catalog.hpp"
#include "loopkit/identity_check.hpp"
#include "loopkit/structure.hpp"

namespace loopkit {

namespace {

using FlagField = bool StructureFlags::*;

struct FlagEntry {
  std::string_view name;
  FlagField field;
};

constexpr std::array<FlagEntry, 15> kFlags = {{
    {"lcc", &StructureFlags::lcc},
    {"rcc", &StructureFlags::rcc},
    {"cc", &StructureFlags::cc},
    {"wip", &StructureFlags::wip},
    {"power_associative", &StructureFlags::power_associative},
    {"flexible", &StructureFlags::flexible},
    {"lap", &StructureFlags::lap},
    {"rap", &StructureFlags::rap},
    {"left_cheban", &StructureFlags::left_cheban},
    {"right_cheban", &StructureFlags::right_cheban},
    {"cheban", &StructureFlags::cheban},
    {"moufang", &StructureFlags::moufang},
    {"extra", &StructureFlags::extra},
    {"squares_translation", &StructureFlags::squares_translation},
    {"square_central_translation", &StructureFlags::square_central_translation},
}};

constexpr auto kNames = [] {
  std::array<std::string_view, kFlags.size()> names{};
  for (std::size_t i = 0; i < kFlags.size(); ++i) names[i] = kFlags[i].name;
  return names;
}();

}  // namespace

std::span<const std::string_view> flag_names() { return kNames; }

bool flag_value(const StructureFlags& flags, std::string_view name) {
  for (const auto& f : kFlags) {
    if (f.name == name) return flags.*(f.field);
  }
  throw std::invalid_argument("unknown structure flag '" + std::string(name) + "'");
}

StructureReport analyze(const LoopTable& loop) {
  StructureReport r;
  r.left_nucleus = left_nucleus(loop);
  r.middle_nucleus = middle_nucleus(loop);
  r.right_nucleus = right_nucleus(loop);
  r.nucleus = r.left_nucleus & r.middle_nucleus & r.right_nucleus;
  r.commutant = commutant(loop);
  r.center = r.nucleus & r.commutant;
  r.nilpotency_class = nilpotency_class(loop);

  auto& f = r.flags;
  f.lcc = is_lcc(loop);
  f.rcc = is_rcc(loop);
  f.cc = f.lcc && f.rcc;
  f.wip = wip_elements(loop).is_full();
  f.power_associative = is_power_associative(loop);
  f.flexible = holds(loop, catalog_identity("flexible"));
  f.lap = holds(loop, catalog_identity("lap"));
  f.rap = holds(loop, catalog_identity("rap"));
  f.left_cheban = holds(loop, catalog_identity("left_cheban"));
  f.right_cheban = holds(loop, catalog_identity("right_cheban"));
  f.cheban = holds(loop, catalog_identity("cheban"));
  f.moufang = holds(loop, catalog_identity("moufang"));
  f.extra = holds(loop, catalog_identity("extra"));
  f.squares_translation = squares_translation(loop);
  f.square_central_translation = square_central_translation(loop);
  return r;
}

nlohmann::json to_json(const StructureReport& report) {
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& f : kFlags) flags[std::string(f.name)] = report.flags.*(f.field);
  nlohmann::json out = {
      {"left_nucleus", report.left_nucleus.members()},
      {"middle_nucleus", report.middle_nucleus.members()},
      {"right_nucleus", report.right_nucleus.members()},
      {"nucleus", report.nucleus.members()},
      {"commutant", report.commutant.members()},
      {"center", report.center.members()},
      {"nilpotency_class", nullptr},
      {"flags", flags},
  };
  if (report.nilpotency_class) out["nilpotency_class"] = *report.nilpotency_class;
  return out;
}

}  // namespace loopkit
