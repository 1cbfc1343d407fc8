#pragma once

#include <optional>
#include <span>
#include <string_view>

#include <nlohmann/json.hpp>

#include "loopkit/element_set.hpp"
#include "loopkit/loop_table.hpp"

namespace loopkit {

struct StructureFlags {
  bool lcc = false;
  bool rcc = false;
  bool cc = false;
  bool wip = false;
  bool power_associative = false;
  bool flexible = false;
  bool lap = false;
  bool rap = false;
  bool left_cheban = false;
  bool right_cheban = false;
  bool cheban = false;
  bool moufang = false;
  bool extra = false;
  /// R(x)^2 = L(x)^2 for all x
  bool squares_translation = false;
  /// R(x^2) = L(x^2) for all x
  bool square_central_translation = false;

  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

/// Names of the StructureFlags fields, in declaration order.
std::span<const std::string_view> flag_names();

/// Value of the flag called `name`; throws std::invalid_argument on an unknown name.
bool flag_value(const StructureFlags& flags, std::string_view name);

struct StructureReport {
  ElementSet left_nucleus;
  ElementSet middle_nucleus;
  ElementSet right_nucleus;
  ElementSet nucleus;
  ElementSet commutant;
  ElementSet center;
  std::optional<int> nilpotency_class;
  StructureFlags flags;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport analyze(const LoopTable& loop);

/// Keys are the field names; element sets are sorted index lists and an
/// absent nilpotency class is null.
nlohmann::json to_json(const StructureReport& report);

}  // namespace loopkit
