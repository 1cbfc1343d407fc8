#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "loopkit/term.hpp"

namespace loopkit {

struct NamedIdentity {
  std::string name;
  /// Source text in the identity grammar.
  std::string text;
  Identity identity;
};

/// Named identities from the theory of Cheban, Moufang, extra, Osborn and
/// conjugacy closed loops. Names are stable lowercase tokens.
std::span<const NamedIdentity> catalog();

std::optional<NamedIdentity> find_identity(std::string_view name);

/// Same as find_identity(name)->identity; throws UnknownIdentity.
const Identity& catalog_identity(std::string_view name);

/// A catalog name, or otherwise an expression in the identity grammar.
Identity resolve_identity(std::string_view name_or_expression);

}  // namespace loopkit
