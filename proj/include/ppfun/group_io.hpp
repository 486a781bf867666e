#pragma once

#include <string>

#include "ppfun/automorphism.hpp"
#include "ppfun/group.hpp"

namespace ppfun {

/// Parses the group definition text format. One directive per line,
/// '#' starts a comment, whitespace-insensitive:
///   degree N
///   gen (1 2)(3 4)
/// or a single line
///   name S4
/// or
///   semidirect base=<file|name> auto=<comma-separated element-index images>
PermGroup parse_group_text(const std::string& text, long order_cap = kDefaultOrderCap);

/// Resolves a CLI group source: an existing file path is parsed as the text
/// format, anything else is looked up as a builtin name.
PermGroup load_group(const std::string& source, long order_cap = kDefaultOrderCap);

/// Parses an automorphism spec for L: "identity" or a comma-separated list
/// of |L| element-index images.
AutMap parse_automorphism(const PermGroup& L, const std::string& spec);

}  // namespace ppfun
