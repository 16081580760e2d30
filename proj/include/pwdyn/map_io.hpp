#pragma once

#include <string>
#include <string_view>

#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

// Map text format: one node per line, "<x> <y>", each a rational literal
// "p/q" or an integer "p". Lines starting with '#' and blank lines are
// ignored. Nodes must be sorted by x.

/// Throws ParseError naming the offending line.
PWLMap parse_map(std::string_view text);

/// Canonical form: normalized rationals, one "x y" line per node.
std::string serialize_map(const PWLMap& map);

PWLMap load_map_file(const std::string& path);

}  // namespace pwdyn
