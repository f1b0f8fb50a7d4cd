#pragma once

#include <string>
#include <string_view>

#include "solvrad/perm_group.hpp"

namespace solvrad {

// Group file format: the first significant line is "degree N"; every
// further nonblank line that does not start with '#' is one generator in
// cycle notation.
PermGroup read_group_text(std::string_view text);
PermGroup read_group_file(const std::string& path);

}  // namespace solvrad
