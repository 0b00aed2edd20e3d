#pragma once

#include <string>
#include <vector>

#include "talex/knot_io.hpp"

namespace talex {

// The four bundled knots with their Lin presentations: trefoil, figure8,
// 5_1, 5_2.
const std::vector<std::string>& builtin_names();
const std::string& builtin_source(const std::string& name);  // throws Error when unknown
KnotInput builtin(const std::string& name);

}  // namespace talex
