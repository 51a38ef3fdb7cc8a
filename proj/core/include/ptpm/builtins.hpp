#pragma once

#include <string>
#include <vector>

#include "ptpm/pta.hpp"

namespace ptpm {

// Benchmark pattern automata: gear, accel, blowup, onlytiming and their
// non-parametric -np variants with the standard substituted constants.
std::vector<std::string> builtin_pattern_names();
Pta builtin_pattern(const std::string& name);

}  // namespace ptpm
