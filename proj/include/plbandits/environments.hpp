#pragma once
#include <string>
#include <vector>

#include "plbandits/pl_instance.hpp"

namespace plb {

// Built-in benchmark environments: g1, g4, arith, geo, b1 (n = 16) and
// g4b, arithb, geob (n = 50).
//
// A literal 0.2 step for arithb would drive scores negative after item 6
// over 50 items; it is loaded with step 0.02 instead, keeping every score
// positive while preserving the arithmetic progression.
std::vector<std::string> builtin_env_names();
PLInstance load_env(const std::string& name);

// JSON file with a single key: {"theta": [..]}.
PLInstance load_instance_file(const std::string& path);

}  // namespace plb
