#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "ptpm/polyhedron.hpp"

namespace ptpm {

using Json = nlohmann::ordered_json;

// Maps scope variables to display names (pattern parameter and clock names).
using VarNamer = std::function<std::string(Var)>;

VarNamer default_namer();

// Canonical inequality text: "1*t >= 7/10", "1*p + 1*t > 41/10". The sign of
// the leading coefficient fixes the printed direction.
std::string inequality_to_text(const LinIneq& row, const Scope& scope, const VarNamer& n);

// One inequality per line, rows in canonical order.
std::string polyhedron_to_text(const Polyhedron& p, const VarNamer& n);

// Blocks separated by blank lines, trailing newline, empty region -> "".
std::string region_to_text(const Region& r, const VarNamer& n);

// JSON stores the internal normalized form: signed integer coefficients and
// relations from {"<", "<=", "="}; rhs is an exact "num/den" string.
Json polyhedron_to_json(const Polyhedron& p, const VarNamer& n);
Json region_to_json(const Region& r, const VarNamer& n, const std::string& pattern_hash);

// Inverse of region_to_json given a resolver from names back to variables.
using VarResolver = std::function<Var(const std::string&)>;
Region region_from_json(const Json& j, const VarResolver& resolve);

}  // namespace ptpm
