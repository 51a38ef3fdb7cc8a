#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ptpm {

// The variable universe of a matching problem: the match-start time t, the
// match-end time t', the pattern parameters, the pattern clocks, and
// auxiliary variables used by derived constructions (elapse amounts,
// unobservable-step times). The enum order fixes the canonical variable
// order t, t', p..., x..., aux... used everywhere for serialization.
enum class VarKind : std::uint8_t {
    MatchStart = 0,
    MatchEnd = 1,
    Param = 2,
    Clock = 3,
    Aux = 4,
};

struct Var {
    VarKind kind{VarKind::Aux};
    std::uint32_t index{0};

    friend constexpr auto operator<=>(const Var&, const Var&) = default;
};

constexpr Var match_start_var() { return {VarKind::MatchStart, 0}; }
constexpr Var match_end_var() { return {VarKind::MatchEnd, 0}; }
constexpr Var param_var(std::uint32_t i) { return {VarKind::Param, i}; }
constexpr Var clock_var(std::uint32_t i) { return {VarKind::Clock, i}; }
constexpr Var aux_var(std::uint32_t i) { return {VarKind::Aux, i}; }

// A scope is the sorted set of variables a polyhedron ranges over.
using Scope = std::vector<Var>;

Scope make_scope(std::vector<Var> vars);
Scope scope_union(const Scope& a, const Scope& b);
bool scope_contains(const Scope& scope, Var v);
bool scope_subset(const Scope& sub, const Scope& super);
// Position of v in scope, or scope.size() when absent.
std::size_t scope_index(const Scope& scope, Var v);

// Fallback display names: t, t', p0..., x0..., aux0...
std::string default_var_name(Var v);

}  // namespace ptpm
