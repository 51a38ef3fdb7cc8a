#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptpm/rational.hpp"
#include "ptpm/timed_word.hpp"

namespace ptpm {

using LocId = std::uint32_t;
using ClockId = std::uint32_t;
using ParamId = std::uint32_t;

enum class Cmp : std::uint8_t { Lt, Le, Eq, Ge, Gt };

const char* cmp_name(Cmp c);

// Guard atom "clock cmp bound" where the bound is a parameter or a rational
// constant (integers in source patterns; rationals appear after valuation).
struct GuardAtom {
    ClockId clock{0};
    Cmp cmp{Cmp::Le};
    bool is_param{false};
    ParamId param{0};
    Rat constant{0};

    friend bool operator==(const GuardAtom&, const GuardAtom&) = default;
};

using Guard = std::vector<GuardAtom>;

struct Edge {
    LocId src{0};
    Guard guard;
    std::string action;
    std::vector<ClockId> resets;  // sorted
    LocId dst{0};

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct PtaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parametric timed automaton. The alphabet lists the observable input
// actions; the terminal action $ and the unobservable action ε may label
// edges but are never part of the alphabet.
struct Pta {
    std::vector<std::string> alphabet;
    std::vector<std::string> locations;
    LocId initial{0};
    std::set<LocId> accepting;
    std::vector<std::string> clocks;
    std::vector<std::string> params;
    std::vector<Edge> edges;

    LocId location_id(const std::string& name) const;
    std::optional<ClockId> clock_id(const std::string& name) const;
    std::optional<ParamId> param_id(const std::string& name) const;
    bool has_epsilon_edges() const;

    friend bool operator==(const Pta&, const Pta&) = default;
};

// --- parsing / serialization ----------------------------------------------

// Line-oriented text format:
//   clocks: x y
//   params: p1 p2
//   loc <name> [initial] [accepting]
//   edge <src> -> <dst> on <action> [when <atom> & <atom> ...] [reset x,y]
// '#' starts a comment. The terminal action is the literal "$".
Pta parse_pta(std::istream& in);
Pta parse_pta_text(const std::string& text);
std::string pta_to_text(const Pta& a);

nlohmann::ordered_json pta_to_json(const Pta& a);
Pta pta_from_json(const nlohmann::ordered_json& j);

// Pattern well-formedness: $-edges target exactly the accepting locations.
// Throws PtaError on violations; returns human-readable warnings (e.g.
// accepting location unreachable in the untimed graph).
std::vector<std::string> validate_pattern(const Pta& a);

// --- operations -------------------------------------------------------------

using ParamValuation = std::map<std::string, Rat>;

// Replaces every parameter occurrence by its (nonnegative) value.
Pta valuate(const Pta& a, const ParamValuation& v);

// Same automaton with accepting set {loc}.
Pta restrict_accepting(const Pta& a, LocId loc);

// A'_l: language of "reach l, then anything": adds l_fin with escape edges
// from l and self-loops, accepting {l, l_fin}.
Pta suffix_closure(const Pta& a, LocId loc);

// A'_{+n}: n arbitrary events, an unobservable clock-resetting step, then a
// $-stripped match, then anything. Accepting = predecessors of the original
// accepting set, plus l_fin.
Pta prefix_shift(const Pta& a, std::uint32_t n);

// Appends suffix to every clock and parameter name (disjoint copies for
// products).
Pta rename_apart(const Pta& a, const std::string& suffix);

struct ProductComponentMap {
    std::vector<ClockId> clock_base;   // component -> first product clock id
    std::vector<ParamId> param_base;   // component -> first product param id
    std::vector<std::size_t> loc_radix;
};

struct ProductPta {
    Pta pta;
    ProductComponentMap map;

    std::vector<LocId> components_of(LocId product_loc) const;
    LocId product_of(std::span<const LocId> component_locs) const;
};

// Strong-broadcast synchronized product; shared actions fire jointly, the
// unobservable action stays local to its component. Accepting tuples are
// those with at least one accepting component. Clock/parameter names of the
// components must be disjoint.
ProductPta synchronized_product(std::span<const Pta> components);

// Length of the shortest untimed path from the initial location to an
// accepting one, not counting the final $-edge; nullopt if unreachable.
std::optional<std::uint32_t> shortest_untimed_accepting(const Pta& a);

// Locations with an outgoing $-edge into the accepting set.
std::set<LocId> pre_accepting(const Pta& a);

// Deterministic content hash of the canonical text form (hex).
std::string pattern_hash(const Pta& a);

}  // namespace ptpm
