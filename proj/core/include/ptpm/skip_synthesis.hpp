#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptpm/polyhedron.hpp"
#include "ptpm/pta.hpp"

namespace ptpm {

inline constexpr std::uint64_t kDefaultBudget = 100;

// Reachability synthesis: the parameter valuations under which some target
// location is reachable. Breadth-first over the parametric zone graph with
// inclusion subsumption; exact if exploration finishes within the budget,
// otherwise the unexplored frontier is speculated reachable (a safe
// overapproximation, it can only shrink skip values).
Region efsynth(const Pta& a, const std::set<LocId>& targets, std::uint64_t budget);

// Valuation set V_{l,n}: some run ending at l can overlap a match starting n
// events later. Built from the suffix closure and the prefix shift with
// disjoint parameter copies, synchronized, then synthesized and projected
// back onto the original parameters.
Region compute_Vln(const Pta& a, LocId loc, std::uint32_t n, std::uint64_t budget);

struct SkipTables {
    std::string hash;
    std::uint32_t N = 0;
    std::uint32_t n_max = 0;
    std::vector<std::vector<Region>> V;     // [location][n-1]
    std::vector<std::uint32_t> kmp_np;      // per location
    std::map<std::string, std::uint32_t> qs;  // per alphabet action

    // Quick-Search lookahead letter test: can `action` be the N-th letter of
    // an accepted word? Exactly the actions with skip value 1.
    bool possible_nth_letter(const std::string& action) const;
    // Out-of-alphabet actions cannot occur inside a match: skip N+1.
    std::uint32_t qs_skip(const std::string& action) const;
};

struct UnsatisfiablePattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precomputes N, the V table, the non-parametric KMP skips and the
// Quick-Search skips. Throws UnsatisfiablePattern when the accepting set is
// unreachable. n_max defaults to max(N, |L|).
SkipTables compute_tables(const Pta& a, std::uint64_t budget = kDefaultBudget,
                          std::optional<std::uint32_t> n_max = std::nullopt);

// Smallest n with V subset-of V_{l,n}; n_max when none (every skipped window
// was verified match-free).
std::uint32_t delta_kmp(const SkipTables& tables, LocId loc, const Region& valuations);
std::uint32_t delta_kmp_np(const SkipTables& tables, LocId loc);

// Def-level Quick-Search skip for one action (used by compute_tables).
std::uint32_t delta_qs(const Pta& a, const std::string& action, std::uint32_t N,
                       std::uint64_t budget);

nlohmann::ordered_json tables_to_json(const SkipTables& tables, const Pta& a);
SkipTables tables_from_json(const nlohmann::ordered_json& j, const Pta& a);

}  // namespace ptpm
