#pragma once

#include <deque>
#include <functional>
#include <optional>

#include "ptpm/online_matcher.hpp"
#include "ptpm/skip_synthesis.hpp"

namespace ptpm {

enum class KmpMode { Parametric, NonParametric };

struct FjsOptions {
    KmpMode mode = KmpMode::NonParametric;
    bool quick_search = true;
    std::optional<Rat> horizon;
};

// Pulls events lazily; nullopt signals end of stream.
using EventSource = std::function<std::optional<Event>()>;

// Frontier of a matching trial: per location, the parameter valuations
// reached at the deepest consumed index.
struct TrialResult {
    std::vector<std::pair<LocId, Region>> frontier;
};

// Matching with Quick-Search lookahead and KMP-style skipping. Emits exactly
// the match set of the skip-free matcher (skipped windows are verified
// match-free by the precomputed tables). Buffers at most the current trial
// window plus the N+1 lookahead.
class FjsMatcher {
public:
    FjsMatcher(const Pta& pattern, const SkipTables& tables, MatchSink& sink,
               FjsOptions opts = {});

    void run(const EventSource& source);
    const MatcherStats& stats() const { return stats_; }
    const PatternContext& context() const { return ctx_; }

private:
    struct Buffer;
    TrialResult run_trial(Buffer& buf, std::size_t start);

    PatternContext ctx_;
    const SkipTables* tables_;
    MatchSink* sink_;
    FjsOptions opts_;
    MatcherStats stats_;
};

// Convenience wrapper over an in-memory word.
Region match_fjs(const Pta& pattern, const TimedWord& w, const SkipTables& tables,
                 FjsOptions opts = {}, MatcherStats* stats = nullptr);

// Next trial index after Quick-Search skipping from `start`, given the word
// prefix available in `w` (test staple; the matcher inlines the same logic).
std::size_t qs_lookahead(const TimedWord& w, std::size_t start, const SkipTables& tables);

}  // namespace ptpm
