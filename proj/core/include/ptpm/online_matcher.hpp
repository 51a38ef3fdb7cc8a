#pragma once

#include <iosfwd>
#include <optional>

#include "ptpm/polyhedron.hpp"
#include "ptpm/pta.hpp"
#include "ptpm/serialize.hpp"
#include "ptpm/timed_word.hpp"

namespace ptpm {

// Latest reset instant per clock; nullopt means "not reset since the match
// start" (the symbolic start variable t).
struct ResetMap {
    std::vector<std::optional<Rat>> at;

    friend bool operator==(const ResetMap&, const ResetMap&) = default;
};

ResetMap initial_reset_map(std::size_t clock_count);
ResetMap apply_reset(const ResetMap& rho, const std::vector<ClockId>& resets, const Rat& tau);

// Matcher state: location, reset map, constraint over parameters and t.
struct Configuration {
    LocId loc{0};
    ResetMap rho;
    Polyhedron constraint;
};

// Emitted match polyhedra (over t, t', parameters) go to a sink; sinks may
// stream or collect.
class MatchSink {
public:
    virtual ~MatchSink() = default;
    virtual void emit(const Polyhedron& match) = 0;
};

class RegionCollector final : public MatchSink {
public:
    explicit RegionCollector(Scope scope) : region_(Region::empty(std::move(scope))) {}
    void emit(const Polyhedron& match) override { region_add(region_, match); }
    const Region& region() const { return region_; }

private:
    Region region_;
};

// Streams each canonical block as it is produced (blank line separated).
class TextStreamSink final : public MatchSink {
public:
    TextStreamSink(std::ostream& out, VarNamer namer);
    void emit(const Polyhedron& match) override;

private:
    std::ostream& out_;
    VarNamer namer_;
    bool first_ = true;
};

// One JSON object per line (the polyhedron schema of the document format).
class JsonLinesSink final : public MatchSink {
public:
    JsonLinesSink(std::ostream& out, VarNamer namer);
    void emit(const Polyhedron& match) override;

private:
    std::ostream& out_;
    VarNamer namer_;
};

// Scopes, edge indexes and variable naming shared by the matchers.
struct PatternContext {
    explicit PatternContext(const Pta& pattern);

    const Pta* pattern;
    Scope config_scope;  // t and parameters
    Scope emit_scope;    // t, t' and parameters
    Scope step_scope;    // t, parameters and clocks
    Scope full_scope;    // t, t', parameters and clocks
    std::vector<const Edge*> terminal_edges;
    std::vector<Constraint> param_nonneg;

    VarNamer namer() const;
    Var var_of_clock(ClockId c) const { return clock_var(c); }
    Var var_of_param(ParamId p) const { return param_var(p); }
};

struct MatcherStats {
    std::size_t events = 0;
    std::size_t trials = 0;
    std::size_t emitted = 0;
    std::size_t peak_configs = 0;
};

// The configuration engine behind Algorithm-style matching: seed a start
// window, try to insert the terminal event, step over an input event.
class ConfigEngine {
public:
    ConfigEngine(const PatternContext& ctx, MatchSink& sink, MatcherStats* stats);

    // Pushes (initial location, empty reset map, lo <= t < hi) onto the
    // configuration set; no upper bound when hi is absent.
    void seed(const Rat& lo, const std::optional<Rat>& hi);
    // Tries every $-edge with t' in (lo, hi]; unbounded when hi is absent,
    // optionally truncated by horizon.
    void insert_terminal(const Rat& lo, const std::optional<Rat>& hi,
                         const std::optional<Rat>& horizon);
    // Consumes one input event.
    void advance(const Event& event);

    bool has_configs() const { return !configs_.empty(); }
    const std::vector<Configuration>& configs() const { return configs_; }
    void reset();

private:
    void push_config(Configuration c);

    const PatternContext* ctx_;
    MatchSink* sink_;
    MatcherStats* stats_;
    std::vector<Configuration> configs_;
};

struct MatcherOptions {
    std::optional<Rat> horizon;  // truncate unbounded t' at end of stream
};

// Algorithm-1 matcher: skip-free, online. Matches with t' <= tau are emitted
// before the event at tau is consumed.
class OnlineMatcher {
public:
    OnlineMatcher(const Pta& pattern, MatchSink& sink, MatcherOptions opts = {});

    void push_event(const Event& event);
    void finish();
    const MatcherStats& stats() const { return stats_; }
    const PatternContext& context() const { return ctx_; }

private:
    PatternContext ctx_;
    MatcherOptions opts_;
    MatcherStats stats_;
    ConfigEngine engine_;
    Rat tau_prev_{0};
    bool finished_ = false;
};

// Convenience wrapper: runs the online matcher over a whole word.
Region match_online(const Pta& pattern, const TimedWord& w, MatcherOptions opts = {},
                    MatcherStats* stats = nullptr);

}  // namespace ptpm
