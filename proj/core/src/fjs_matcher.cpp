#include "ptpm/fjs_matcher.hpp"

#include <algorithm>
#include <map>

namespace ptpm {

// 1-based sliding window over the event stream; events before the active
// trial are dropped.
struct FjsMatcher::Buffer {
    const EventSource* pull;
    std::deque<Event> events;
    std::size_t base = 1;  // index of events.front()
    std::size_t pulled = 0;
    bool eof = false;

    const Event* get(std::size_t idx) {
        while (!eof && base + events.size() <= idx) {
            auto e = (*pull)();
            if (!e) {
                eof = true;
                break;
            }
            ++pulled;
            events.push_back(std::move(*e));
        }
        if (idx < base) throw std::logic_error("fjs buffer looked back past the trial window");
        if (base + events.size() <= idx) return nullptr;
        return &events[idx - base];
    }

    Rat tau(std::size_t idx) {
        if (idx == 0) return Rat(0);
        const Event* e = get(idx);
        if (!e) throw std::logic_error("fjs buffer timestamp out of range");
        return e->time;
    }

    void drop_before(std::size_t idx) {
        while (base < idx && !events.empty()) {
            events.pop_front();
            ++base;
        }
    }
};

FjsMatcher::FjsMatcher(const Pta& pattern, const SkipTables& tables, MatchSink& sink,
                       FjsOptions opts)
    : ctx_(pattern), tables_(&tables), sink_(&sink), opts_(std::move(opts)) {
    if (tables.hash != pattern_hash(pattern))
        throw std::runtime_error("skip tables were computed for a different pattern");
}

TrialResult FjsMatcher::run_trial(Buffer& buf, std::size_t start) {
    ConfigEngine engine(ctx_, *sink_, &stats_);
    engine.seed(buf.tau(start - 1), buf.tau(start));

    std::vector<Configuration> frontier;
    std::size_t k = start;
    while (engine.has_configs()) {
        const Event* ev = buf.get(k);
        if (!ev) {
            engine.insert_terminal(buf.tau(k - 1), std::nullopt, opts_.horizon);
            frontier = engine.configs();
            break;
        }
        engine.insert_terminal(buf.tau(k - 1), ev->time, std::nullopt);
        engine.advance(*ev);
        if (engine.has_configs()) frontier = engine.configs();
        ++k;
    }

    TrialResult result;
    // Valuations reached per frontier location: the t-projection of each
    // configuration constraint.
    Scope param_scope;
    for (ParamId p = 0; p < ctx_.pattern->params.size(); ++p)
        param_scope.push_back(param_var(p));
    param_scope = make_scope(param_scope);
    std::map<LocId, Region> grouped;
    for (const auto& config : frontier) {
        auto it = grouped.find(config.loc);
        if (it == grouped.end())
            it = grouped.emplace(config.loc, Region::empty(param_scope)).first;
        region_add(it->second, project(config.constraint, param_scope));
    }
    for (auto& [loc, region] : grouped) result.frontier.emplace_back(loc, std::move(region));
    return result;
}

void FjsMatcher::run(const EventSource& source) {
    const std::uint32_t N = tables_->N;
    Buffer buf;
    buf.pull = &source;

    if (N == 0) {
        // A pattern that can match the empty segment gives no room to skip;
        // run the skip-free algorithm over the stream.
        OnlineMatcher online(*ctx_.pattern, *sink_, MatcherOptions{opts_.horizon});
        std::size_t k = 1;
        while (const Event* e = buf.get(k)) {
            online.push_event(*e);
            buf.drop_before(k);
            ++k;
        }
        online.finish();
        stats_ = online.stats();
        return;
    }

    std::size_t i = 1;
    while (true) {
        // The trial window [tau(i-1), tau(i)) needs event i; any match needs
        // N events, so events up to i+N-1 must exist.
        if (!buf.get(i + N - 1)) break;
        if (opts_.quick_search) {
            bool ended = false;
            const Event* nth = buf.get(i + N - 1);
            while (nth && !tables_->possible_nth_letter(nth->action)) {
                const Event* look = buf.get(i + N);
                if (!look) {
                    ended = true;  // missing lookahead letter: end of scan
                    break;
                }
                i += tables_->qs_skip(look->action);
                nth = buf.get(i + N - 1);
            }
            if (ended || !nth) break;
        }
        ++stats_.trials;
        TrialResult trial = run_trial(buf, i);
        std::uint32_t skip = 1;
        for (const auto& [loc, region] : trial.frontier) {
            std::uint32_t d = opts_.mode == KmpMode::NonParametric
                                  ? tables_->kmp_np[loc]
                                  : delta_kmp(*tables_, loc, region);
            skip = std::max(skip, d);
        }
        i += skip;
        buf.drop_before(i >= 2 ? i - 1 : 1);
    }
    stats_.events = buf.pulled;
}

Region match_fjs(const Pta& pattern, const TimedWord& w, const SkipTables& tables,
                 FjsOptions opts, MatcherStats* stats) {
    PatternContext ctx(pattern);
    RegionCollector collector(ctx.emit_scope);
    FjsMatcher matcher(pattern, tables, collector, std::move(opts));
    std::size_t next = 0;
    matcher.run([&]() -> std::optional<Event> {
        if (next >= w.size()) return std::nullopt;
        return w[next++];
    });
    if (stats) *stats = matcher.stats();
    return collector.region();
}

std::size_t qs_lookahead(const TimedWord& w, std::size_t start, const SkipTables& tables) {
    const std::uint32_t N = tables.N;
    std::size_t i = start;
    while (true) {
        if (i + N - 1 > w.size()) return w.size() + 1;  // past the last trial start
        const Event& nth = w[i + N - 2];                // a_{i+N-1}, 1-based
        if (tables.possible_nth_letter(nth.action)) return i;
        if (i + N > w.size()) return w.size() + 1;  // missing lookahead letter
        i += tables.qs_skip(w[i + N - 1].action);   // a_{i+N}
    }
}

}  // namespace ptpm
