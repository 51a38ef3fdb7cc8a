#include "ptpm/online_matcher.hpp"

#include <algorithm>
#include <ostream>

namespace ptpm {

ResetMap initial_reset_map(std::size_t clock_count) {
    return ResetMap{std::vector<std::optional<Rat>>(clock_count, std::nullopt)};
}

ResetMap apply_reset(const ResetMap& rho, const std::vector<ClockId>& resets, const Rat& tau) {
    ResetMap out = rho;
    for (ClockId c : resets) out.at[c] = tau;
    return out;
}

TextStreamSink::TextStreamSink(std::ostream& out, VarNamer namer)
    : out_(out), namer_(std::move(namer)) {}

void TextStreamSink::emit(const Polyhedron& match) {
    if (!first_) out_ << "\n";
    out_ << polyhedron_to_text(match, namer_) << "\n";
    first_ = false;
    out_.flush();
}

JsonLinesSink::JsonLinesSink(std::ostream& out, VarNamer namer)
    : out_(out), namer_(std::move(namer)) {}

void JsonLinesSink::emit(const Polyhedron& match) {
    out_ << polyhedron_to_json(match, namer_).dump() << "\n";
    out_.flush();
}

PatternContext::PatternContext(const Pta& p) : pattern(&p) {
    Scope params;
    for (ParamId i = 0; i < p.params.size(); ++i) params.push_back(param_var(i));
    Scope clocks;
    for (ClockId i = 0; i < p.clocks.size(); ++i) clocks.push_back(clock_var(i));

    config_scope = make_scope([&] {
        Scope s{match_start_var()};
        s.insert(s.end(), params.begin(), params.end());
        return s;
    }());
    emit_scope = scope_union(config_scope, Scope{match_end_var()});
    step_scope = scope_union(config_scope, clocks);
    full_scope = scope_union(emit_scope, clocks);

    for (const auto& e : p.edges)
        if (e.action == kTerminalAction && p.accepting.count(e.dst))
            terminal_edges.push_back(&e);
    for (ParamId i = 0; i < p.params.size(); ++i)
        param_nonneg.push_back(expr(param_var(i)) >= expr(Rat(0)));
}

VarNamer PatternContext::namer() const {
    const Pta* p = pattern;
    return [p](Var v) -> std::string {
        switch (v.kind) {
            case VarKind::Param:
                if (v.index < p->params.size()) return p->params[v.index];
                break;
            case VarKind::Clock:
                if (v.index < p->clocks.size()) return p->clocks[v.index];
                break;
            default: break;
        }
        return default_var_name(v);
    };
}

namespace {

// eval(rho, now): one equality per clock, x = now - rho(x); a clock not
// reset since the match start refers to t.
void add_eval(Polyhedron& p, const ResetMap& rho, const LinExpr& now) {
    for (ClockId c = 0; c < rho.at.size(); ++c) {
        LinExpr reset_time =
            rho.at[c] ? expr(*rho.at[c]) : expr(match_start_var());
        p = conjoin(p, expr(clock_var(c)) == now - reset_time);
    }
}

void add_guard(Polyhedron& p, const Guard& guard) {
    for (const auto& atom : guard) {
        LinExpr lhs = expr(clock_var(atom.clock));
        LinExpr rhs = atom.is_param ? expr(param_var(atom.param)) : expr(atom.constant);
        switch (atom.cmp) {
            case Cmp::Lt: p = conjoin(p, lhs < rhs); break;
            case Cmp::Le: p = conjoin(p, lhs <= rhs); break;
            case Cmp::Eq: p = conjoin(p, lhs == rhs); break;
            case Cmp::Ge: p = conjoin(p, lhs >= rhs); break;
            case Cmp::Gt: p = conjoin(p, lhs > rhs); break;
        }
    }
}

}  // namespace

ConfigEngine::ConfigEngine(const PatternContext& ctx, MatchSink& sink, MatcherStats* stats)
    : ctx_(&ctx), sink_(&sink), stats_(stats) {}

void ConfigEngine::reset() { configs_.clear(); }

void ConfigEngine::push_config(Configuration c) {
    // Same-(location, reset map) configurations are deduplicated by
    // inclusion; the denotation is preserved.
    for (std::size_t i = 0; i < configs_.size();) {
        Configuration& other = configs_[i];
        if (other.loc == c.loc && other.rho == c.rho) {
            if (includes(other.constraint, c.constraint)) return;
            if (includes(c.constraint, other.constraint)) {
                configs_.erase(configs_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
        }
        ++i;
    }
    configs_.push_back(std::move(c));
    if (stats_ && configs_.size() > stats_->peak_configs) stats_->peak_configs = configs_.size();
}

void ConfigEngine::seed(const Rat& lo, const std::optional<Rat>& hi) {
    Polyhedron c(ctx_->config_scope);
    c.add_all(ctx_->param_nonneg);
    c.add(expr(match_start_var()) >= expr(lo));
    if (hi) c.add(expr(match_start_var()) < expr(*hi));
    push_config({ctx_->pattern->initial, initial_reset_map(ctx_->pattern->clocks.size()),
                 std::move(c)});
}

void ConfigEngine::insert_terminal(const Rat& lo, const std::optional<Rat>& hi,
                                   const std::optional<Rat>& horizon) {
    if (ctx_->terminal_edges.empty()) return;
    const Var tp = match_end_var();
    for (const auto& config : configs_) {
        for (const Edge* e : ctx_->terminal_edges) {
            if (e->src != config.loc) continue;
            Polyhedron p = rescope(config.constraint, ctx_->full_scope);
            p = conjoin(p, expr(tp) > expr(lo));
            if (hi) p = conjoin(p, expr(tp) <= expr(*hi));
            if (!hi && horizon) p = conjoin(p, expr(tp) <= expr(*horizon));
            p = conjoin(p, expr(match_start_var()) < expr(tp));
            add_eval(p, config.rho, expr(tp));
            add_guard(p, e->guard);
            if (is_empty(p)) continue;
            Polyhedron match = canonicalize(project(p, ctx_->emit_scope));
            if (is_empty(match)) continue;
            sink_->emit(match);
            if (stats_) ++stats_->emitted;
        }
    }
}

void ConfigEngine::advance(const Event& event) {
    std::vector<Configuration> previous = std::move(configs_);
    configs_.clear();
    for (const auto& config : previous) {
        for (const auto& e : ctx_->pattern->edges) {
            if (e.src != config.loc || e.action != event.action) continue;
            Polyhedron p = rescope(config.constraint, ctx_->step_scope);
            add_eval(p, config.rho, expr(event.time));
            add_guard(p, e.guard);
            Polyhedron next = project(p, ctx_->config_scope);
            if (is_empty(next)) continue;
            push_config({e.dst, apply_reset(config.rho, e.resets, event.time),
                         std::move(next)});
        }
    }
}

OnlineMatcher::OnlineMatcher(const Pta& pattern, MatchSink& sink, MatcherOptions opts)
    : ctx_(pattern), opts_(std::move(opts)), engine_(ctx_, sink, &stats_) {}

void OnlineMatcher::push_event(const Event& event) {
    if (finished_) throw std::logic_error("push_event after finish");
    if (event.time <= tau_prev_) throw WordError("timestamps must strictly increase");
    ++stats_.events;
    ++stats_.trials;
    engine_.seed(tau_prev_, event.time);
    engine_.insert_terminal(tau_prev_, event.time, std::nullopt);
    engine_.advance(event);
    tau_prev_ = event.time;
}

void OnlineMatcher::finish() {
    if (finished_) return;
    finished_ = true;
    engine_.seed(tau_prev_, std::nullopt);
    engine_.insert_terminal(tau_prev_, std::nullopt, opts_.horizon);
    engine_.reset();
}

Region match_online(const Pta& pattern, const TimedWord& w, MatcherOptions opts,
                    MatcherStats* stats) {
    PatternContext ctx(pattern);
    RegionCollector collector(ctx.emit_scope);
    OnlineMatcher matcher(pattern, collector, std::move(opts));
    for (const auto& e : w) matcher.push_event(e);
    matcher.finish();
    if (stats) *stats = matcher.stats();
    return collector.region();
}

}  // namespace ptpm
