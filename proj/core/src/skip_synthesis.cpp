#include "ptpm/skip_synthesis.hpp"

#include <algorithm>
#include <deque>

#include "ptpm/serialize.hpp"

namespace ptpm {

namespace {

// --- parametric zones -------------------------------------------------------

struct ZoneContext {
    const Pta* a;
    Scope zone_scope;    // clocks and parameters
    Scope param_scope;   // parameters only

    explicit ZoneContext(const Pta& pta) : a(&pta) {
        Scope clocks, params;
        for (ClockId c = 0; c < pta.clocks.size(); ++c) clocks.push_back(clock_var(c));
        for (ParamId p = 0; p < pta.params.size(); ++p) params.push_back(param_var(p));
        param_scope = make_scope(params);
        zone_scope = scope_union(param_scope, clocks);
    }
};

// Upward closure in the clock dimensions: project out a shared nonnegative
// elapse amount d with x := x + d, parameters held fixed.
Polyhedron time_elapse(const Polyhedron& zone, const ZoneContext& ctx) {
    const std::size_t clock_count = ctx.a->clocks.size();
    if (clock_count == 0) return zone;
    // aux(i) = pre-elapse value of clock i; aux(clock_count) = d.
    Scope wide = ctx.zone_scope;
    for (ClockId c = 0; c <= clock_count; ++c) wide = scope_union(wide, Scope{aux_var(c)});

    // Rows of the zone rewritten over the pre-elapse copies.
    Polyhedron p(wide);
    for (const auto& row : zone.rows()) {
        Constraint c;
        for (std::size_t i = 0; i < zone.scope().size(); ++i) {
            if (row.coeffs[i] == 0) continue;
            Var v = zone.scope()[i];
            if (v.kind == VarKind::Clock) v = aux_var(v.index);
            c.coeffs[v] = row.coeffs[i];
        }
        c.rel = row.rel;
        c.rhs = row.rhs;
        p.add(c);
    }
    Var d = aux_var(static_cast<std::uint32_t>(clock_count));
    p.add(expr(d) >= expr(Rat(0)));
    for (ClockId c = 0; c < clock_count; ++c)
        p.add(expr(clock_var(c)) == expr(aux_var(c)) + expr(d));
    return project(p, ctx.zone_scope);
}

Polyhedron initial_zone(const ZoneContext& ctx) {
    Polyhedron z(ctx.zone_scope);
    for (ClockId c = 0; c < ctx.a->clocks.size(); ++c)
        z.add(expr(clock_var(c)) == expr(Rat(0)));
    for (ParamId p = 0; p < ctx.a->params.size(); ++p)
        z.add(expr(param_var(p)) >= expr(Rat(0)));
    return time_elapse(z, ctx);
}

std::optional<Polyhedron> zone_post(const Polyhedron& zone, const Edge& e,
                                    const ZoneContext& ctx) {
    Polyhedron p = zone;
    for (const auto& atom : e.guard) {
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
    if (is_empty(p)) return std::nullopt;
    if (!e.resets.empty()) {
        Scope keep;
        for (Var v : ctx.zone_scope) {
            bool reset = v.kind == VarKind::Clock &&
                         std::binary_search(e.resets.begin(), e.resets.end(), v.index);
            if (!reset) keep.push_back(v);
        }
        p = project(p, keep);
        p = rescope(p, ctx.zone_scope);
        for (ClockId c : e.resets) p = conjoin(p, expr(clock_var(c)) == expr(Rat(0)));
    }
    return time_elapse(p, ctx);
}

}  // namespace

Region efsynth(const Pta& a, const std::set<LocId>& targets, std::uint64_t budget) {
    ZoneContext ctx(a);
    Region result = Region::empty(ctx.param_scope);

    struct Node {
        LocId loc;
        Polyhedron zone;
    };
    std::deque<Node> queue;
    std::vector<std::vector<Polyhedron>> visited(a.locations.size());

    Polyhedron z0 = initial_zone(ctx);
    auto project_params = [&](const Polyhedron& zone) {
        return project(zone, ctx.param_scope);
    };

    std::uint64_t admitted = 0;
    bool exhausted = budget == 0;
    if (!exhausted) {
        queue.push_back({a.initial, z0});
        visited[a.initial].push_back(z0);
        admitted = 1;
    } else {
        region_add(result, project_params(z0));
    }

    std::vector<std::vector<const Edge*>> edges_from(a.locations.size());
    for (const auto& e : a.edges) edges_from[e.src].push_back(&e);

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (exhausted) {
            // Parameter projections only shrink along a path, so the
            // projection of an unexplored state covers its whole subtree.
            region_add(result, project_params(node.zone));
            continue;
        }
        if (targets.count(node.loc)) {
            region_add(result, project_params(node.zone));
            continue;
        }
        for (const Edge* e : edges_from[node.loc]) {
            auto succ = zone_post(node.zone, *e, ctx);
            if (!succ) continue;
            bool subsumed = false;
            for (const auto& seen : visited[e->dst]) {
                if (includes(seen, *succ)) {
                    subsumed = true;
                    break;
                }
            }
            if (subsumed) continue;
            if (admitted >= budget) {
                exhausted = true;
                region_add(result, project_params(*succ));
                continue;
            }
            ++admitted;
            visited[e->dst].push_back(*succ);
            queue.push_back({e->dst, std::move(*succ)});
        }
    }
    return region_canonicalize(result);
}

namespace {

// Maps a region over one parameter set onto the original pattern parameters
// by name.
Region remap_params(const Region& r, const Pta& to,
                    const std::vector<std::string>& from_names) {
    Scope to_scope;
    for (ParamId p = 0; p < to.params.size(); ++p) to_scope.push_back(param_var(p));
    to_scope = make_scope(to_scope);

    Region out = Region::empty(to_scope);
    for (const auto& d : r.disjuncts) {
        Polyhedron p(to_scope);
        for (const auto& row : d.rows()) {
            Constraint c;
            for (std::size_t i = 0; i < d.scope().size(); ++i) {
                if (row.coeffs[i] == 0) continue;
                Var v = d.scope()[i];
                auto id = to.param_id(from_names[v.index]);
                if (!id) throw PtaError("internal: parameter projection mismatch");
                c.coeffs[param_var(*id)] = row.coeffs[i];
            }
            c.rel = row.rel;
            c.rhs = row.rhs;
            p.add(c);
        }
        region_add(out, std::move(p));
    }
    return out;
}

}  // namespace

Region compute_Vln(const Pta& a, LocId loc, std::uint32_t n, std::uint64_t budget) {
    Pta left = suffix_closure(a, loc);
    Pta right = rename_apart(prefix_shift(a, n), "#2");
    std::vector<Pta> comps{left, right};
    ProductPta prod = synchronized_product(comps);

    // Intersection semantics: both components accepting.
    std::set<LocId> targets;
    for (LocId l = 0; l < prod.pta.locations.size(); ++l) {
        auto parts = prod.components_of(l);
        if (left.accepting.count(parts[0]) && right.accepting.count(parts[1]))
            targets.insert(l);
    }
    Region synth = efsynth(prod.pta, targets, budget);

    // Keep the left (original) parameter copy.
    Scope keep;
    for (ParamId p = 0; p < left.params.size(); ++p)
        keep.push_back(param_var(prod.map.param_base[0] + p));
    keep = make_scope(keep);
    Region projected = region_project(synth, keep);
    return region_canonicalize(remap_params(projected, a, [&] {
        std::vector<std::string> names(prod.pta.params.size());
        for (ParamId p = 0; p < left.params.size(); ++p)
            names[prod.map.param_base[0] + p] = a.params[p];
        return names;
    }()));
}

bool SkipTables::possible_nth_letter(const std::string& action) const {
    auto it = qs.find(action);
    return it != qs.end() && it->second == 1;
}

std::uint32_t SkipTables::qs_skip(const std::string& action) const {
    auto it = qs.find(action);
    if (it == qs.end()) return N + 1;
    return it->second;
}

namespace {

// Clockless, parameterless position tracker for Sigma^N a Sigma*: accepts
// words over the pattern alphabet whose (N+1)-th letter is `action`.
Pta position_tracker(const std::vector<std::string>& alphabet, std::uint32_t N,
                     const std::string& action) {
    Pta t;
    t.alphabet = alphabet;
    for (std::uint32_t i = 0; i <= N + 1; ++i) t.locations.push_back("q" + std::to_string(i));
    t.initial = 0;
    t.accepting = {N + 1};
    for (std::uint32_t i = 0; i < N; ++i)
        for (const auto& a : alphabet) t.edges.push_back(Edge{i, {}, a, {}, i + 1});
    t.edges.push_back(Edge{N, {}, action, {}, N + 1});
    for (const auto& a : alphabet) t.edges.push_back(Edge{N + 1, {}, a, {}, N + 1});
    return t;
}

}  // namespace

std::uint32_t delta_qs(const Pta& a, const std::string& action, std::uint32_t N,
                       std::uint64_t budget) {
    bool in_alphabet =
        std::find(a.alphabet.begin(), a.alphabet.end(), action) != a.alphabet.end();
    if (!in_alphabet) return N + 1;
    for (std::uint32_t n = 1; n <= N; ++n) {
        Pta tracker = position_tracker(a.alphabet, N, action);
        Pta right = prefix_shift(a, n);
        std::vector<Pta> comps{tracker, right};
        ProductPta prod = synchronized_product(comps);
        std::set<LocId> targets;
        for (LocId l = 0; l < prod.pta.locations.size(); ++l) {
            auto parts = prod.components_of(l);
            if (tracker.accepting.count(parts[0]) && right.accepting.count(parts[1]))
                targets.insert(l);
        }
        if (!efsynth(prod.pta, targets, budget).is_empty_region()) return n;
    }
    // Position N+1 can always fall in the arbitrary prefix.
    return N + 1;
}

SkipTables compute_tables(const Pta& a, std::uint64_t budget,
                          std::optional<std::uint32_t> n_max_opt) {
    auto N = shortest_untimed_accepting(a);
    if (!N) throw UnsatisfiablePattern("pattern accepting set is unreachable");

    SkipTables tables;
    tables.hash = pattern_hash(a);
    tables.N = *N;
    tables.n_max = n_max_opt.value_or(
        std::max<std::uint32_t>(*N, static_cast<std::uint32_t>(a.locations.size())));
    if (tables.n_max == 0) tables.n_max = 1;

    tables.V.assign(a.locations.size(), {});
    for (LocId l = 0; l < a.locations.size(); ++l) {
        tables.V[l].reserve(tables.n_max);
        for (std::uint32_t n = 1; n <= tables.n_max; ++n)
            tables.V[l].push_back(compute_Vln(a, l, n, budget));
    }
    tables.kmp_np.assign(a.locations.size(), tables.n_max);
    for (LocId l = 0; l < a.locations.size(); ++l)
        tables.kmp_np[l] = delta_kmp_np(tables, l);
    for (const auto& action : a.alphabet)
        tables.qs[action] = delta_qs(a, action, tables.N, budget);
    return tables;
}

std::uint32_t delta_kmp(const SkipTables& tables, LocId loc, const Region& valuations) {
    for (std::uint32_t n = 1; n <= tables.n_max; ++n)
        if (region_includes(tables.V[loc][n - 1], valuations)) return n;
    return tables.n_max;
}

std::uint32_t delta_kmp_np(const SkipTables& tables, LocId loc) {
    for (std::uint32_t n = 1; n <= tables.n_max; ++n)
        if (!tables.V[loc][n - 1].is_empty_region()) return n;
    return tables.n_max;
}

// --- persistence ------------------------------------------------------------

nlohmann::ordered_json tables_to_json(const SkipTables& tables, const Pta& a) {
    using Json = nlohmann::ordered_json;
    auto namer = [&a](Var v) -> std::string {
        if (v.kind == VarKind::Param && v.index < a.params.size()) return a.params[v.index];
        return default_var_name(v);
    };
    Json vj = Json::array();
    for (LocId l = 0; l < tables.V.size(); ++l)
        for (std::uint32_t n = 1; n <= tables.n_max; ++n) {
            Json disjuncts = Json::array();
            for (const auto& d : tables.V[l][n - 1].disjuncts)
                disjuncts.push_back(polyhedron_to_json(d, namer));
            vj.push_back(Json{{"loc", a.locations[l]},
                              {"n", n},
                              {"disjuncts", std::move(disjuncts)}});
        }
    Json kmp = Json::object();
    for (LocId l = 0; l < tables.kmp_np.size(); ++l)
        kmp[a.locations[l]] = tables.kmp_np[l];
    Json qs = Json::object();
    for (const auto& [action, value] : tables.qs) qs[action] = value;
    return Json{{"format", "ptpm-tables"},
                {"version", 1},
                {"pattern_hash", tables.hash},
                {"N", tables.N},
                {"n_max", tables.n_max},
                {"kmp_np", std::move(kmp)},
                {"qs", std::move(qs)},
                {"V", std::move(vj)}};
}

SkipTables tables_from_json(const nlohmann::ordered_json& j, const Pta& a) {
    if (j.value("format", "") != "ptpm-tables" || j.value("version", 0) != 1)
        throw std::runtime_error("unrecognized skip-table file format");
    SkipTables tables;
    tables.hash = j.at("pattern_hash").get<std::string>();
    if (tables.hash != pattern_hash(a))
        throw std::runtime_error("skip-table file does not match the pattern (content hash)");
    tables.N = j.at("N").get<std::uint32_t>();
    tables.n_max = j.at("n_max").get<std::uint32_t>();

    Scope param_scope;
    for (ParamId p = 0; p < a.params.size(); ++p) param_scope.push_back(param_var(p));
    param_scope = make_scope(param_scope);

    auto resolve = [&a](const std::string& name) -> Var {
        auto p = a.param_id(name);
        if (!p) throw std::runtime_error("unknown parameter in skip-table file: " + name);
        return param_var(*p);
    };

    tables.V.assign(a.locations.size(),
                    std::vector<Region>(tables.n_max, Region::empty(param_scope)));
    for (const auto& entry : j.at("V")) {
        LocId l = a.location_id(entry.at("loc").get<std::string>());
        std::uint32_t n = entry.at("n").get<std::uint32_t>();
        if (n < 1 || n > tables.n_max) throw std::runtime_error("bad n in skip-table file");
        nlohmann::ordered_json rj{{"disjuncts", entry.at("disjuncts")}};
        Region r = region_from_json(rj, resolve);
        Region fixed = Region::empty(param_scope);
        for (const auto& d : r.disjuncts) region_add(fixed, rescope(d, param_scope));
        tables.V[l][n - 1] = std::move(fixed);
    }
    tables.kmp_np.assign(a.locations.size(), tables.n_max);
    for (const auto& [name, value] : j.at("kmp_np").items())
        tables.kmp_np[a.location_id(name)] = value.get<std::uint32_t>();
    for (const auto& [name, value] : j.at("qs").items())
        tables.qs[name] = value.get<std::uint32_t>();
    return tables;
}

}  // namespace ptpm
