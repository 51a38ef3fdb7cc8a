#include "ptpm/pta.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>

namespace ptpm {

const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Eq: return "=";
        case Cmp::Ge: return ">=";
        case Cmp::Gt: return ">";
    }
    return "?";
}

namespace {

std::optional<Cmp> cmp_from_name(const std::string& s) {
    if (s == "<") return Cmp::Lt;
    if (s == "<=") return Cmp::Le;
    if (s == "=" || s == "==") return Cmp::Eq;
    if (s == ">=") return Cmp::Ge;
    if (s == ">") return Cmp::Gt;
    return std::nullopt;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return names.size();
}

}  // namespace

LocId Pta::location_id(const std::string& name) const {
    std::size_t i = index_of(locations, name);
    if (i == locations.size()) throw PtaError("unknown location '" + name + "'");
    return static_cast<LocId>(i);
}

std::optional<ClockId> Pta::clock_id(const std::string& name) const {
    std::size_t i = index_of(clocks, name);
    if (i == clocks.size()) return std::nullopt;
    return static_cast<ClockId>(i);
}

std::optional<ParamId> Pta::param_id(const std::string& name) const {
    std::size_t i = index_of(params, name);
    if (i == params.size()) return std::nullopt;
    return static_cast<ParamId>(i);
}

bool Pta::has_epsilon_edges() const {
    return std::any_of(edges.begin(), edges.end(),
                       [](const Edge& e) { return e.action == kUnobservableAction; });
}

// --- parsing ----------------------------------------------------------------

namespace {

struct Parser {
    std::vector<std::string> warnings;
    Pta pta;
    bool saw_initial = false;
    std::size_t line_no = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw PtaError("line " + std::to_string(line_no) + ": " + msg);
    }

    static std::vector<std::string> tokens(const std::string& line) {
        std::istringstream in(line);
        std::vector<std::string> out;
        std::string tok;
        while (in >> tok) out.push_back(tok);
        return out;
    }

    void parse_names(const std::vector<std::string>& toks, std::vector<std::string>& into) {
        for (std::size_t i = 1; i < toks.size(); ++i) {
            if (index_of(into, toks[i]) != into.size()) fail("duplicate name '" + toks[i] + "'");
            into.push_back(toks[i]);
        }
    }

    void parse_loc(const std::vector<std::string>& toks) {
        if (toks.size() < 2) fail("expected 'loc <name> [initial] [accepting]'");
        const std::string& name = toks[1];
        if (index_of(pta.locations, name) != pta.locations.size())
            fail("duplicate location '" + name + "'");
        pta.locations.push_back(name);
        LocId id = static_cast<LocId>(pta.locations.size() - 1);
        for (std::size_t i = 2; i < toks.size(); ++i) {
            if (toks[i] == "initial") {
                if (saw_initial) fail("multiple initial locations");
                saw_initial = true;
                pta.initial = id;
            } else if (toks[i] == "accepting") {
                pta.accepting.insert(id);
            } else {
                fail("unknown location attribute '" + toks[i] + "'");
            }
        }
    }

    GuardAtom parse_atom(const std::string& lhs, const std::string& op, const std::string& rhs) {
        GuardAtom atom;
        auto clock = pta.clock_id(lhs);
        if (!clock) fail("guard left side must be a clock, got '" + lhs + "'");
        atom.clock = *clock;
        auto cmp = cmp_from_name(op);
        if (!cmp) fail("unknown comparison '" + op + "'");
        atom.cmp = *cmp;
        if (auto param = pta.param_id(rhs)) {
            atom.is_param = true;
            atom.param = *param;
        } else if (auto value = parse_rat(rhs)) {
            if (*value < 0) fail("guard constants must be nonnegative");
            atom.is_param = false;
            atom.constant = *value;
        } else {
            fail("guard right side must be a parameter or constant, got '" + rhs + "'");
        }
        return atom;
    }

    void parse_edge(const std::vector<std::string>& toks) {
        // edge <src> -> <dst> on <action> [when atom (& atom)*] [reset x,y]
        if (toks.size() < 6 || toks[2] != "->" || toks[4] != "on")
            fail("expected 'edge <src> -> <dst> on <action> ...'");
        Edge e;
        e.src = lookup_loc(toks[1]);
        e.dst = lookup_loc(toks[3]);
        e.action = toks[5];
        if (e.action == kUnobservableAction)
            fail("the unobservable action is reserved for derived automata");
        std::size_t i = 6;
        if (i < toks.size() && toks[i] == "when") {
            ++i;
            while (true) {
                if (i + 3 > toks.size()) fail("incomplete guard atom");
                e.guard.push_back(parse_atom(toks[i], toks[i + 1], toks[i + 2]));
                i += 3;
                if (i < toks.size() && toks[i] == "&") {
                    ++i;
                    continue;
                }
                break;
            }
        }
        if (i < toks.size() && toks[i] == "reset") {
            ++i;
            if (i >= toks.size()) fail("reset needs at least one clock");
            std::string list = toks[i++];
            std::istringstream rl(list);
            std::string name;
            while (std::getline(rl, name, ',')) {
                auto c = pta.clock_id(name);
                if (!c) fail("unknown clock in reset: '" + name + "'");
                e.resets.push_back(*c);
            }
            std::sort(e.resets.begin(), e.resets.end());
            e.resets.erase(std::unique(e.resets.begin(), e.resets.end()), e.resets.end());
        }
        if (i < toks.size()) fail("trailing tokens after edge definition");
        if (e.action != kTerminalAction &&
            index_of(pta.alphabet, e.action) == pta.alphabet.size())
            pta.alphabet.push_back(e.action);
        pta.edges.push_back(std::move(e));
    }

    LocId lookup_loc(const std::string& name) {
        std::size_t i = index_of(pta.locations, name);
        if (i == pta.locations.size()) fail("unknown location '" + name + "'");
        return static_cast<LocId>(i);
    }

    Pta run(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto toks = tokens(line);
            if (toks.empty()) continue;
            if (toks[0] == "clocks:")
                parse_names(toks, pta.clocks);
            else if (toks[0] == "params:")
                parse_names(toks, pta.params);
            else if (toks[0] == "loc")
                parse_loc(toks);
            else if (toks[0] == "edge")
                parse_edge(toks);
            else
                fail("unknown directive '" + toks[0] + "'");
        }
        if (pta.locations.empty()) throw PtaError("pattern has no locations");
        if (!saw_initial) throw PtaError("pattern has no initial location");
        std::sort(pta.alphabet.begin(), pta.alphabet.end());
        return pta;
    }
};

}  // namespace

Pta parse_pta(std::istream& in) {
    Parser parser;
    Pta a = parser.run(in);
    validate_pattern(a);
    return a;
}

Pta parse_pta_text(const std::string& text) {
    std::istringstream in(text);
    return parse_pta(in);
}

std::string pta_to_text(const Pta& a) {
    std::ostringstream out;
    if (!a.clocks.empty()) {
        out << "clocks:";
        for (const auto& c : a.clocks) out << " " << c;
        out << "\n";
    }
    if (!a.params.empty()) {
        out << "params:";
        for (const auto& p : a.params) out << " " << p;
        out << "\n";
    }
    for (LocId id = 0; id < a.locations.size(); ++id) {
        out << "loc " << a.locations[id];
        if (id == a.initial) out << " initial";
        if (a.accepting.count(id)) out << " accepting";
        out << "\n";
    }
    for (const auto& e : a.edges) {
        out << "edge " << a.locations[e.src] << " -> " << a.locations[e.dst] << " on "
            << e.action;
        if (!e.guard.empty()) {
            out << " when ";
            for (std::size_t i = 0; i < e.guard.size(); ++i) {
                const auto& atom = e.guard[i];
                if (i > 0) out << " & ";
                out << a.clocks[atom.clock] << " " << cmp_name(atom.cmp) << " ";
                if (atom.is_param)
                    out << a.params[atom.param];
                else
                    out << rat_to_string(atom.constant);
            }
        }
        if (!e.resets.empty()) {
            out << " reset ";
            for (std::size_t i = 0; i < e.resets.size(); ++i) {
                if (i > 0) out << ",";
                out << a.clocks[e.resets[i]];
            }
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::string> validate_pattern(const Pta& a) {
    std::vector<std::string> warnings;
    for (const auto& e : a.edges) {
        bool into_accepting = a.accepting.count(e.dst) > 0;
        if (e.action == kTerminalAction && !into_accepting)
            throw PtaError("$-edge from '" + a.locations[e.src] +
                           "' does not target an accepting location");
        if (e.action != kTerminalAction && into_accepting)
            throw PtaError("non-$ edge into accepting location '" + a.locations[e.dst] + "'");
    }
    // Untimed reachability of the accepting set.
    std::vector<bool> seen(a.locations.size(), false);
    std::deque<LocId> queue{a.initial};
    seen[a.initial] = true;
    while (!queue.empty()) {
        LocId l = queue.front();
        queue.pop_front();
        for (const auto& e : a.edges) {
            if (e.src == l && !seen[e.dst]) {
                seen[e.dst] = true;
                queue.push_back(e.dst);
            }
        }
    }
    for (LocId f : a.accepting)
        if (!seen[f])
            warnings.push_back("accepting location '" + a.locations[f] +
                               "' is unreachable in the untimed graph");
    return warnings;
}

// --- JSON -------------------------------------------------------------------

nlohmann::ordered_json pta_to_json(const Pta& a) {
    using Json = nlohmann::ordered_json;
    Json locs = Json::array();
    for (LocId id = 0; id < a.locations.size(); ++id)
        locs.push_back(Json{{"name", a.locations[id]},
                            {"initial", id == a.initial},
                            {"accepting", a.accepting.count(id) > 0}});
    Json edges = Json::array();
    for (const auto& e : a.edges) {
        Json guard = Json::array();
        for (const auto& atom : e.guard) {
            Json g{{"clock", a.clocks[atom.clock]}, {"cmp", cmp_name(atom.cmp)}};
            if (atom.is_param)
                g["param"] = a.params[atom.param];
            else
                g["constant"] = rat_to_string(atom.constant);
            guard.push_back(std::move(g));
        }
        Json resets = Json::array();
        for (ClockId c : e.resets) resets.push_back(a.clocks[c]);
        edges.push_back(Json{{"from", a.locations[e.src]},
                             {"to", a.locations[e.dst]},
                             {"action", e.action},
                             {"guard", std::move(guard)},
                             {"resets", std::move(resets)}});
    }
    return Json{{"clocks", a.clocks},   {"params", a.params}, {"alphabet", a.alphabet},
                {"locations", locs},    {"edges", edges}};
}

Pta pta_from_json(const nlohmann::ordered_json& j) {
    Pta a;
    a.clocks = j.at("clocks").get<std::vector<std::string>>();
    a.params = j.at("params").get<std::vector<std::string>>();
    bool saw_initial = false;
    for (const auto& lj : j.at("locations")) {
        a.locations.push_back(lj.at("name").get<std::string>());
        LocId id = static_cast<LocId>(a.locations.size() - 1);
        if (lj.value("initial", false)) {
            if (saw_initial) throw PtaError("multiple initial locations in JSON pattern");
            a.initial = id;
            saw_initial = true;
        }
        if (lj.value("accepting", false)) a.accepting.insert(id);
    }
    if (!saw_initial) throw PtaError("JSON pattern has no initial location");
    for (const auto& ej : j.at("edges")) {
        Edge e;
        e.src = a.location_id(ej.at("from").get<std::string>());
        e.dst = a.location_id(ej.at("to").get<std::string>());
        e.action = ej.at("action").get<std::string>();
        for (const auto& gj : ej.value("guard", nlohmann::ordered_json::array())) {
            GuardAtom atom;
            auto clock = a.clock_id(gj.at("clock").get<std::string>());
            if (!clock) throw PtaError("unknown clock in JSON guard");
            atom.clock = *clock;
            auto cmp = cmp_from_name(gj.at("cmp").get<std::string>());
            if (!cmp) throw PtaError("unknown comparison in JSON guard");
            atom.cmp = *cmp;
            if (gj.contains("param")) {
                auto p = a.param_id(gj.at("param").get<std::string>());
                if (!p) throw PtaError("unknown parameter in JSON guard");
                atom.is_param = true;
                atom.param = *p;
            } else {
                auto v = parse_rat(gj.at("constant").get<std::string>());
                if (!v) throw PtaError("bad constant in JSON guard");
                atom.constant = *v;
            }
            e.guard.push_back(std::move(atom));
        }
        for (const auto& rj : ej.value("resets", nlohmann::ordered_json::array())) {
            auto c = a.clock_id(rj.get<std::string>());
            if (!c) throw PtaError("unknown clock in JSON resets");
            e.resets.push_back(*c);
        }
        std::sort(e.resets.begin(), e.resets.end());
        if (e.action != kTerminalAction &&
            e.action != kUnobservableAction &&
            index_of(a.alphabet, e.action) == a.alphabet.size())
            a.alphabet.push_back(e.action);
        a.edges.push_back(std::move(e));
    }
    if (j.contains("alphabet"))
        for (const auto& s : j.at("alphabet")) {
            std::string name = s.get<std::string>();
            if (index_of(a.alphabet, name) == a.alphabet.size()) a.alphabet.push_back(name);
        }
    std::sort(a.alphabet.begin(), a.alphabet.end());
    validate_pattern(a);
    return a;
}

// --- operations -------------------------------------------------------------

Pta valuate(const Pta& a, const ParamValuation& v) {
    for (const auto& p : a.params) {
        auto it = v.find(p);
        if (it == v.end()) throw PtaError("valuation misses parameter '" + p + "'");
        if (it->second < 0) throw PtaError("parameter valuations must be nonnegative");
    }
    Pta out = a;
    out.params.clear();
    for (auto& e : out.edges) {
        for (auto& atom : e.guard) {
            if (atom.is_param) {
                atom.is_param = false;
                atom.constant = v.at(a.params[atom.param]);
                atom.param = 0;
            }
        }
    }
    return out;
}

Pta restrict_accepting(const Pta& a, LocId loc) {
    if (loc >= a.locations.size()) throw PtaError("restrict_accepting: bad location");
    Pta out = a;
    out.accepting = {loc};
    return out;
}

namespace {

std::string fresh_location_name(const std::vector<std::string>& existing, std::string base) {
    while (index_of(existing, base) != existing.size()) base += "'";
    return base;
}

}  // namespace

Pta suffix_closure(const Pta& a, LocId loc) {
    if (loc >= a.locations.size()) throw PtaError("suffix_closure: bad location");
    Pta out = a;
    out.locations.push_back(fresh_location_name(out.locations, "fin"));
    LocId fin = static_cast<LocId>(out.locations.size() - 1);
    out.accepting = {loc, fin};
    for (const auto& action : a.alphabet) {
        out.edges.push_back(Edge{loc, {}, action, {}, fin});
        out.edges.push_back(Edge{fin, {}, action, {}, fin});
    }
    return out;
}

Pta prefix_shift(const Pta& a, std::uint32_t n) {
    if (n == 0) throw PtaError("prefix_shift requires n >= 1");
    Pta out = a;
    // Chain locations c1..c(n+1); the run starts at c(n+1) and consumes n
    // arbitrary events down to c1, then takes the unobservable clock-reset
    // step into the original initial location.
    std::vector<LocId> chain(n + 1);
    for (std::uint32_t i = 1; i <= n + 1; ++i) {
        out.locations.push_back(fresh_location_name(out.locations, "c" + std::to_string(i)));
        chain[i - 1] = static_cast<LocId>(out.locations.size() - 1);
    }
    out.locations.push_back(fresh_location_name(out.locations, "fin"));
    LocId fin = static_cast<LocId>(out.locations.size() - 1);
    out.initial = chain[n];

    out.accepting.clear();
    for (const auto& e : a.edges)
        if (a.accepting.count(e.dst)) out.accepting.insert(e.src);
    out.accepting.insert(fin);

    std::vector<ClockId> all_clocks(a.clocks.size());
    for (ClockId c = 0; c < a.clocks.size(); ++c) all_clocks[c] = c;

    for (const auto& action : a.alphabet) {
        for (std::uint32_t i = 1; i <= n; ++i)
            out.edges.push_back(Edge{chain[i], {}, action, {}, chain[i - 1]});
        for (LocId f : out.accepting)
            if (f != fin) out.edges.push_back(Edge{f, {}, action, {}, fin});
        out.edges.push_back(Edge{fin, {}, action, {}, fin});
    }
    out.edges.push_back(Edge{chain[0], {}, kUnobservableAction, all_clocks, a.initial});
    return out;
}

Pta rename_apart(const Pta& a, const std::string& suffix) {
    Pta out = a;
    for (auto& c : out.clocks) c += suffix;
    for (auto& p : out.params) p += suffix;
    return out;
}

// --- synchronized product ---------------------------------------------------

std::vector<LocId> ProductPta::components_of(LocId product_loc) const {
    std::vector<LocId> out(map.loc_radix.size());
    std::size_t rest = product_loc;
    for (std::size_t i = map.loc_radix.size(); i-- > 0;) {
        out[i] = static_cast<LocId>(rest % map.loc_radix[i]);
        rest /= map.loc_radix[i];
    }
    return out;
}

LocId ProductPta::product_of(std::span<const LocId> component_locs) const {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < map.loc_radix.size(); ++i)
        acc = acc * map.loc_radix[i] + component_locs[i];
    return static_cast<LocId>(acc);
}

ProductPta synchronized_product(std::span<const Pta> components) {
    if (components.empty()) throw PtaError("product of zero automata");
    ProductPta prod;
    Pta& out = prod.pta;

    for (const auto& comp : components) {
        prod.map.clock_base.push_back(static_cast<ClockId>(out.clocks.size()));
        prod.map.param_base.push_back(static_cast<ParamId>(out.params.size()));
        prod.map.loc_radix.push_back(comp.locations.size());
        for (const auto& c : comp.clocks) {
            if (index_of(out.clocks, c) != out.clocks.size())
                throw PtaError("product components share clock name '" + c + "'");
            out.clocks.push_back(c);
        }
        for (const auto& p : comp.params) {
            if (index_of(out.params, p) != out.params.size())
                throw PtaError("product components share parameter name '" + p + "'");
            out.params.push_back(p);
        }
        for (const auto& action : comp.alphabet)
            if (index_of(out.alphabet, action) == out.alphabet.size())
                out.alphabet.push_back(action);
    }
    std::sort(out.alphabet.begin(), out.alphabet.end());

    std::size_t total = 1;
    for (const auto& comp : components) total *= comp.locations.size();
    out.locations.reserve(total);
    for (std::size_t id = 0; id < total; ++id) {
        std::size_t rest = id;
        std::vector<std::string> parts(components.size());
        for (std::size_t i = components.size(); i-- > 0;) {
            parts[i] = components[i].locations[rest % components[i].locations.size()];
            rest /= components[i].locations.size();
        }
        std::string name = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) name += "|" + parts[i];
        out.locations.push_back(std::move(name));
        LocId loc = static_cast<LocId>(out.locations.size() - 1);
        auto comps = prod.components_of(loc);
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].accepting.count(comps[i])) {
                out.accepting.insert(loc);
                break;
            }
    }
    {
        std::vector<LocId> init(components.size());
        for (std::size_t i = 0; i < components.size(); ++i) init[i] = components[i].initial;
        out.initial = prod.product_of(init);
    }

    // Which components synchronize on which action: every component whose
    // edge set mentions the action (the alphabet covers the observable ones,
    // $ joins when shared); the unobservable action is always local.
    auto participants = [&](const std::string& action) {
        std::vector<std::size_t> out_idx;
        for (std::size_t i = 0; i < components.size(); ++i) {
            bool mentions =
                index_of(components[i].alphabet, action) != components[i].alphabet.size();
            if (!mentions)
                for (const auto& e : components[i].edges)
                    if (e.action == action) mentions = true;
            if (mentions) out_idx.push_back(i);
        }
        return out_idx;
    };

    std::vector<std::string> sync_actions = out.alphabet;
    {
        bool any_terminal = false;
        for (const auto& comp : components)
            for (const auto& e : comp.edges)
                if (e.action == kTerminalAction) any_terminal = true;
        if (any_terminal) sync_actions.push_back(kTerminalAction);
    }

    // Per-component edge lists indexed by (source location, action).
    auto edges_on = [&](std::size_t i, LocId src, const std::string& action) {
        std::vector<const Edge*> found;
        for (const auto& e : components[i].edges)
            if (e.src == src && e.action == action) found.push_back(&e);
        return found;
    };

    auto remap_guard = [&](std::size_t i, const Guard& g) {
        Guard out_g = g;
        for (auto& atom : out_g) {
            atom.clock += prod.map.clock_base[i];
            if (atom.is_param) atom.param += prod.map.param_base[i];
        }
        return out_g;
    };
    auto remap_resets = [&](std::size_t i, const std::vector<ClockId>& rs) {
        std::vector<ClockId> out_r = rs;
        for (auto& c : out_r) c += prod.map.clock_base[i];
        return out_r;
    };

    for (LocId loc = 0; loc < out.locations.size(); ++loc) {
        auto comps = prod.components_of(loc);
        for (const auto& action : sync_actions) {
            auto part = participants(action);
            if (part.empty()) continue;
            std::vector<std::vector<const Edge*>> options;
            bool blocked = false;
            for (std::size_t i : part) {
                auto found = edges_on(i, comps[i], action);
                if (found.empty()) {
                    blocked = true;
                    break;
                }
                options.push_back(std::move(found));
            }
            if (blocked) continue;
            std::vector<std::size_t> pick(options.size(), 0);
            while (true) {
                Edge edge;
                edge.src = loc;
                edge.action = action;
                std::vector<LocId> next = comps;
                for (std::size_t k = 0; k < part.size(); ++k) {
                    const Edge* ce = options[k][pick[k]];
                    std::size_t i = part[k];
                    Guard g = remap_guard(i, ce->guard);
                    edge.guard.insert(edge.guard.end(), g.begin(), g.end());
                    auto rs = remap_resets(i, ce->resets);
                    edge.resets.insert(edge.resets.end(), rs.begin(), rs.end());
                    next[i] = ce->dst;
                }
                std::sort(edge.resets.begin(), edge.resets.end());
                edge.dst = prod.product_of(next);
                out.edges.push_back(std::move(edge));
                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
                if (k == pick.size()) break;
            }
        }
        // Unobservable edges stay local to their component.
        for (std::size_t i = 0; i < components.size(); ++i) {
            for (const Edge* ce : edges_on(i, comps[i], kUnobservableAction)) {
                Edge edge;
                edge.src = loc;
                edge.action = kUnobservableAction;
                edge.guard = remap_guard(i, ce->guard);
                edge.resets = remap_resets(i, ce->resets);
                std::vector<LocId> next = comps;
                next[i] = ce->dst;
                edge.dst = prod.product_of(next);
                out.edges.push_back(std::move(edge));
            }
        }
    }
    return prod;
}

std::optional<std::uint32_t> shortest_untimed_accepting(const Pta& a) {
    // BFS over non-$ edges; the final $-edge into the accepting set does not
    // count, so we measure distances to the $-edge sources.
    std::set<LocId> pre = pre_accepting(a);
    std::vector<std::int64_t> dist(a.locations.size(), -1);
    std::deque<LocId> queue{a.initial};
    dist[a.initial] = 0;
    std::optional<std::uint32_t> best;
    auto consider = [&](LocId l) {
        if (pre.count(l)) {
            auto d = static_cast<std::uint32_t>(dist[l]);
            if (!best || d < *best) best = d;
        }
    };
    consider(a.initial);
    while (!queue.empty()) {
        LocId l = queue.front();
        queue.pop_front();
        for (const auto& e : a.edges) {
            if (e.src != l || e.action == kTerminalAction) continue;
            if (dist[e.dst] == -1) {
                dist[e.dst] = dist[l] + 1;
                consider(e.dst);
                queue.push_back(e.dst);
            }
        }
    }
    return best;
}

std::set<LocId> pre_accepting(const Pta& a) {
    std::set<LocId> out;
    for (const auto& e : a.edges)
        if (e.action == kTerminalAction && a.accepting.count(e.dst)) out.insert(e.src);
    return out;
}

std::string pattern_hash(const Pta& a) {
    // FNV-1a 64 over the canonical text form.
    std::string text = pta_to_text(a);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << "0123456789abcdef"[(h >> (i * 4)) & 0xf];
    return out.str();
}

}  // namespace ptpm
