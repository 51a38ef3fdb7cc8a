#include "ptpm/membership.hpp"

#include <optional>
#include <variant>

#include "ptpm/polyhedron.hpp"

namespace ptpm {

namespace {

// An instant in a run: a concrete timestamp or the symbolic time of an
// unobservable step.
using Instant = std::variant<Rat, Var>;

LinExpr instant_expr(const Instant& r) {
    if (std::holds_alternative<Rat>(r)) return expr(std::get<Rat>(r));
    return expr(std::get<Var>(r));
}

struct SimState {
    LocId loc;
    std::vector<Instant> resets;  // per clock: latest reset instant
    Instant last;                 // instant of the latest transition
    Polyhedron constraint;        // over the symbolic step times
};

Constraint atom_constraint(const GuardAtom& atom, const LinExpr& now, const Instant& reset) {
    LinExpr value = now - instant_expr(reset);
    LinExpr bound = expr(atom.constant);
    switch (atom.cmp) {
        case Cmp::Lt: return value < bound;
        case Cmp::Le: return value <= bound;
        case Cmp::Eq: return value == bound;
        case Cmp::Ge: return value >= bound;
        case Cmp::Gt: return value > bound;
    }
    return value <= bound;
}

struct Simulator {
    const Pta& ta;
    std::uint32_t next_aux = 0;

    std::optional<SimState> step(const SimState& s, const Edge& e, const LinExpr& now) {
        Polyhedron c = s.constraint;
        for (const auto& atom : e.guard) {
            if (atom.is_param) throw PtaError("accepts() requires a parameter-free automaton");
            c = conjoin(c, atom_constraint(atom, now, s.resets[atom.clock]));
        }
        if (is_empty(c)) return std::nullopt;
        return SimState{e.dst, s.resets, s.last, std::move(c)};
    }

    // Adds every state reachable by unobservable steps before hi (strictly
    // after each state's latest transition). Bounded by one pass per
    // location so unobservable cycles terminate.
    std::vector<SimState> epsilon_closure(std::vector<SimState> states,
                                          const std::optional<Rat>& hi) {
        if (!ta.has_epsilon_edges()) return states;
        std::vector<SimState> out = states;
        std::vector<SimState> frontier = std::move(states);
        for (std::size_t depth = 0; depth < ta.locations.size() && !frontier.empty(); ++depth) {
            std::vector<SimState> next;
            for (const auto& s : frontier) {
                for (const auto& e : ta.edges) {
                    if (e.src != s.loc || e.action != kUnobservableAction) continue;
                    Var step_time = aux_var(next_aux);
                    LinExpr now = expr(step_time);
                    SimState pre = s;
                    pre.constraint = conjoin(pre.constraint, now > instant_expr(s.last));
                    if (hi) pre.constraint = conjoin(pre.constraint, now < expr(*hi));
                    auto stepped = step(pre, e, now);
                    if (!stepped) continue;
                    ++next_aux;
                    for (ClockId r : e.resets) stepped->resets[r] = step_time;
                    stepped->last = step_time;
                    next.push_back(std::move(*stepped));
                }
            }
            for (const auto& s : next) out.push_back(s);
            frontier = std::move(next);
        }
        return out;
    }
};

}  // namespace

bool accepts(const Pta& ta, const TimedWord& w) {
    if (!ta.params.empty()) throw PtaError("accepts() requires a parameter-free automaton");

    Simulator sim{ta};
    SimState init{ta.initial, std::vector<Instant>(ta.clocks.size(), Instant{Rat(0)}),
                  Instant{Rat(0)}, Polyhedron::universe({})};
    std::vector<SimState> states{init};
    for (const auto& event : w) {
        states = sim.epsilon_closure(std::move(states), event.time);
        std::vector<SimState> next;
        for (const auto& s : states) {
            for (const auto& e : ta.edges) {
                if (e.src != s.loc || e.action != event.action) continue;
                auto stepped = sim.step(s, e, expr(event.time));
                if (!stepped) continue;
                for (ClockId r : e.resets) stepped->resets[r] = event.time;
                stepped->last = event.time;
                next.push_back(std::move(*stepped));
            }
        }
        states = std::move(next);
        if (states.empty()) return false;
    }
    states = sim.epsilon_closure(std::move(states), std::nullopt);
    for (const auto& s : states)
        if (ta.accepting.count(s.loc) && !is_empty(s.constraint)) return true;
    return false;
}

}  // namespace ptpm
