#include "ptpm/builtins.hpp"

#include <stdexcept>

namespace ptpm {

namespace {

const char* kGear = R"(clocks: x
params: p
loc l0 initial
loc l1
loc l2
loc acc accepting
edge l0 -> l1 on g1 reset x
edge l1 -> l2 on g2 when x < p
edge l2 -> acc on $
)";

const char* kAccel = R"(clocks: x
params: p
loc s000 initial
loc s100
loc s200
loc s300
loc s400
loc s001
loc s101
loc s201
loc s301
loc s401
loc acc accepting
edge s000 -> s100 on g1
edge s100 -> s200 on g2
edge s200 -> s300 on g3
edge s300 -> s400 on g4 when x <= p reset x
edge s000 -> s001 on rpmHigh
edge s001 -> s101 on g1
edge s101 -> s201 on g2
edge s201 -> s301 on g3
edge s301 -> s401 on g4 when x <= p reset x
edge s100 -> s101 on rpmHigh
edge s200 -> s201 on rpmHigh
edge s300 -> s301 on rpmHigh
edge s400 -> s401 on rpmHigh
edge s401 -> acc on $ when x > 0
)";

const char* kBlowup = R"(clocks: x y
params: p1 p2 p3
loc l1 initial
loc l2
loc l3
loc l4 accepting
edge l1 -> l2 on a reset y
edge l2 -> l3 on b when x < p1
edge l3 -> l2 on a when y >= p3 & y < p2 reset y
edge l3 -> l4 on $ when x = p1
)";

const char* kOnlyTiming = R"(clocks: x
params: p
loc l1 initial
loc l2
loc l3
loc l4
loc l5 accepting
edge l1 -> l2 on a reset x
edge l2 -> l3 on a when x > 1 reset x
edge l3 -> l4 on a when x < p
edge l4 -> l5 on $
)";

}  // namespace

std::vector<std::string> builtin_pattern_names() {
    return {"gear",   "gear-np",   "accel",      "accel-np",
            "blowup", "blowup-np", "onlytiming", "onlytiming-np"};
}

Pta builtin_pattern(const std::string& name) {
    if (name == "gear") return parse_pta_text(kGear);
    if (name == "accel") return parse_pta_text(kAccel);
    if (name == "blowup") return parse_pta_text(kBlowup);
    if (name == "onlytiming") return parse_pta_text(kOnlyTiming);
    if (name == "gear-np") return valuate(parse_pta_text(kGear), {{"p", Rat(2)}});
    if (name == "accel-np") return valuate(parse_pta_text(kAccel), {{"p", Rat(3)}});
    if (name == "blowup-np")
        return valuate(parse_pta_text(kBlowup),
                       {{"p1", Rat(10)}, {"p2", Rat(2)}, {"p3", Rat(1)}});
    if (name == "onlytiming-np") return valuate(parse_pta_text(kOnlyTiming), {{"p", Rat(1)}});
    throw std::invalid_argument("unknown builtin pattern '" + name + "'");
}

}  // namespace ptpm
