#pragma once

#include "ptpm/pta.hpp"
#include "ptpm/timed_word.hpp"

namespace ptpm {

// Exact membership w in L(ta) for a parameter-free automaton. Delays are
// fixed by the timestamps, so this is a forward simulation over
// (location, per-clock reset time) states. Unobservable edges of derived
// automata may fire between events at symbolically constrained times.
// Serves as the independent oracle for the symbolic matchers.
bool accepts(const Pta& ta, const TimedWord& w);

}  // namespace ptpm
