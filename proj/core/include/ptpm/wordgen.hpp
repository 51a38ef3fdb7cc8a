#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptpm/timed_word.hpp"

namespace ptpm {

// Deterministic synthetic-log generator: same spec, same word. Gaps are
// uniform on a 1/100 grid in [gap_min, gap_max].
struct WordGenSpec {
    std::vector<std::string> alphabet;
    std::size_t length = 0;
    Rat gap_min = rat_from_parts(1, 100);
    Rat gap_max = Rat(1);
    std::uint64_t seed = 0;
};

TimedWord generate_word(const WordGenSpec& spec);

}  // namespace ptpm
