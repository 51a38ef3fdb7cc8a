#include "ptpm/wordgen.hpp"

#include <random>
#include <stdexcept>

namespace ptpm {

TimedWord generate_word(const WordGenSpec& spec) {
    if (spec.alphabet.empty() && spec.length > 0)
        throw std::invalid_argument("word generator needs a nonempty alphabet");
    if (spec.gap_min <= 0 || spec.gap_max < spec.gap_min)
        throw std::invalid_argument("word generator needs 0 < gap_min <= gap_max");
    // mt19937_64 output is pinned by the standard; distributions are not, so
    // gaps are drawn on an explicit rational grid.
    std::mt19937_64 rng(spec.seed);
    Rat grid = rat_from_parts(1, 100);
    Rat ratio = (spec.gap_max - spec.gap_min) / grid;
    Int whole = ratio.get_num() / ratio.get_den();
    std::uint64_t steps = whole.fits_ulong_p() ? whole.get_ui() : 0;

    TimedWord w;
    w.reserve(spec.length);
    Rat now(0);
    for (std::size_t i = 0; i < spec.length; ++i) {
        const std::string& action = spec.alphabet[rng() % spec.alphabet.size()];
        Rat gap = spec.gap_min;
        if (steps > 0) gap += grid * Rat(static_cast<unsigned long>(rng() % (steps + 1)));
        now += gap;
        w.push_back({action, now});
    }
    return w;
}

}  // namespace ptpm
