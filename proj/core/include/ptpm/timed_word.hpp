#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptpm/rational.hpp"

namespace ptpm {

inline const std::string kTerminalAction = "$";
inline const std::string kUnobservableAction = "ε";  // ε, derived automata only

struct Event {
    std::string action;
    Rat time;

    friend bool operator==(const Event&, const Event&) = default;
};

using TimedWord = std::vector<Event>;

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Streaming reader for "<action> <decimal-timestamp>" lines; '#' starts a
// comment. Validates positivity and strict monotonicity online. With perturb
// enabled, an event whose timestamp collides with its predecessor is nudged
// forward by 2^-30 instead of rejected (never silently: off by default).
class WordReader {
public:
    explicit WordReader(std::istream& in, bool perturb = false);

    // Next event, or nullopt at end of input. Throws WordError on bad input.
    std::optional<Event> next();

    std::size_t line_number() const { return line_; }

private:
    std::istream& in_;
    bool perturb_;
    std::size_t line_ = 0;
    Rat prev_emitted_{0};
    bool any_ = false;
};

TimedWord parse_word(std::istream& in, bool perturb = false);
TimedWord parse_word_text(const std::string& text, bool perturb = false);
std::string serialize_word(const TimedWord& w);

// The log segment strictly inside (t, t'), shifted to start at 0 and closed
// by the terminal event at t' - t. Requires 0 <= t < t'.
TimedWord segment(const TimedWord& w, const Rat& t, const Rat& t_prime);

// Uniform timestamp shift of every event.
TimedWord shift(const TimedWord& w, const Rat& offset);

}  // namespace ptpm
