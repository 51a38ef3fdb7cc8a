#include "ptpm/timed_word.hpp"

#include <istream>
#include <sstream>

namespace ptpm {

WordReader::WordReader(std::istream& in, bool perturb) : in_(in), perturb_(perturb) {}

std::optional<Event> WordReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string action, stamp, extra;
        if (!(ls >> action)) continue;  // blank line
        if (!(ls >> stamp) || (ls >> extra))
            throw WordError("line " + std::to_string(line_) +
                            ": expected '<action> <timestamp>'");
        if (action == kTerminalAction || action == kUnobservableAction)
            throw WordError("line " + std::to_string(line_) + ": action '" + action +
                            "' is reserved");
        auto tau = parse_rat(stamp);
        if (!tau) throw WordError("line " + std::to_string(line_) + ": bad timestamp '" +
                                  stamp + "'");
        if (*tau <= 0 && !any_)
            throw WordError("line " + std::to_string(line_) +
                            ": timestamps must be strictly positive");
        if (*tau <= prev_emitted_) {
            if (perturb_ && *tau == prev_emitted_) {
                Rat nudged = prev_emitted_ + rat_from_parts(1, Int(1) << 30);
                prev_emitted_ = nudged;
                any_ = true;
                return Event{action, nudged};
            }
            throw WordError("line " + std::to_string(line_) +
                            ": timestamps must strictly increase");
        }
        prev_emitted_ = *tau;
        any_ = true;
        return Event{action, *tau};
    }
    return std::nullopt;
}

TimedWord parse_word(std::istream& in, bool perturb) {
    WordReader reader(in, perturb);
    TimedWord w;
    while (auto e = reader.next()) w.push_back(std::move(*e));
    return w;
}

TimedWord parse_word_text(const std::string& text, bool perturb) {
    std::istringstream in(text);
    return parse_word(in, perturb);
}

std::string serialize_word(const TimedWord& w) {
    std::ostringstream out;
    for (const auto& e : w) out << e.action << " " << rat_to_string(e.time) << "\n";
    return out.str();
}

TimedWord segment(const TimedWord& w, const Rat& t, const Rat& t_prime) {
    if (t < 0 || t >= t_prime)
        throw std::invalid_argument("segment requires 0 <= t < t'");
    TimedWord out;
    for (const auto& e : w) {
        if (e.time > t && e.time < t_prime) out.push_back({e.action, e.time - t});
    }
    out.push_back({kTerminalAction, t_prime - t});
    return out;
}

TimedWord shift(const TimedWord& w, const Rat& offset) {
    TimedWord out = w;
    for (auto& e : out) e.time += offset;
    return out;
}

}  // namespace ptpm
