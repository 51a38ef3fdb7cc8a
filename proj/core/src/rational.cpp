#include "ptpm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ptpm {

Rat rat_from_parts(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    std::string int_part, frac_part, den_part;
    bool seen_dot = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot || seen_slash) return std::nullopt;
            seen_dot = true;
        } else if (c == '/') {
            if (seen_slash || seen_dot) return std::nullopt;
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (seen_slash)
                den_part += c;
            else if (seen_dot)
                frac_part += c;
            else
                int_part += c;
        } else {
            return std::nullopt;
        }
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (seen_slash && den_part.empty()) return std::nullopt;

    Int num(int_part.empty() ? "0" : int_part);
    if (seen_dot) {
        Int scale = 1;
        for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
        num = num * scale + Int(frac_part.empty() ? "0" : frac_part);
        Rat r = rat_from_parts(num, scale);
        if (negative) r = -r;
        return r;
    }
    Int den = seen_slash ? Int(den_part) : Int(1);
    if (den == 0) return std::nullopt;
    Rat r = rat_from_parts(num, den);
    if (negative) r = -r;
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_fraction(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ptpm
