#include "ptpm/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace ptpm {

VarNamer default_namer() {
    return [](Var v) { return default_var_name(v); };
}

namespace {

struct DisplayRow {
    std::vector<Rat> coeffs;
    Rat rhs;
    const char* rel;
};

DisplayRow display_form(const LinIneq& row) {
    DisplayRow d;
    d.coeffs = row.coeffs;
    d.rhs = row.rhs;
    bool flip = false;
    for (const auto& c : d.coeffs) {
        if (c == 0) continue;
        flip = c < 0;
        break;
    }
    if (flip) {
        for (auto& c : d.coeffs) c = -c;
        d.rhs = -d.rhs;
    }
    switch (row.rel) {
        case Rel::Eq: d.rel = "="; break;
        case Rel::Le: d.rel = flip ? ">=" : "<="; break;
        case Rel::Lt: d.rel = flip ? ">" : "<"; break;
    }
    return d;
}

}  // namespace

std::string inequality_to_text(const LinIneq& row, const Scope& scope, const VarNamer& n) {
    DisplayRow d = display_form(row);
    // Terms print in display-name order.
    std::vector<std::pair<std::string, const Rat*>> terms;
    for (std::size_t i = 0; i < scope.size(); ++i)
        if (d.coeffs[i] != 0) terms.emplace_back(n(scope[i]), &d.coeffs[i]);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, coeff] : terms) {
        if (!first) out << " + ";
        out << rat_to_string(*coeff) << "*" << name;
        first = false;
    }
    if (first) out << "0";
    out << " " << d.rel << " " << rat_to_string(d.rhs);
    return out.str();
}

std::string polyhedron_to_text(const Polyhedron& p, const VarNamer& n) {
    if (p.marked_empty()) return "false";
    if (p.rows().empty()) return "true";
    std::ostringstream out;
    bool first = true;
    for (const auto& row : p.rows()) {
        if (!first) out << "\n";
        out << inequality_to_text(row, p.scope(), n);
        first = false;
    }
    return out.str();
}

std::string region_to_text(const Region& r, const VarNamer& n) {
    if (r.disjuncts.empty()) return "";
    std::ostringstream out;
    bool first = true;
    for (const auto& d : r.disjuncts) {
        if (!first) out << "\n";
        out << polyhedron_to_text(d, n) << "\n";
        first = false;
    }
    return out.str();
}

namespace {

Json coeff_to_json(const Rat& c) {
    // Normalized rows have integer coefficients.
    if (c.get_num().fits_slong_p()) return static_cast<std::int64_t>(c.get_num().get_si());
    return c.get_num().get_str();
}

const char* rel_name(Rel rel) {
    switch (rel) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
    }
    return "?";
}

Rel rel_from_name(const std::string& s) {
    if (s == "<") return Rel::Lt;
    if (s == "<=") return Rel::Le;
    if (s == "=") return Rel::Eq;
    throw std::invalid_argument("unknown relation in JSON region: " + s);
}

}  // namespace

Json polyhedron_to_json(const Polyhedron& p, const VarNamer& n) {
    Json rows = Json::array();
    for (const auto& row : p.rows()) {
        Json coeffs = Json::object();
        for (std::size_t i = 0; i < p.scope().size(); ++i)
            if (row.coeffs[i] != 0) coeffs[n(p.scope()[i])] = coeff_to_json(row.coeffs[i]);
        rows.push_back(Json{{"coeffs", std::move(coeffs)},
                            {"rel", rel_name(row.rel)},
                            {"rhs", rat_to_fraction(row.rhs)}});
    }
    return Json{{"inequalities", std::move(rows)}};
}

Json region_to_json(const Region& r, const VarNamer& n, const std::string& pattern_hash) {
    Json disjuncts = Json::array();
    for (const auto& d : r.disjuncts) disjuncts.push_back(polyhedron_to_json(d, n));
    return Json{{"pattern_hash", pattern_hash}, {"disjuncts", std::move(disjuncts)}};
}

Region region_from_json(const Json& j, const VarResolver& resolve) {
    std::vector<std::vector<Constraint>> parsed;
    Scope scope;
    for (const auto& dj : j.at("disjuncts")) {
        std::vector<Constraint> cs;
        for (const auto& rj : dj.at("inequalities")) {
            Constraint c;
            for (const auto& [name, value] : rj.at("coeffs").items()) {
                Var v = resolve(name);
                Rat coeff;
                if (value.is_number_integer())
                    coeff = Rat(static_cast<long>(value.get<std::int64_t>()));
                else
                    coeff = Rat(Int(value.get<std::string>()));
                c.coeffs[v] = coeff;
                if (!scope_contains(scope, v)) scope = scope_union(scope, Scope{v});
            }
            c.rel = rel_from_name(rj.at("rel").get<std::string>());
            auto rhs = parse_rat(rj.at("rhs").get<std::string>());
            if (!rhs) throw std::invalid_argument("bad rhs in JSON region");
            c.rhs = *rhs;
            cs.push_back(std::move(c));
        }
        parsed.push_back(std::move(cs));
    }
    Region out = Region::empty(scope);
    for (const auto& cs : parsed) {
        Polyhedron p(scope);
        p.add_all(cs);
        region_add(out, std::move(p));
    }
    return out;
}

}  // namespace ptpm
