#include "ptpm/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>

namespace ptpm {

namespace {

// --- row-level helpers ----------------------------------------------------

// 0 rel rhs
bool trivial_row_holds(Rel rel, const Rat& rhs) {
    switch (rel) {
        case Rel::Lt: return 0 < rhs;
        case Rel::Le: return 0 <= rhs;
        case Rel::Eq: return rhs == 0;
    }
    return false;
}

// Scales coefficients to coprime integers (positive scale factor only) and
// gives equality rows a positive leading coefficient. Returns false for an
// all-zero row (caller decides from trivial_row_holds).
bool normalize_row(LinIneq& row) {
    Int denom_lcm = 1;
    bool nonzero = false;
    for (const auto& c : row.coeffs) {
        if (c == 0) continue;
        nonzero = true;
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (!nonzero) return false;
    Int gcd = 0;
    for (const auto& c : row.coeffs) {
        if (c == 0) continue;
        Int scaled = c.get_num() * (denom_lcm / c.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale = rat_from_parts(denom_lcm, gcd);
    if (scale != 1) {
        for (auto& c : row.coeffs) c *= scale;
        row.rhs *= scale;
    }
    if (row.rel == Rel::Eq) {
        for (const auto& c : row.coeffs) {
            if (c == 0) continue;
            if (c < 0) {
                for (auto& cc : row.coeffs) cc = -cc;
                row.rhs = -row.rhs;
            }
            break;
        }
    }
    return true;
}

int compare_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

int compare_coeffs(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    assert(a.size() == b.size());
    // Rows mentioning earlier variables sort first.
    std::size_t fa = a.size(), fb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) { fa = i; break; }
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) { fb = i; break; }
    if (fa != fb) return fa < fb ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare_rat(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

// Display rank after sign normalization: =, >=, >, <=, <.
int display_rank(const LinIneq& row) {
    bool flip = false;
    for (const auto& c : row.coeffs) {
        if (c == 0) continue;
        flip = c < 0;
        break;
    }
    switch (row.rel) {
        case Rel::Eq: return 0;
        case Rel::Le: return flip ? 1 : 3;
        case Rel::Lt: return flip ? 2 : 4;
    }
    return 5;
}

// Ordering on the internal signed rows; groups identical vectors together
// for the dominance passes.
bool row_internal_less(const LinIneq& a, const LinIneq& b) {
    int c = compare_coeffs(a.coeffs, b.coeffs);
    if (c != 0) return c < 0;
    if (a.rel != b.rel) return static_cast<int>(a.rel) < static_cast<int>(b.rel);
    return compare_rat(a.rhs, b.rhs) < 0;
}

// Canonical display ordering: rows compared by their sign-normalized form
// (leading coefficient positive), lower bounds before upper bounds.
bool row_display_less(const LinIneq& a, const LinIneq& b) {
    auto flipped = [](const LinIneq& r) {
        for (const auto& c : r.coeffs) {
            if (c == 0) continue;
            return c < 0;
        }
        return false;
    };
    bool fa = flipped(a), fb = flipped(b);
    LinIneq da = a, db = b;
    if (fa) {
        for (auto& c : da.coeffs) c = -c;
        da.rhs = -da.rhs;
    }
    if (fb) {
        for (auto& c : db.coeffs) c = -c;
        db.rhs = -db.rhs;
    }
    int c = compare_coeffs(da.coeffs, db.coeffs);
    if (c != 0) return c < 0;
    int ra = display_rank(a), rb = display_rank(b);
    if (ra != rb) return ra < rb;
    return compare_rat(da.rhs, db.rhs) < 0;
}

bool row_identical(const LinIneq& a, const LinIneq& b) {
    return a.rel == b.rel && a.rhs == b.rhs && a.coeffs == b.coeffs;
}

// Negation of a row (complement half-space). Eq rows are not handled here.
LinIneq negate_row(const LinIneq& row) {
    assert(row.rel != Rel::Eq);
    LinIneq out;
    out.coeffs.reserve(row.coeffs.size());
    for (const auto& c : row.coeffs) out.coeffs.push_back(-c);
    out.rhs = -row.rhs;
    out.rel = row.rel == Rel::Le ? Rel::Lt : Rel::Le;
    return out;
}

struct RowSet {
    std::vector<LinIneq> rows;
    bool contradiction = false;

    void push(LinIneq row) {
        if (contradiction) return;
        if (!normalize_row(row)) {
            if (!trivial_row_holds(row.rel, row.rhs)) contradiction = true;
            return;
        }
        rows.push_back(std::move(row));
    }
};

// Dedup plus dominance between rows sharing a coefficient vector, and
// contradiction detection against matching equality rows and opposing
// bounds. Cheap pass run after every elimination step.
void cheap_reduce(RowSet& rs) {
    if (rs.contradiction) return;
    auto& rows = rs.rows;
    std::sort(rows.begin(), rows.end(), row_internal_less);
    rows.erase(std::unique(rows.begin(), rows.end(), row_identical), rows.end());

    std::vector<LinIneq> kept;
    kept.reserve(rows.size());
    auto same_vec = [](const LinIneq& a, const LinIneq& b) { return a.coeffs == b.coeffs; };

    for (std::size_t i = 0; i < rows.size();) {
        std::size_t end = i + 1;
        while (end < rows.size() && same_vec(rows[i], rows[end])) ++end;
        // Within a group: at most one Eq (two different Eq rhs = empty);
        // for upper bounds keep the tightest.
        std::optional<Rat> eq_rhs;
        std::optional<std::pair<Rat, Rel>> best_ub;
        for (std::size_t k = i; k < end; ++k) {
            const auto& r = rows[k];
            if (r.rel == Rel::Eq) {
                if (eq_rhs && *eq_rhs != r.rhs) {
                    rs.contradiction = true;
                    return;
                }
                eq_rhs = r.rhs;
            } else {
                if (!best_ub || r.rhs < best_ub->first ||
                    (r.rhs == best_ub->first && r.rel == Rel::Lt))
                    best_ub = {r.rhs, r.rel};
            }
        }
        if (eq_rhs && best_ub) {
            bool ok = best_ub->second == Rel::Le ? *eq_rhs <= best_ub->first
                                                 : *eq_rhs < best_ub->first;
            if (!ok) {
                rs.contradiction = true;
                return;
            }
            best_ub.reset();  // implied by the equality
        }
        if (eq_rhs) {
            LinIneq r = rows[i];
            r.rel = Rel::Eq;
            r.rhs = *eq_rhs;
            kept.push_back(std::move(r));
        } else if (best_ub) {
            LinIneq r = rows[i];
            r.rel = best_ub->second;
            r.rhs = best_ub->first;
            kept.push_back(std::move(r));
        }
        i = end;
    }
    rows = std::move(kept);

    // Opposing-bound contradictions: a*x <= b with -a*x <= b' and -b' > b
    // (resp. strict variants). Group keys are normalized, so the negated
    // vector of a row is normalized too.
    std::map<std::vector<Rat>, std::size_t> index;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].rel != Rel::Eq) index.emplace(rows[k].coeffs, k);
    for (const auto& [vec, k] : index) {
        std::vector<Rat> neg;
        neg.reserve(vec.size());
        for (const auto& c : vec) neg.push_back(-c);
        auto it = index.find(neg);
        if (it == index.end()) continue;
        const auto& a = rows[k];
        const auto& b = rows[it->second];
        // a: v <= ra (or <), b: -v <= rb i.e. v >= -rb
        const Rat& ra = a.rhs;
        Rat lb = -b.rhs;
        bool strict = a.rel == Rel::Lt || b.rel == Rel::Lt;
        if (lb > ra || (lb == ra && strict)) {
            rs.contradiction = true;
            return;
        }
    }
}

// Eliminates scope position idx from the rows (Fourier-Motzkin; equality
// rows are used as substitutions when available).
void eliminate_position(RowSet& rs, std::size_t idx) {
    if (rs.contradiction) return;
    std::vector<LinIneq> rows = std::move(rs.rows);
    rs.rows.clear();

    std::size_t eq_at = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].rel == Rel::Eq && rows[k].coeffs[idx] != 0) {
            eq_at = k;
            break;
        }
    }
    if (eq_at != rows.size()) {
        LinIneq pivot = std::move(rows[eq_at]);
        const Rat pc = pivot.coeffs[idx];
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == eq_at) continue;
            LinIneq row = std::move(rows[k]);
            const Rat c = row.coeffs[idx];
            if (c != 0) {
                Rat f = c / pc;
                for (std::size_t j = 0; j < row.coeffs.size(); ++j)
                    row.coeffs[j] -= f * pivot.coeffs[j];
                row.rhs -= f * pivot.rhs;
            }
            rs.push(std::move(row));
        }
        cheap_reduce(rs);
        return;
    }

    std::vector<LinIneq> lowers, uppers;
    for (auto& row : rows) {
        const Rat& c = row.coeffs[idx];
        if (c == 0)
            rs.push(std::move(row));
        else if (c > 0)
            uppers.push_back(std::move(row));
        else
            lowers.push_back(std::move(row));
    }
    for (const auto& lo : lowers) {
        for (const auto& up : uppers) {
            LinIneq row;
            const Rat a = -lo.coeffs[idx];  // > 0
            const Rat b = up.coeffs[idx];   // > 0
            row.coeffs.resize(lo.coeffs.size());
            for (std::size_t j = 0; j < row.coeffs.size(); ++j)
                row.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
            row.rhs = b * lo.rhs + a * up.rhs;
            row.rel = (lo.rel == Rel::Lt || up.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
            rs.push(std::move(row));
        }
    }
    cheap_reduce(rs);
}

// Variable elimination order: equalities first (cheap substitution), then
// smallest lower*upper fan-out; ties resolved by scope position.
std::size_t pick_position(const RowSet& rs, const std::vector<std::size_t>& candidates) {
    for (std::size_t idx : candidates)
        for (const auto& row : rs.rows)
            if (row.rel == Rel::Eq && row.coeffs[idx] != 0) return idx;
    std::size_t best = candidates.front();
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t idx : candidates) {
        std::size_t lo = 0, up = 0;
        for (const auto& row : rs.rows) {
            if (row.coeffs[idx] > 0)
                ++up;
            else if (row.coeffs[idx] < 0)
                ++lo;
        }
        std::size_t cost = lo * up;
        if (cost < best_cost) {
            best_cost = cost;
            best = idx;
        }
    }
    return best;
}

RowSet eliminate_all(const Polyhedron& p, const Scope& keep) {
    RowSet rs;
    for (const auto& row : p.rows()) rs.rows.push_back(row);
    if (p.marked_empty()) rs.contradiction = true;
    cheap_reduce(rs);

    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < p.scope().size(); ++i)
        if (!scope_contains(keep, p.scope()[i])) positions.push_back(i);

    while (!positions.empty() && !rs.contradiction) {
        std::size_t idx = pick_position(rs, positions);
        eliminate_position(rs, idx);
        positions.erase(std::find(positions.begin(), positions.end(), idx));
    }
    return rs;
}

LinIneq from_constraint(const Constraint& c, const Scope& scope) {
    LinIneq row;
    row.coeffs.assign(scope.size(), Rat(0));
    for (const auto& [v, coeff] : c.coeffs) {
        std::size_t i = scope_index(scope, v);
        if (i == scope.size())
            throw std::invalid_argument("constraint variable outside polyhedron scope");
        row.coeffs[i] = coeff;
    }
    row.rel = c.rel;
    row.rhs = c.rhs;
    return row;
}

std::vector<Rat> drop_positions(const std::vector<Rat>& v, const std::vector<std::size_t>& keep_pos) {
    std::vector<Rat> out;
    out.reserve(keep_pos.size());
    for (std::size_t i : keep_pos) out.push_back(v[i]);
    return out;
}

}  // namespace

// --- Polyhedron -------------------------------------------------------------

Polyhedron Polyhedron::bottom(Scope scope) {
    Polyhedron p(std::move(scope));
    p.marked_empty_ = true;
    return p;
}

void Polyhedron::add(const Constraint& c) {
    if (marked_empty_) return;
    LinIneq row = from_constraint(c, scope_);
    if (!normalize_row(row)) {
        if (!trivial_row_holds(row.rel, row.rhs)) marked_empty_ = true;
        return;
    }
    rows_.push_back(std::move(row));
}

void Polyhedron::add_all(const std::vector<Constraint>& cs) {
    for (const auto& c : cs) add(c);
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
    if (a.marked_empty() != b.marked_empty()) return false;
    if (a.scope() != b.scope()) return false;
    if (a.rows().size() != b.rows().size()) return false;
    for (std::size_t i = 0; i < a.rows().size(); ++i)
        if (!row_identical(a.rows()[i], b.rows()[i])) return false;
    return true;
}

Polyhedron rescope(const Polyhedron& p, const Scope& superscope) {
    if (p.scope() == superscope) return p;
    if (!scope_subset(p.scope(), superscope))
        throw std::invalid_argument("rescope target must contain the polyhedron scope");
    Polyhedron out(superscope);
    out.marked_empty_ = p.marked_empty_;
    std::vector<std::size_t> map;
    map.reserve(p.scope().size());
    for (Var v : p.scope()) map.push_back(scope_index(superscope, v));
    for (const auto& row : p.rows_) {
        LinIneq r;
        r.coeffs.assign(superscope.size(), Rat(0));
        for (std::size_t i = 0; i < row.coeffs.size(); ++i) r.coeffs[map[i]] = row.coeffs[i];
        r.rel = row.rel;
        r.rhs = row.rhs;
        out.rows_.push_back(std::move(r));
    }
    return out;
}

Polyhedron conjoin(const Polyhedron& p, const Polyhedron& q) {
    Scope common = scope_union(p.scope(), q.scope());
    Polyhedron a = rescope(p, common);
    Polyhedron b = rescope(q, common);
    a.marked_empty_ = a.marked_empty_ || b.marked_empty_;
    for (auto& row : b.rows_) a.rows_.push_back(std::move(row));
    if (!a.marked_empty_) {
        RowSet rs;
        rs.rows = std::move(a.rows_);
        cheap_reduce(rs);
        if (rs.contradiction)
            a.marked_empty_ = true;
        else
            a.rows_ = std::move(rs.rows);
    }
    if (a.marked_empty_) a.rows_.clear();
    return a;
}

Polyhedron conjoin(const Polyhedron& p, const Constraint& c) {
    Scope vars;
    for (const auto& [v, coeff] : c.coeffs) vars.push_back(v);
    Polyhedron q(make_scope(std::move(vars)));
    q.add(c);
    return conjoin(p, q);
}

bool is_empty(const Polyhedron& p) {
    if (p.marked_empty()) return true;
    if (p.rows().empty()) return false;
    return eliminate_all(p, Scope{}).contradiction;
}

Polyhedron project(const Polyhedron& p, const Scope& keep) {
    if (!scope_subset(keep, p.scope()))
        throw std::invalid_argument("projection target must be a subset of the scope");
    RowSet rs = eliminate_all(p, keep);
    if (rs.contradiction) return Polyhedron::bottom(keep);

    std::vector<std::size_t> keep_pos;
    for (std::size_t i = 0; i < p.scope().size(); ++i)
        if (scope_contains(keep, p.scope()[i])) keep_pos.push_back(i);

    Polyhedron out(keep);
    for (auto& row : rs.rows) {
        LinIneq r;
        r.coeffs = drop_positions(row.coeffs, keep_pos);
        r.rel = row.rel;
        r.rhs = std::move(row.rhs);
        out.rows_.push_back(std::move(r));
    }
    return out;
}

bool includes(const Polyhedron& outer, const Polyhedron& inner) {
    if (is_empty(inner)) return true;
    if (outer.marked_empty()) return false;
    Scope common = scope_union(outer.scope(), inner.scope());
    Polyhedron out = rescope(outer, common);
    Polyhedron in = rescope(inner, common);
    for (const auto& row : out.rows()) {
        if (row.rel == Rel::Eq) {
            LinIneq lt = row;
            lt.rel = Rel::Lt;
            Polyhedron test = in;
            test.rows_.push_back(lt);
            if (!is_empty(test)) return false;
            LinIneq gt;
            gt.coeffs.reserve(row.coeffs.size());
            for (const auto& c : row.coeffs) gt.coeffs.push_back(-c);
            gt.rhs = -row.rhs;
            gt.rel = Rel::Lt;
            Polyhedron test2 = in;
            test2.rows_.push_back(std::move(gt));
            if (!is_empty(test2)) return false;
        } else {
            Polyhedron test = in;
            test.rows_.push_back(negate_row(row));
            if (!is_empty(test)) return false;
        }
    }
    return true;
}

Polyhedron canonicalize(const Polyhedron& p) {
    if (is_empty(p)) return Polyhedron::bottom(p.scope());

    RowSet rs;
    rs.rows = p.rows();
    cheap_reduce(rs);
    if (rs.contradiction) return Polyhedron::bottom(p.scope());

    // Promote opposing non-strict bounds into equalities.
    {
        std::map<std::vector<Rat>, std::size_t> le_at;
        for (std::size_t k = 0; k < rs.rows.size(); ++k)
            if (rs.rows[k].rel == Rel::Le) le_at.emplace(rs.rows[k].coeffs, k);
        std::vector<bool> drop(rs.rows.size(), false);
        for (auto& [vec, k] : le_at) {
            if (drop[k]) continue;
            std::vector<Rat> neg;
            neg.reserve(vec.size());
            for (const auto& c : vec) neg.push_back(-c);
            auto it = le_at.find(neg);
            if (it == le_at.end() || drop[it->second]) continue;
            if (-rs.rows[it->second].rhs == rs.rows[k].rhs) {
                rs.rows[k].rel = Rel::Eq;
                normalize_row(rs.rows[k]);
                drop[it->second] = true;
            }
        }
        std::vector<LinIneq> kept;
        for (std::size_t k = 0; k < rs.rows.size(); ++k)
            if (!drop[k]) kept.push_back(std::move(rs.rows[k]));
        rs.rows = std::move(kept);
    }

    // Reduced echelon form of the equality system, substituted into the
    // inequalities so lower-dimensional sets get a unique representation.
    for (std::size_t col = 0; col < p.scope().size(); ++col) {
        std::size_t piv = rs.rows.size();
        for (std::size_t k = 0; k < rs.rows.size(); ++k) {
            if (rs.rows[k].rel != Rel::Eq || rs.rows[k].coeffs[col] == 0) continue;
            bool lead = true;
            for (std::size_t j = 0; j < col; ++j)
                if (rs.rows[k].coeffs[j] != 0) lead = false;
            if (lead) {
                piv = k;
                break;
            }
        }
        if (piv == rs.rows.size()) continue;
        const LinIneq pivot = rs.rows[piv];
        const Rat pc = pivot.coeffs[col];
        for (std::size_t k = 0; k < rs.rows.size(); ++k) {
            if (k == piv || rs.rows[k].coeffs[col] == 0) continue;
            Rat f = rs.rows[k].coeffs[col] / pc;
            for (std::size_t j = 0; j < rs.rows[k].coeffs.size(); ++j)
                rs.rows[k].coeffs[j] -= f * pivot.coeffs[j];
            rs.rows[k].rhs -= f * pivot.rhs;
            if (!normalize_row(rs.rows[k])) {
                rs.rows[k].coeffs.assign(p.scope().size(), Rat(0));
                rs.rows[k].rhs = 0;
                rs.rows[k].rel = Rel::Le;  // 0 <= 0, dropped below
            }
        }
    }
    {
        std::vector<LinIneq> kept;
        for (auto& row : rs.rows) {
            LinIneq r = std::move(row);
            if (normalize_row(r)) kept.push_back(std::move(r));
        }
        rs.rows = std::move(kept);
        cheap_reduce(rs);
        if (rs.contradiction) return Polyhedron::bottom(p.scope());
    }

    // Greedy redundancy elimination in display order; deterministic.
    std::sort(rs.rows.begin(), rs.rows.end(), row_display_less);
    std::vector<LinIneq> rows = std::move(rs.rows);
    for (std::size_t k = 0; k < rows.size();) {
        Polyhedron rest(p.scope());
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != k) rest.rows_.push_back(rows[j]);
        bool redundant;
        if (rows[k].rel == Rel::Eq) {
            Polyhedron t1 = rest;
            LinIneq lt = rows[k];
            lt.rel = Rel::Lt;
            t1.rows_.push_back(lt);
            LinIneq gt;
            for (const auto& c : rows[k].coeffs) gt.coeffs.push_back(-c);
            gt.rhs = -rows[k].rhs;
            gt.rel = Rel::Lt;
            Polyhedron t2 = rest;
            t2.rows_.push_back(std::move(gt));
            redundant = is_empty(t1) && is_empty(t2);
        } else {
            Polyhedron t = rest;
            t.rows_.push_back(negate_row(rows[k]));
            redundant = is_empty(t);
        }
        if (redundant)
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }

    Polyhedron out(p.scope());
    out.rows_ = std::move(rows);
    return out;
}

bool contains_point(const Polyhedron& p, const std::map<Var, Rat>& point) {
    if (p.marked_empty()) return false;
    for (const auto& row : p.rows()) {
        Rat lhs = 0;
        for (std::size_t i = 0; i < p.scope().size(); ++i) {
            if (row.coeffs[i] == 0) continue;
            auto it = point.find(p.scope()[i]);
            if (it == point.end())
                throw std::invalid_argument("point does not assign every scope variable");
            lhs += row.coeffs[i] * it->second;
        }
        bool ok = false;
        switch (row.rel) {
            case Rel::Lt: ok = lhs < row.rhs; break;
            case Rel::Le: ok = lhs <= row.rhs; break;
            case Rel::Eq: ok = lhs == row.rhs; break;
        }
        if (!ok) return false;
    }
    return true;
}

// --- Region -----------------------------------------------------------------

void region_add(Region& r, Polyhedron p) {
    if (is_empty(p)) return;
    r.disjuncts.push_back(rescope(p, r.scope));
}

Region region_project(const Region& r, const Scope& keep) {
    Region out = Region::empty(keep);
    for (const auto& d : r.disjuncts) region_add(out, project(d, keep));
    return out;
}

Region region_conjoin(const Region& r, const Constraint& c) {
    Region out = Region::empty(r.scope);
    for (const auto& d : r.disjuncts) region_add(out, conjoin(d, c));
    return out;
}

namespace {

// Splits the Eq rows of q into non-strict pairs so complements are single rows.
std::vector<LinIneq> inequality_rows(const Polyhedron& q) {
    std::vector<LinIneq> out;
    for (const auto& row : q.rows()) {
        if (row.rel == Rel::Eq) {
            LinIneq le = row;
            le.rel = Rel::Le;
            out.push_back(le);
            LinIneq ge;
            for (const auto& c : row.coeffs) ge.coeffs.push_back(-c);
            ge.rhs = -row.rhs;
            ge.rel = Rel::Le;
            out.push_back(std::move(ge));
        } else {
            out.push_back(row);
        }
    }
    return out;
}

Constraint row_to_constraint(const LinIneq& row, const Scope& scope) {
    Constraint c;
    for (std::size_t i = 0; i < scope.size(); ++i)
        if (row.coeffs[i] != 0) c.coeffs[scope[i]] = row.coeffs[i];
    c.rel = row.rel;
    c.rhs = row.rhs;
    return c;
}

// p subset-of union(cover[from..]). Splits p along the rows of cover[from]:
// the part outside each row must be covered by the rest, the part inside all
// rows lies in cover[from] itself.
bool covered_by(const Polyhedron& p, const std::vector<const Polyhedron*>& cover,
                std::size_t from) {
    if (is_empty(p)) return true;
    if (from == cover.size()) return false;
    if (cover[from]->marked_empty()) return covered_by(p, cover, from + 1);
    Polyhedron q = rescope(*cover[from], p.scope());
    Polyhedron remainder = p;
    for (const auto& row : inequality_rows(q)) {
        Polyhedron piece = conjoin(remainder, row_to_constraint(negate_row(row), p.scope()));
        if (!covered_by(piece, cover, from + 1)) return false;
        remainder = conjoin(remainder, row_to_constraint(row, p.scope()));
        if (is_empty(remainder)) return true;
    }
    return true;
}

}  // namespace

bool region_includes(const Region& outer, const Region& inner) {
    std::vector<const Polyhedron*> cover;
    cover.reserve(outer.disjuncts.size());
    for (const auto& d : outer.disjuncts) cover.push_back(&d);
    for (const auto& d : inner.disjuncts)
        if (!covered_by(rescope(d, scope_union(inner.scope, outer.scope)), cover, 0))
            return false;
    return true;
}

bool region_equal(const Region& a, const Region& b) {
    return region_includes(a, b) && region_includes(b, a);
}

bool region_contains_point(const Region& r, const std::map<Var, Rat>& point) {
    for (const auto& d : r.disjuncts)
        if (contains_point(d, point)) return true;
    return false;
}

Region region_canonicalize(const Region& r) {
    Region out = Region::empty(r.scope);
    for (const auto& d : r.disjuncts) region_add(out, canonicalize(d));
    // Absorb disjuncts contained in a single other disjunct.
    std::vector<bool> dead(out.disjuncts.size(), false);
    for (std::size_t i = 0; i < out.disjuncts.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < out.disjuncts.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (includes(out.disjuncts[j], out.disjuncts[i])) {
                dead[i] = true;
                break;
            }
        }
    }
    Region packed = Region::empty(r.scope);
    for (std::size_t i = 0; i < out.disjuncts.size(); ++i)
        if (!dead[i]) packed.disjuncts.push_back(std::move(out.disjuncts[i]));
    std::sort(packed.disjuncts.begin(), packed.disjuncts.end(),
              [](const Polyhedron& a, const Polyhedron& b) {
                  const auto& ra = a.rows();
                  const auto& rb = b.rows();
                  for (std::size_t i = 0; i < std::min(ra.size(), rb.size()); ++i) {
                      if (row_display_less(ra[i], rb[i])) return true;
                      if (row_display_less(rb[i], ra[i])) return false;
                  }
                  return ra.size() < rb.size();
              });
    return packed;
}

}  // namespace ptpm
