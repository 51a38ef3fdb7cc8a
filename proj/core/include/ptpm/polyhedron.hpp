#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptpm/linear.hpp"
#include "ptpm/rational.hpp"
#include "ptpm/variable.hpp"

namespace ptpm {

// Dense row over a polyhedron's scope: sum(coeffs[i] * scope[i]) rel rhs.
// Rows are kept normalized: variable coefficients are coprime integers, and
// equality rows have a positive leading coefficient.
struct LinIneq {
    std::vector<Rat> coeffs;
    Rel rel{Rel::Le};
    Rat rhs{0};
};

// A not-necessarily-closed convex polyhedron in constraint representation.
// Values are immutable once built; every operation returns a fresh value.
class Polyhedron {
public:
    Polyhedron() = default;
    explicit Polyhedron(Scope scope) : scope_(std::move(scope)) {}

    static Polyhedron universe(Scope scope) { return Polyhedron(std::move(scope)); }
    static Polyhedron bottom(Scope scope);

    const Scope& scope() const { return scope_; }
    const std::vector<LinIneq>& rows() const { return rows_; }
    // True when a contradiction has already been detected syntactically.
    // is_empty() is the semantic test.
    bool marked_empty() const { return marked_empty_; }

    void add(const Constraint& c);
    void add_all(const std::vector<Constraint>& cs);

    friend bool operator==(const Polyhedron& a, const Polyhedron& b);

private:
    friend Polyhedron conjoin(const Polyhedron&, const Polyhedron&);
    friend Polyhedron project(const Polyhedron&, const Scope&);
    friend Polyhedron canonicalize(const Polyhedron&);
    friend Polyhedron rescope(const Polyhedron&, const Scope&);
    friend bool includes(const Polyhedron&, const Polyhedron&);

    Scope scope_;
    std::vector<LinIneq> rows_;
    bool marked_empty_ = false;
};

// Intersection; the result ranges over the union of the two scopes.
Polyhedron conjoin(const Polyhedron& p, const Polyhedron& q);
Polyhedron conjoin(const Polyhedron& p, const Constraint& c);

// Exact emptiness over the rationals, strictness respected.
bool is_empty(const Polyhedron& p);

// Exact shadow of p onto keep (Fourier-Motzkin elimination of the rest).
// keep must be a subset of the scope.
Polyhedron project(const Polyhedron& p, const Scope& keep);

// Extends the scope of p (no-op on the denoted set).
Polyhedron rescope(const Polyhedron& p, const Scope& superscope);

// Every point of inner lies in outer. Scopes are unioned first.
bool includes(const Polyhedron& outer, const Polyhedron& inner);

// Full canonical form: implied equalities promoted, equality system reduced,
// redundant rows dropped, rows sorted in display order. Deterministic.
Polyhedron canonicalize(const Polyhedron& p);

// Exact membership test; point must assign every scope variable.
bool contains_point(const Polyhedron& p, const std::map<Var, Rat>& point);

// --- Regions: finite unions of polyhedra over a common scope -------------

struct Region {
    Scope scope;
    std::vector<Polyhedron> disjuncts;

    static Region empty(Scope s) { return Region{std::move(s), {}}; }
    bool is_empty_region() const { return disjuncts.empty(); }
};

// Appends p unless it is empty. p is rescoped to the region scope.
void region_add(Region& r, Polyhedron p);

Region region_project(const Region& r, const Scope& keep);
Region region_conjoin(const Region& r, const Constraint& c);

// inner subset-of outer as unions of polyhedra (exact, convex splitting).
bool region_includes(const Region& outer, const Region& inner);
bool region_equal(const Region& a, const Region& b);
bool region_contains_point(const Region& r, const std::map<Var, Rat>& point);

// Canonical disjuncts, empties dropped, disjuncts absorbed into single
// containing disjuncts, sorted. For comparisons and table storage; match-set
// emission keeps production order.
Region region_canonicalize(const Region& r);

}  // namespace ptpm
