#pragma once

#include <cstdint>
#include <map>

#include "ptpm/rational.hpp"
#include "ptpm/variable.hpp"

namespace ptpm {

// Internal relations. >= and > from input are normalized away by negating
// both sides; equalities stay first-class.
enum class Rel : std::uint8_t { Lt = 0, Le = 1, Eq = 2 };

// One linear inequality sum(coeffs[v] * v) REL rhs in sparse (map) form.
// This is the construction-side currency; polyhedra store dense rows.
struct Constraint {
    std::map<Var, Rat> coeffs;
    Rel rel{Rel::Le};
    Rat rhs{0};
};

// Small expression builder so matcher code can write constraints the way the
// definitions read, e.g.  expr(clock) == expr(tp) - reset_time.
struct LinExpr {
    std::map<Var, Rat> coeffs;
    Rat constant{0};
};

LinExpr expr(Var v);
LinExpr expr(const Rat& k);
LinExpr operator+(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a);
LinExpr operator*(const Rat& k, LinExpr a);

Constraint operator<(const LinExpr& a, const LinExpr& b);
Constraint operator<=(const LinExpr& a, const LinExpr& b);
Constraint operator>(const LinExpr& a, const LinExpr& b);
Constraint operator>=(const LinExpr& a, const LinExpr& b);
Constraint operator==(const LinExpr& a, const LinExpr& b);

}  // namespace ptpm
