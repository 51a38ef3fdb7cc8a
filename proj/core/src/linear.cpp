#include "ptpm/linear.hpp"

namespace ptpm {

LinExpr expr(Var v) {
    LinExpr e;
    e.coeffs[v] = 1;
    return e;
}

LinExpr expr(const Rat& k) {
    LinExpr e;
    e.constant = k;
    return e;
}

LinExpr operator+(LinExpr a, const LinExpr& b) {
    for (const auto& [v, c] : b.coeffs) a.coeffs[v] += c;
    a.constant += b.constant;
    return a;
}

LinExpr operator-(LinExpr a, const LinExpr& b) {
    for (const auto& [v, c] : b.coeffs) a.coeffs[v] -= c;
    a.constant -= b.constant;
    return a;
}

LinExpr operator-(LinExpr a) {
    for (auto& [v, c] : a.coeffs) c = -c;
    a.constant = -a.constant;
    return a;
}

LinExpr operator*(const Rat& k, LinExpr a) {
    for (auto& [v, c] : a.coeffs) c *= k;
    a.constant *= k;
    return a;
}

namespace {

Constraint make(const LinExpr& lhs, const LinExpr& rhs, Rel rel) {
    LinExpr d = lhs - rhs;
    Constraint c;
    c.coeffs = std::move(d.coeffs);
    c.rel = rel;
    c.rhs = -d.constant;
    return c;
}

}  // namespace

Constraint operator<(const LinExpr& a, const LinExpr& b) { return make(a, b, Rel::Lt); }
Constraint operator<=(const LinExpr& a, const LinExpr& b) { return make(a, b, Rel::Le); }
Constraint operator>(const LinExpr& a, const LinExpr& b) { return make(b, a, Rel::Lt); }
Constraint operator>=(const LinExpr& a, const LinExpr& b) { return make(b, a, Rel::Le); }
Constraint operator==(const LinExpr& a, const LinExpr& b) { return make(a, b, Rel::Eq); }

}  // namespace ptpm
