#include "ptpm/variable.hpp"

#include <algorithm>

namespace ptpm {

Scope make_scope(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Scope scope_union(const Scope& a, const Scope& b) {
    Scope out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool scope_contains(const Scope& scope, Var v) {
    return std::binary_search(scope.begin(), scope.end(), v);
}

bool scope_subset(const Scope& sub, const Scope& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::size_t scope_index(const Scope& scope, Var v) {
    auto it = std::lower_bound(scope.begin(), scope.end(), v);
    if (it == scope.end() || *it != v) return scope.size();
    return static_cast<std::size_t>(it - scope.begin());
}

std::string default_var_name(Var v) {
    switch (v.kind) {
        case VarKind::MatchStart: return "t";
        case VarKind::MatchEnd: return "t'";
        case VarKind::Param: return "p" + std::to_string(v.index);
        case VarKind::Clock: return "x" + std::to_string(v.index);
        case VarKind::Aux: return "aux" + std::to_string(v.index);
    }
    return "?";
}

}  // namespace ptpm
