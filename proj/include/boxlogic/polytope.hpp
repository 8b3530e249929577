#pragma once

#include "boxlogic/states.hpp"

#include <span>

namespace boxlogic {

/// A linear condition sum(coeffs . x) = rhs (equality rows) over the
/// behavior-table coordinates.
struct LinearRow {
    std::vector<Rational> coeffs;
    Rational rhs;
};

struct TableVar {
    int a, b, alpha, beta;
};

/// The no-signaling polytope of a scenario in H-representation: coordinates
/// are the behavior-table entries (context-major, row-major), constrained by
/// nonnegativity, per-context normalization, and marginal consistency.
/// Vertices are enumerated exactly on demand and cached, in lexicographic
/// coordinate order.
class StatePolytope {
public:
    StatePolytope(BoxSpec left, BoxSpec right, std::size_t dimension_budget = 64);

    const BoxSpec& left() const { return left_; }
    const BoxSpec& right() const { return right_; }
    const std::vector<TableVar>& variables() const { return vars_; }
    const std::vector<LinearRow>& equalities() const { return equalities_; }

    /// Affine dimension of the solution set of the equality system.
    std::size_t dimension() const;

    /// Exact vertex enumeration by the double description method with
    /// integer pivoting on the homogenized cone.
    const std::vector<Behavior>& vertices() const;

private:
    void enumerate_vertices() const;
    Behavior coords_to_behavior(const std::vector<Rational>& x) const;

    BoxSpec left_, right_;
    std::vector<TableVar> vars_;
    std::vector<LinearRow> equalities_;
    mutable std::vector<Behavior> vertices_;
    mutable bool enumerated_ = false;
};

inline StatePolytope ns_polytope(const BoxSpec& left, const BoxSpec& right) {
    return StatePolytope(left, right);
}
inline StatePolytope ns_polytope(const BoxWorld& w) {
    return StatePolytope(w.left(), w.right());
}
inline const std::vector<Behavior>& polytope_vertices(const StatePolytope& p) {
    return p.vertices();
}

} // namespace boxlogic
