#include "boxlogic/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace boxlogic;

namespace {

const BoxSpec kBinary{{2, 2}};

std::set<std::vector<Rational>> coordinate_set(const std::vector<Behavior>& vs) {
    std::set<std::vector<Rational>> out;
    for (const auto& v : vs) out.insert(v.coordinates());
    return out;
}

} // namespace

TEST_CASE("single-context polytope is the probability simplex") {
    const StatePolytope p = ns_polytope(BoxSpec{{2}}, BoxSpec{{2}});
    CHECK(p.dimension() == 3);
    const auto& verts = p.vertices();
    CHECK(verts.size() == 4);
    for (const auto& v : verts) CHECK(v.is_two_valued());
}

TEST_CASE("binary-scenario polytope: 24 vertices, 16 integral, 8 half-integral") {
    const StatePolytope p = ns_polytope(kBinary, kBinary);
    CHECK(p.dimension() == 8);
    const auto& verts = p.vertices();
    REQUIRE(verts.size() == 24);
    std::size_t integral = 0, half = 0;
    for (const auto& v : verts) {
        bool is_half = false;
        for (const auto& c : v.coordinates()) {
            CHECK(c.den() <= 2);
            if (c.den() == 2) is_half = true;
        }
        (is_half ? half : integral) += 1;
    }
    CHECK(integral == 16);
    CHECK(half == 8);
}

TEST_CASE("double description agrees with basic-solution enumeration") {
    for (const auto& [l, r] : {std::pair{std::vector<int>{2, 2}, std::vector<int>{2, 2}},
                               std::pair{std::vector<int>{2}, std::vector<int>{3}},
                               std::pair{std::vector<int>{2, 3}, std::vector<int>{2}}}) {
        const StatePolytope p = ns_polytope(BoxSpec{l}, BoxSpec{r});
        const auto dd = coordinate_set(p.vertices());
        const auto basic =
            oracles::basis_enumeration_vertices(p.equalities(), p.variables().size());
        const std::set<std::vector<Rational>> oracle(basic.begin(), basic.end());
        CHECK(dd == oracle);
    }
}

TEST_CASE("vertices are valid behaviors and ordered lexicographically") {
    const StatePolytope p = ns_polytope(kBinary, kBinary);
    const auto& verts = p.vertices();
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        CHECK(verts[i].coordinates() < verts[i + 1].coordinates());
    for (const auto& v : verts) {
        Rational total;
        for (int beta = 0; beta < 2; ++beta) total += v.prob(0, 0, 0, beta);
        CHECK(total == v.left_marginal(0, 0));
    }
}

TEST_CASE("deterministic vertices are exactly the two-valued states") {
    const BoxWorld w(kBinary, kBinary);
    const StatePolytope p = ns_polytope(w);
    std::set<std::vector<Rational>> det;
    for (const auto& v : p.vertices())
        if (v.is_two_valued()) det.insert(v.coordinates());
    std::set<std::vector<Rational>> tv;
    for (const auto& chi : enumerate_two_valued_states(w))
        tv.insert(chi.behavior.coordinates());
    CHECK(det == tv);
}

TEST_CASE("the PR box is a vertex and the CHSH maxima are 4 and 2") {
    const StatePolytope p = ns_polytope(kBinary, kBinary);
    const auto& verts = p.vertices();
    const auto pr = pr_box_state().coordinates();
    bool found_pr = false;
    Rational best_all(-8), best_integral(-8);
    for (const auto& v : verts) {
        if (v.coordinates() == pr) found_pr = true;
        const Rational c = chsh_value(v);
        if (best_all < c) best_all = c;
        if (v.is_two_valued() && best_integral < c) best_integral = c;
    }
    CHECK(found_pr);
    CHECK(best_all == Rational(4));
    CHECK(best_integral == Rational(2));
}

TEST_CASE("every vertex satisfies the equality rows exactly") {
    const StatePolytope p = ns_polytope(kBinary, kBinary);
    for (const auto& v : p.vertices()) {
        const auto x = v.coordinates();
        for (const auto& row : p.equalities()) {
            Rational acc;
            for (std::size_t i = 0; i < x.size(); ++i) acc += row.coeffs[i] * x[i];
            CHECK(acc == row.rhs);
        }
    }
}

TEST_CASE("dimension budget guards oversized scenarios") {
    CHECK_THROWS_AS((void)StatePolytope(BoxSpec{{3, 3, 3}}, BoxSpec{{3, 3, 3}}, 16),
                    BudgetError);
}
