#include "boxlogic/states.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace boxlogic;

namespace {

const BoxSpec kBinary{{2, 2}};

Behavior bump_pr_entry() {
    // a PR table with P(00|22) raised by 1/4 at the expense of P(11|22):
    // each context still sums to 1 but the (2,2) marginals shift
    auto tables = std::vector<std::vector<std::vector<Rational>>>(2);
    for (int a = 0; a < 2; ++a) {
        tables[a].resize(2);
        for (int b = 0; b < 2; ++b)
            for (int alpha = 0; alpha < 2; ++alpha)
                for (int beta = 0; beta < 2; ++beta)
                    tables[a][b].push_back((alpha ^ beta) == (a & b) ? Rational(1, 2)
                                                                     : Rational(0));
    }
    tables[1][1][0] += Rational(1, 4); // P(00|22)
    tables[1][1][1] -= Rational(1, 4); // P(01|22): context stays normalized
    return Behavior::from_table(kBinary, kBinary, std::move(tables));
}

} // namespace

TEST_CASE("uniform and PR tables validate") {
    CHECK_NOTHROW((void)Behavior::uniform(kBinary, kBinary));
    CHECK_NOTHROW((void)pr_box_state());
    CHECK(pr_box_state().left_marginal(0, 0) == Rational(1, 2));
    CHECK(pr_box_state().right_marginal(1, 1) == Rational(1, 2));
}

TEST_CASE("signaling and unnormalized tables are rejected with context names") {
    CHECK_THROWS_WITH_AS((void)bump_pr_entry(),
                         doctest::Contains("no-signaling violation"), InputError);
    auto tables = std::vector<std::vector<std::vector<Rational>>>(
        2, std::vector<std::vector<Rational>>(
               2, std::vector<Rational>{Rational(1, 2), Rational(0), Rational(0),
                                        Rational(0)}));
    CHECK_THROWS_WITH_AS((void)Behavior::from_table(kBinary, kBinary, std::move(tables)),
                         doctest::Contains("sums to"), InputError);
}

TEST_CASE("evaluation of the full and empty events") {
    const BoxWorld w(kBinary, kBinary);
    const Behavior u = Behavior::uniform(kBinary, kBinary);
    CHECK(evaluate(u, w, w.logic().full_id()).is_one());
    CHECK(evaluate(u, w, w.logic().empty_id()).is_zero());
    CHECK(evaluate(pr_box_state(), w, w.logic().full_id()).is_one());
}

TEST_CASE("PR marginal question evaluates to one half") {
    const BoxWorld w(kBinary, kBinary);
    const std::vector<int> zero{0}, both{0, 1};
    const EventId q = w.question_event(0, zero, 0, both); // left input 1, outcome 0
    CHECK(evaluate(pr_box_state(), w, q) == Rational(1, 2));
}

TEST_CASE("complement additivity holds for every event and several states") {
    const BoxWorld w(kBinary, kBinary);
    const std::vector<Behavior> states{Behavior::uniform(kBinary, kBinary), pr_box_state(),
                                       enumerate_two_valued_states(w)[3].behavior};
    for (const auto& s : states)
        for (EventId p = 0; p < w.logic().size(); ++p) {
            const Rational total =
                evaluate(s, w, p) + evaluate(s, w, w.logic().orthocomplement(p));
            CHECK(total.is_one());
        }
}

TEST_CASE("evaluation is independent of the exact cover chosen") {
    const BoxWorld w(kBinary, kBinary);
    const auto states = std::vector<Behavior>{pr_box_state(),
                                              Behavior::uniform(kBinary, kBinary)};
    for (const auto& s : states)
        for (EventId p = 0; p < w.logic().size(); ++p) {
            const auto covers = oracles::all_exact_covers(w, w.logic().members(p));
            REQUIRE(!covers.empty());
            std::set<Rational> values;
            for (const auto& cover : covers) {
                Rational v;
                for (const auto c : cover) {
                    const AtomSite at = w.atom_sites()[c];
                    v += s.prob(at.a, at.b, at.alpha, at.beta);
                }
                values.insert(v);
            }
            CHECK(values.size() == 1);
            CHECK(*values.begin() == evaluate(s, w, p));
        }
}

TEST_CASE("additivity over disjoint pairs for every polytope vertex") {
    const BoxWorld w(kBinary, kBinary);
    const StatePolytope poly = ns_polytope(w);
    for (const auto& v : poly.vertices()) {
        const auto vals = value_table(v, w);
        for (EventId p = 0; p < w.logic().size(); ++p)
            for (EventId q = p + 1; q < w.logic().size(); ++q) {
                if (!w.logic().members(p).disjoint_with(w.logic().members(q))) continue;
                const EventId u = w.logic().join_disjoint(std::vector<EventId>{p, q});
                CHECK(vals[u] == vals[p] + vals[q]);
            }
    }
}

TEST_CASE("cover-independence also holds on a three-outcome world") {
    const BoxWorld w(BoxSpec{{2, 3}}, BoxSpec{{2, 2}});
    const StatePolytope poly = ns_polytope(w);
    for (const auto& v : poly.vertices()) {
        if (v.is_two_valued()) continue; // indicator values are cover-free
        for (EventId p = 0; p < w.logic().size(); ++p) {
            std::set<Rational> values;
            for (const auto& cover : oracles::all_exact_covers(w, w.logic().members(p))) {
                Rational acc;
                for (const auto c : cover) {
                    const AtomSite at = w.atom_sites()[c];
                    acc += v.prob(at.a, at.b, at.alpha, at.beta);
                }
                values.insert(acc);
            }
            CHECK(values.size() == 1);
        }
    }
}

TEST_CASE("two-valued enumeration counts") {
    CHECK(enumerate_two_valued_states(BoxSpec{{2, 2}}).size() == 4);
    const BoxWorld w(kBinary, kBinary);
    CHECK(enumerate_two_valued_states(w).size() == 16);
    const BoxWorld one_ctx(BoxSpec{{2}}, BoxSpec{{2}});
    CHECK(enumerate_two_valued_states(one_ctx).size() == 4);
}

TEST_CASE("two-valued enumeration matches the exhaustive 0/1 table search") {
    for (const auto& [l, r] : {std::pair{std::vector<int>{2, 2}, std::vector<int>{2, 2}},
                               std::pair{std::vector<int>{2, 3}, std::vector<int>{2}}}) {
        const BoxWorld w(BoxSpec{l}, BoxSpec{r});
        const auto brute = oracles::brute_two_valued_behaviors(w.left(), w.right());
        const auto fast = enumerate_two_valued_states(w);
        REQUIRE(brute.size() == fast.size());
        std::set<std::vector<Rational>> bs, fs;
        for (const auto& b : brute) bs.insert(b.coordinates());
        for (const auto& chi : fast) fs.insert(chi.behavior.coordinates());
        CHECK(bs == fs);
    }
}

TEST_CASE("product states multiply and stay no-signaling") {
    const auto mu = ComponentState::uniform(kBinary);
    const auto nu = ComponentState::uniform(kBinary);
    const Behavior prod = product_state(mu, nu);
    CHECK(prod == Behavior::uniform(kBinary, kBinary));

    const auto det_mu = ComponentState::deterministic(kBinary, std::vector<int>{1, 0});
    const auto det_nu = ComponentState::deterministic(kBinary, std::vector<int>{0, 1});
    const Behavior det = product_state(det_mu, det_nu);
    CHECK(det.is_two_valued());
    CHECK_NOTHROW((void)TwoValuedState::from_behavior(det));
}

TEST_CASE("product rule through the pairing map") {
    const BoxWorld w(kBinary, kBinary);
    const ProductWitness wit = w.build_product_witness();
    const auto mus = enumerate_two_valued_states(w.left());
    const auto nus = enumerate_two_valued_states(w.right());
    for (const auto& mu : mus)
        for (const auto& nu : nus) {
            const Behavior psi = product_state(mu, nu);
            for (EventId p = 0; p < w.left_logic().size(); ++p)
                for (EventId q = 0; q < w.right_logic().size(); ++q)
                    CHECK(evaluate(psi, w, wit.phi_map[p][q]) ==
                          evaluate(mu, w, Side::Left, p) * evaluate(nu, w, Side::Right, q));
        }
}

TEST_CASE("factorization round-trips all sixteen two-valued states") {
    const BoxWorld w(kBinary, kBinary);
    const auto mus = enumerate_two_valued_states(w.left());
    const auto nus = enumerate_two_valued_states(w.right());
    for (const auto& mu : mus)
        for (const auto& nu : nus) {
            const auto chi = TwoValuedState::from_behavior(product_state(mu, nu));
            const auto [mu2, nu2] = factorize_two_valued(w, chi);
            CHECK(mu2 == mu);
            CHECK(nu2 == nu);
        }
    for (const auto& chi : enumerate_two_valued_states(w))
        CHECK_NOTHROW((void)factorize_two_valued(w, chi));
}

TEST_CASE("anticorrelated 0/1 choice in one context is rejected as signaling") {
    // deterministic per context but following the PR support pattern: the
    // right outcome for input 2 depends on the left input
    auto tables = std::vector<std::vector<std::vector<Rational>>>(2);
    for (int a = 0; a < 2; ++a) {
        tables[a].resize(2);
        for (int b = 0; b < 2; ++b) {
            tables[a][b].assign(4, Rational(0));
            const int alpha = 0;
            const int beta = alpha ^ (a & b);
            tables[a][b][static_cast<std::size_t>(alpha) * 2 + beta] = Rational(1);
        }
    }
    CHECK_THROWS_WITH_AS((void)Behavior::from_table(kBinary, kBinary, std::move(tables)),
                         doctest::Contains("no-signaling violation"), InputError);
}

TEST_CASE("richness of state families") {
    const BoxWorld w(kBinary, kBinary);
    std::vector<Behavior> all_tv;
    for (const auto& chi : enumerate_two_valued_states(w)) all_tv.push_back(chi.behavior);
    CHECK(is_rich(all_tv, w));

    const std::vector<Behavior> uniform_only{Behavior::uniform(kBinary, kBinary)};
    CHECK(!is_rich(uniform_only, w));

    const BoxWorld one_ctx(BoxSpec{{2}}, BoxSpec{{2}});
    std::vector<Behavior> point_states;
    for (const auto& chi : enumerate_two_valued_states(one_ctx))
        point_states.push_back(chi.behavior);
    CHECK(is_rich(point_states, one_ctx));
}

TEST_CASE("a state is a superposition of any family containing it") {
    const BoxWorld w(kBinary, kBinary);
    const std::vector<Behavior> family{pr_box_state(), Behavior::uniform(kBinary, kBinary)};
    CHECK(is_superposition(family[0], family, w));
    CHECK(is_superposition(family[1], family, w));
}

TEST_CASE("superposition closure of one deterministic state is itself") {
    const BoxWorld w(kBinary, kBinary);
    std::vector<Behavior> all;
    for (const auto& chi : enumerate_two_valued_states(w)) all.push_back(chi.behavior);
    all.push_back(pr_box_state());
    const std::vector<Behavior> single{all[5]};
    const auto closure = superposition_closure_members(all, single, w);
    REQUIRE(closure.size() == 1);
    CHECK(closure[0] == all[5]);
}

TEST_CASE("the PR box is a superposition of the sixteen deterministic states") {
    const BoxWorld w(kBinary, kBinary);
    std::vector<Behavior> all_tv;
    for (const auto& chi : enumerate_two_valued_states(w)) all_tv.push_back(chi.behavior);
    CHECK(is_superposition(pr_box_state(), all_tv, w));
    // nothing is a superposition of the empty family
    CHECK(!is_superposition(pr_box_state(), {}, w));
}

TEST_CASE("CHSH values") {
    CHECK(chsh_value(Behavior::uniform(kBinary, kBinary)).is_zero());
    CHECK(chsh_value(pr_box_state()) == Rational(4));
    // brute force over the deterministic states
    Rational best(-8);
    for (const auto& chi : enumerate_two_valued_states(BoxWorld(kBinary, kBinary))) {
        const Rational v = chsh_value(chi.behavior);
        if (best < v) best = v;
    }
    CHECK(best == Rational(2));
    CHECK_THROWS_AS((void)chsh_value(Behavior::uniform(BoxSpec{{3, 2}}, kBinary)),
                    InputError);
}

TEST_CASE("component state validation") {
    CHECK_THROWS_AS((void)ComponentState::from_table(
                        kBinary, {{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(1)}}),
                    InputError);
    CHECK_THROWS_AS(
        (void)ComponentState::deterministic(kBinary, std::vector<int>{0, 5}), InputError);
    const auto u = ComponentState::uniform(BoxSpec{{3}});
    CHECK(u.prob(0, 2) == Rational(1, 3));
}
