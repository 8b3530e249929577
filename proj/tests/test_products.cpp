#include "boxlogic/products.hpp"

#include <doctest.h>

#include <set>

using namespace boxlogic;

namespace {

const BoxSpec kBinary{{2, 2}};

std::vector<std::pair<std::vector<int>, std::vector<int>>> grid_worlds() {
    std::vector<std::vector<int>> specs;
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> sizes(n, 2);
        while (true) {
            specs.push_back(sizes);
            int i = 0;
            for (; i < n; ++i) {
                if (++sizes[i] <= 3) break;
                sizes[i] = 2;
            }
            if (i == n) break;
        }
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> worlds;
    for (const auto& l : specs)
        for (const auto& r : specs) worlds.push_back({l, r});
    return worlds;
}

} // namespace

TEST_CASE("free orthodistributive product holds on the binary scenario") {
    const BoxWorld w(kBinary, kBinary);
    const Report r = verify_free_orthodistributive(w, w.build_product_witness());
    for (const auto& c : r.checks) {
        INFO(c.check_id);
        CHECK(c.pass);
    }
    CHECK(r.checks.size() == 4);
}

TEST_CASE("free orthodistributive product holds on the (3,2)x(2,3) world") {
    const BoxWorld w(BoxSpec{{3, 2}}, BoxSpec{{2, 3}});
    const Report r = verify_free_orthodistributive(w, w.build_product_witness());
    CHECK(r.all_pass());
}

TEST_CASE("one-sided images alone stall below the full family without meets") {
    // the generation check must rely on meets: complements and disjoint
    // unions of one-sided cylinders never produce a joint-outcome atom
    const BoxWorld w(kBinary, kBinary);
    const ProductWitness wit = w.build_product_witness();
    std::set<BitVec> plain;
    for (const EventId p : wit.u_map) plain.insert(w.logic().members(p));
    for (const EventId q : wit.v_map) plain.insert(w.logic().members(q));
    // the image union is complement-closed and admits no new disjoint
    // unions: one-sided cylinders intersect unless one is empty
    for (const auto& x : plain)
        for (const auto& y : plain)
            if (x.disjoint_with(y)) CHECK(plain.contains(x | y));
    CHECK(plain.size() < w.logic().size());
}

TEST_CASE("corrupting the embedding of the empty event is caught") {
    const BoxWorld w(kBinary, kBinary);
    ProductWitness wit = w.build_product_witness();
    wit.u_map[w.left_logic().empty_id()] = w.logic().full_id();
    const Report r = verify_free_orthodistributive(w, wit);
    REQUIRE(r.find("free_product.embeddings") != nullptr);
    CHECK(!r.find("free_product.embeddings")->pass);
    CHECK(!r.find("free_product.embeddings")->counterexample.is_null());
}

TEST_CASE("every single-entry witness corruption trips a named check") {
    const BoxWorld w(kBinary, kBinary);
    const ProductWitness clean = w.build_product_witness();
    const auto breaks_something = [&](const ProductWitness& wit) {
        if (!verify_free_orthodistributive(w, wit).all_pass()) return true;
        if (!verify_atoms_product(w, wit)) return true;
        return !verify_strong_tensor_product(w, wit).all_pass();
    };
    const std::size_t n = w.logic().size();
    for (std::size_t i = 0; i < clean.u_map.size(); ++i) {
        ProductWitness wit = clean;
        wit.u_map[i] = static_cast<EventId>((wit.u_map[i] + 1) % n);
        INFO("u entry ", i);
        CHECK(breaks_something(wit));
    }
    for (std::size_t i = 0; i < clean.v_map.size(); ++i) {
        ProductWitness wit = clean;
        wit.v_map[i] = static_cast<EventId>((wit.v_map[i] + 1) % n);
        INFO("v entry ", i);
        CHECK(breaks_something(wit));
    }
    for (std::size_t i = 0; i < clean.phi_map.size(); ++i)
        for (std::size_t j = 0; j < clean.phi_map[i].size(); ++j) {
            ProductWitness wit = clean;
            wit.phi_map[i][j] = static_cast<EventId>((wit.phi_map[i][j] + 1) % n);
            INFO("phi entry ", i, ",", j);
            CHECK(breaks_something(wit));
        }
}

TEST_CASE("atoms identity on the binary scenario and the Boolean single-context world") {
    const BoxWorld w(kBinary, kBinary);
    CHECK(verify_atoms_product(w, w.build_product_witness()));
    const BoxWorld one_ctx(BoxSpec{{2}}, BoxSpec{{2}});
    CHECK(verify_atoms_product(one_ctx, one_ctx.build_product_witness()));
}

TEST_CASE("the atoms identity coexists with non-Boolean regular components") {
    const BoxWorld w(kBinary, kBinary);
    CHECK(verify_atoms_product(w, w.build_product_witness()));
    CHECK(!w.left_logic().is_boolean());
    CHECK(!w.right_logic().is_boolean());
    CHECK(w.left_logic().is_regular());
    CHECK(w.right_logic().is_regular());
    CHECK(w.logic().is_regular());
}

TEST_CASE("strong tensor product on the binary scenario") {
    const BoxWorld w(kBinary, kBinary);
    const Report r = verify_strong_tensor_product(w, w.build_product_witness());
    for (const auto& c : r.checks) {
        INFO(c.check_id);
        CHECK(c.pass);
    }
    CHECK(r.checks.size() == 3);
}

TEST_CASE("strong tensor product on the (2,3)x(2,2) world") {
    const BoxWorld w(BoxSpec{{2, 3}}, BoxSpec{{2, 2}});
    CHECK(verify_strong_tensor_product(w, w.build_product_witness()).all_pass());
}

TEST_CASE("richness fails when the state family is only the uniform product") {
    const BoxWorld w(kBinary, kBinary);
    const std::vector<Behavior> uniform_only{Behavior::uniform(kBinary, kBinary)};
    CHECK(!is_rich(uniform_only, w));
}

TEST_CASE("weak conditions certified on the binary-scenario vertex set") {
    const BoxWorld w(kBinary, kBinary);
    const StatePolytope poly = ns_polytope(w);
    const Report r = verify_weak_conditions(w, w.build_product_witness(), poly.vertices());
    REQUIRE(r.find("weak_tp.vertex_superpositions") != nullptr);
    REQUIRE(r.find("weak_tp.support_filters") != nullptr);
    CHECK(r.find("weak_tp.vertex_superpositions")->pass);
    CHECK(r.find("weak_tp.support_filters")->pass);
    CHECK(r.find("weak_tp.support_filters")->counts.at("certification") == "vertex");
}

TEST_CASE("set representability of generated logics and powersets") {
    const BoxWorld w(kBinary, kBinary);
    CHECK(is_set_representable(w.logic()));
    CHECK(is_set_representable(w.left_logic()));
    CHECK(is_set_representable(single_box_logic(BoxSpec{{3}})));
}

TEST_CASE("full pipeline over the two-and-three-outcome grid within budget") {
    constexpr std::size_t kSweepBudget = 1600;
    std::size_t verified = 0, skipped = 0;
    for (const auto& world : grid_worlds()) {
        try {
            const BoxWorld w(BoxSpec{world.first}, BoxSpec{world.second}, kSweepBudget);
            const ProductWitness wit = w.build_product_witness();
            INFO("world ", world.first.size(), "x", world.second.size());
            CHECK(verify_free_orthodistributive(w, wit).all_pass());
            CHECK(verify_atoms_product(w, wit));
            CHECK(verify_strong_tensor_product(w, wit).all_pass());
            ++verified;
        } catch (const BudgetError&) {
            ++skipped;
        }
    }
    // the budget must admit the scenarios the acceptance gate cares about
    CHECK(verified >= 20);
    CHECK(verified + skipped == grid_worlds().size());
}
