#include "boxlogic/box_world.hpp"

#include <algorithm>

namespace boxlogic {

namespace {

std::vector<BitVec> single_box_generators(const GroundSet& ground, const BoxSpec& spec) {
    std::vector<BitVec> gens;
    for (int a = 0; a < spec.input_count(); ++a)
        for (int alpha = 0; alpha < spec.outcome_sizes[a]; ++alpha) {
            BitVec e(ground.size());
            for (std::size_t pt = 0; pt < ground.size(); ++pt)
                if (ground.digit(pt, a) == alpha) e.set(pt);
            gens.push_back(std::move(e));
        }
    return gens;
}

} // namespace

ConcreteLogic single_box_logic(const BoxSpec& spec, std::size_t element_budget) {
    spec.validate();
    GroundSet ground = GroundSet::single(spec.outcome_sizes);
    const auto gens = single_box_generators(ground, spec);
    return ConcreteLogic::generate(std::move(ground), gens, element_budget);
}

ConcreteLogic two_box_logic(const BoxSpec& left, const BoxSpec& right,
                            std::size_t element_budget) {
    left.validate();
    right.validate();
    GroundSet ground = GroundSet::composite(left.outcome_sizes, right.outcome_sizes);
    const std::size_t n2 = ground.right_size();
    std::vector<BitVec> gens;
    for (int a = 0; a < left.input_count(); ++a)
        for (int b = 0; b < right.input_count(); ++b)
            for (int alpha = 0; alpha < left.outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < right.outcome_sizes[b]; ++beta) {
                    BitVec e(ground.size());
                    for (std::size_t ix = 0; ix < ground.left_size(); ++ix) {
                        if (ground.digit(ix * n2, a) != alpha) continue;
                        for (std::size_t iy = 0; iy < n2; ++iy)
                            if (ground.digit(iy, static_cast<std::size_t>(left.input_count()) + b) == beta)
                                e.set(ground.fuse(ix, iy));
                    }
                    gens.push_back(std::move(e));
                }
    return ConcreteLogic::generate(std::move(ground), gens, element_budget);
}

BoxWorld::BoxWorld(BoxSpec left, BoxSpec right, std::size_t element_budget)
    : left_(std::move(left)),
      right_(std::move(right)),
      left_logic_(single_box_logic(left_, element_budget)),
      right_logic_(single_box_logic(right_, element_budget)),
      logic_(two_box_logic(left_, right_, element_budget)) {
    // lexicographically least representative per atom
    atom_sites_.assign(logic_.atoms().size(), AtomSite{-1, -1, -1, -1});
    for (int a = 0; a < left_.input_count(); ++a)
        for (int b = 0; b < right_.input_count(); ++b)
            for (int alpha = 0; alpha < left_.outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < right_.outcome_sizes[b]; ++beta) {
                    const BitVec m = question_members(a, std::vector<int>{alpha},
                                                      b, std::vector<int>{beta});
                    const auto id = logic_.find(m);
                    if (!id) throw InternalError("joint-outcome event missing from the logic");
                    // with one-outcome inputs a joint-outcome event can
                    // properly contain another; only the minimal ones are atoms
                    const auto at = std::find(logic_.atoms().begin(), logic_.atoms().end(), *id);
                    if (at == logic_.atoms().end()) continue;
                    auto& site = atom_sites_[at - logic_.atoms().begin()];
                    if (site.a < 0) site = AtomSite{a, b, alpha, beta};
                }
    for (const auto& site : atom_sites_)
        if (site.a < 0) throw InternalError("atom without a joint-outcome representative");
}

BitVec BoxWorld::left_cylinder_members(int a, std::span<const int> A) const {
    if (a < 0 || a >= left_.input_count()) throw InputError("left input out of range");
    BitVec e(gamma1().size());
    for (const int alpha : A) {
        if (alpha < 0 || alpha >= left_.outcome_sizes[a])
            throw InputError("left outcome out of range");
        for (std::size_t pt = 0; pt < gamma1().size(); ++pt)
            if (gamma1().digit(pt, a) == alpha) e.set(pt);
    }
    return e;
}

BitVec BoxWorld::right_cylinder_members(int b, std::span<const int> B) const {
    if (b < 0 || b >= right_.input_count()) throw InputError("right input out of range");
    BitVec e(gamma2().size());
    for (const int beta : B) {
        if (beta < 0 || beta >= right_.outcome_sizes[b])
            throw InputError("right outcome out of range");
        for (std::size_t pt = 0; pt < gamma2().size(); ++pt)
            if (gamma2().digit(pt, b) == beta) e.set(pt);
    }
    return e;
}

BitVec BoxWorld::question_members(int a, std::span<const int> A,
                                  int b, std::span<const int> B) const {
    const BitVec lx = left_cylinder_members(a, A);
    const BitVec ry = right_cylinder_members(b, B);
    BitVec e(gamma().size());
    lx.for_each_set([&](std::size_t ix) {
        ry.for_each_set([&](std::size_t iy) { e.set(gamma().fuse(ix, iy)); });
    });
    return e;
}

EventId BoxWorld::question_event(int a, std::span<const int> A,
                                 int b, std::span<const int> B) const {
    return logic_.require(question_members(a, A, b, B));
}

EventId BoxWorld::embed_left(EventId p) const {
    if (p >= left_logic_.size()) throw InputError("left-logic event id out of range");
    const BitVec& m = left_logic_.members(p);
    BitVec e(gamma().size());
    m.for_each_set([&](std::size_t ix) {
        for (std::size_t iy = 0; iy < gamma().right_size(); ++iy) e.set(gamma().fuse(ix, iy));
    });
    return logic_.require(e);
}

EventId BoxWorld::embed_right(EventId q) const {
    if (q >= right_logic_.size()) throw InputError("right-logic event id out of range");
    const BitVec& m = right_logic_.members(q);
    BitVec e(gamma().size());
    for (std::size_t ix = 0; ix < gamma().left_size(); ++ix)
        m.for_each_set([&](std::size_t iy) { e.set(gamma().fuse(ix, iy)); });
    return logic_.require(e);
}

SingleBoxEventShape BoxWorld::classify(const ConcreteLogic& logic, const BoxSpec& spec,
                                       EventId id) const {
    if (id >= logic.size()) throw InputError("event id out of range");
    const BitVec& m = logic.members(id);
    if (m.none()) return EventIsEmpty{};
    if (m.count() == logic.ground().size()) return EventIsFull{};
    for (int a = 0; a < spec.input_count(); ++a) {
        std::vector<int> outcomes;
        for (int alpha = 0; alpha < spec.outcome_sizes[a]; ++alpha) {
            // cylinder [a alpha] inside m?
            bool inside = true, seen = false;
            for (std::size_t pt = 0; pt < logic.ground().size() && inside; ++pt)
                if (logic.ground().digit(pt, a) == alpha) {
                    seen = true;
                    if (!m.test(pt)) inside = false;
                }
            if (seen && inside) outcomes.push_back(alpha);
        }
        if (outcomes.empty()) continue;
        BitVec rebuilt(logic.ground().size());
        for (std::size_t pt = 0; pt < logic.ground().size(); ++pt)
            if (std::find(outcomes.begin(), outcomes.end(),
                          logic.ground().digit(pt, a)) != outcomes.end())
                rebuilt.set(pt);
        if (rebuilt == m) return EventIsCylinder{a, std::move(outcomes)};
    }
    throw InternalError("single-box event is not empty, full, or a cylinder");
}

SingleBoxEventShape BoxWorld::classify_left_event(EventId p) const {
    return classify(left_logic_, left_, p);
}
SingleBoxEventShape BoxWorld::classify_right_event(EventId q) const {
    return classify(right_logic_, right_, q);
}

ProductWitness BoxWorld::build_product_witness() const {
    ProductWitness wit;
    wit.u_map.resize(left_logic_.size());
    wit.v_map.resize(right_logic_.size());
    for (EventId p = 0; p < left_logic_.size(); ++p) wit.u_map[p] = embed_left(p);
    for (EventId q = 0; q < right_logic_.size(); ++q) wit.v_map[q] = embed_right(q);
    wit.phi_map.assign(left_logic_.size(), std::vector<EventId>(right_logic_.size()));
    for (EventId p = 0; p < left_logic_.size(); ++p)
        for (EventId q = 0; q < right_logic_.size(); ++q) {
            // pairing image: the set product, realized as the meet u(p) & v(q)
            const BitVec m =
                logic_.members(wit.u_map[p]) & logic_.members(wit.v_map[q]);
            wit.phi_map[p][q] = logic_.require(m);
        }
    return wit;
}

} // namespace boxlogic
