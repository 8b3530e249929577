#pragma once

#include "boxlogic/concrete_logic.hpp"

#include <span>
#include <variant>

namespace boxlogic {

/// One party's device: how many inputs it accepts and how many outcomes each
/// input has. Inputs are 0-based internally; the CLI surfaces them 1-based.
struct BoxSpec {
    std::vector<int> outcome_sizes;

    int input_count() const { return static_cast<int>(outcome_sizes.size()); }
    std::size_t phase_space_size() const {
        std::size_t n = 1;
        for (int k : outcome_sizes) n *= static_cast<std::size_t>(k);
        return n;
    }
    void validate() const {
        if (outcome_sizes.empty()) throw InputError("box needs at least one input");
        for (int k : outcome_sizes)
            if (k < 1) throw InputError("every input needs at least one outcome");
    }
    friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

/// The logic of a single box: generated over its phase space by the
/// single-outcome cylinders; a 0-1-pasting of the per-input powersets.
ConcreteLogic single_box_logic(const BoxSpec& spec,
                               std::size_t element_budget = kDefaultElementBudget);

/// The two-box composite logic, generated by the joint-outcome events.
ConcreteLogic two_box_logic(const BoxSpec& left, const BoxSpec& right,
                            std::size_t element_budget = kDefaultElementBudget);

/// Representative context and outcome pair of an atom of the composite
/// logic (lexicographically least when degenerate inputs make several
/// contexts carve out the same set).
struct AtomSite {
    int a, b, alpha, beta;
};

/// The embeddings u, v and the pairing map realized as explicit index
/// tables between the component logics and the composite one.
struct ProductWitness {
    std::vector<EventId> u_map;               // by left-logic event id
    std::vector<EventId> v_map;               // by right-logic event id
    std::vector<std::vector<EventId>> phi_map; // [left id][right id]
};

struct EventIsEmpty {};
struct EventIsFull {};
struct EventIsCylinder {
    int input;
    std::vector<int> outcomes;
};
using SingleBoxEventShape = std::variant<EventIsEmpty, EventIsFull, EventIsCylinder>;

/// Phase spaces and logics of a two-party box world, plus the structural
/// maps between them. Immutable after construction.
class BoxWorld {
public:
    BoxWorld(BoxSpec left, BoxSpec right,
             std::size_t element_budget = kDefaultElementBudget);

    const BoxSpec& left() const { return left_; }
    const BoxSpec& right() const { return right_; }
    const GroundSet& gamma1() const { return left_logic_.ground(); }
    const GroundSet& gamma2() const { return right_logic_.ground(); }
    const GroundSet& gamma() const { return logic_.ground(); }
    const ConcreteLogic& left_logic() const { return left_logic_; }
    const ConcreteLogic& right_logic() const { return right_logic_; }
    const ConcreteLogic& logic() const { return logic_; }

    /// Joint question members {(x,y) : x_a in A, y_b in B} as a raw set.
    BitVec question_members(int a, std::span<const int> A,
                            int b, std::span<const int> B) const;

    /// The same, resolved in the composite logic (InputError when the
    /// inputs or outcomes are out of range).
    EventId question_event(int a, std::span<const int> A,
                           int b, std::span<const int> B) const;

    /// Cylinder extensions of component events into the composite logic;
    /// injective, order- and complement-preserving.
    EventId embed_left(EventId p) const;
    EventId embed_right(EventId q) const;

    /// Classifies a component-logic event as empty, full, or a cylinder
    /// [input in outcomes]; every member of a single-box logic is one of
    /// these.
    SingleBoxEventShape classify_left_event(EventId p) const;
    SingleBoxEventShape classify_right_event(EventId q) const;

    /// Full u, v and pairing tables over the component logics.
    ProductWitness build_product_witness() const;

    /// Parallel to logic().atoms().
    const std::vector<AtomSite>& atom_sites() const { return atom_sites_; }

    BitVec left_cylinder_members(int a, std::span<const int> A) const;
    BitVec right_cylinder_members(int b, std::span<const int> B) const;

private:
    SingleBoxEventShape classify(const ConcreteLogic& logic, const BoxSpec& spec,
                                 EventId id) const;

    BoxSpec left_, right_;
    ConcreteLogic left_logic_;
    ConcreteLogic right_logic_;
    ConcreteLogic logic_;
    std::vector<AtomSite> atom_sites_;
};

} // namespace boxlogic
