#pragma once

#include "boxlogic/event.hpp"
#include "boxlogic/ground_set.hpp"
#include "boxlogic/report.hpp"

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace boxlogic {

inline constexpr std::size_t kDefaultElementBudget = std::size_t{1} << 20;

/// A finite concrete quantum logic: a family of subsets of an enumerated
/// ground set, ordered by inclusion, with set complement as the
/// orthocomplement. Families produced by `generate` contain the empty and
/// full sets and are closed under complement and disjoint binary union;
/// `from_family` keeps an arbitrary deduplicated family so closure defects
/// can be audited via `verify_axioms`.
///
/// Immutable after construction; all queries are safe under concurrent reads.
class ConcreteLogic {
public:
    /// Closure of the generators under complement and binary disjoint union,
    /// by worklist to fixpoint. Throws BudgetError once the family exceeds
    /// `element_budget` members, InputError for generators of the wrong width.
    static ConcreteLogic generate(GroundSet ground, std::span<const BitVec> generators,
                                  std::size_t element_budget = kDefaultElementBudget);

    /// Wraps a family as-is (deduplicated, canonically sorted). No closure.
    static ConcreteLogic from_family(GroundSet ground, std::span<const BitVec> family);

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return events_.size(); }
    const Event& event(EventId id) const { return events_[id]; }
    const BitVec& members(EventId id) const { return events_[id].members; }

    std::optional<EventId> find(const BitVec& members) const;
    EventId require(const BitVec& members) const; // InputError if absent
    bool contains(const BitVec& members) const { return find(members).has_value(); }

    EventId empty_id() const { return empty_id_; }
    EventId full_id() const { return full_id_; }

    /// Family equality as sets of subsets (ground sets must agree).
    bool same_family(const ConcreteLogic& other) const;

    // ---- order-theoretic queries -------------------------------------------

    bool leq(EventId p, EventId q) const;
    EventId orthocomplement(EventId p) const;

    /// Union of pairwise disjoint members; InputError on overlap, and an
    /// InternalError if the union escaped the family (impossible for
    /// generated logics). The empty list yields the empty event.
    EventId join_disjoint(std::span<const EventId> ps) const;

    /// Least upper / greatest lower bound within the family, if one exists.
    std::optional<EventId> join(EventId p, EventId q) const;
    std::optional<EventId> meet(EventId p, EventId q) const;

    /// Greatest member contained in `cap` (the meet of the family of all
    /// members below `cap`), if it exists.
    std::optional<EventId> meet_below(const BitVec& cap) const;

    const std::vector<EventId>& atoms() const { return atoms_; }
    bool is_atomistic() const;

    // ---- compatibility -----------------------------------------------------

    /// p and q admit a pairwise-disjoint decomposition p = p1 + r, q = q1 + r
    /// within the family. In a concrete logic the only candidate is
    /// r = p & q, so this reduces to membership of the intersection.
    bool compatible(EventId p, EventId q) const;

    /// A finite set is compatible iff every intersection pattern it carves
    /// out of the ground set is itself a member; the nonempty patterns form
    /// the disjoint refinement G whose unions recover each input. When
    /// `partition` is non-null the refinement is stored there.
    bool set_compatible(std::span<const EventId> ps,
                        std::vector<BitVec>* partition = nullptr) const;

    /// The Boolean sublogic generated by a disjoint refinement: every union
    /// of a subset of the partition, resolved to member ids.
    std::vector<EventId> boolean_sublogic(std::span<const BitVec> partition) const;

    /// Every mutually compatible triple {a,b,c} satisfies a <-> (b v c).
    bool is_regular() const;

    // ---- global structure --------------------------------------------------

    bool is_lattice() const;
    bool is_boolean() const;

    /// Per-axiom pass/fail with counterexample witnesses: poset axioms
    /// (bounds, order-reversing involutive complement, orthogonal suprema,
    /// orthomodular law) and the set-family closure axioms.
    Report verify_axioms() const;

private:
    ConcreteLogic(GroundSet ground) : ground_(std::move(ground)) {}

    void finalize(std::vector<Event> events);
    void compute_atoms();

    GroundSet ground_;
    std::vector<Event> events_; // canonically sorted by members
    std::unordered_map<BitVec, EventId, BitVecHash> index_;
    std::vector<EventId> atoms_;
    EventId empty_id_ = 0;
    EventId full_id_ = 0;
};

/// Free-function spellings used throughout the tests and the CLI.
inline ConcreteLogic generate_logic(GroundSet ground, std::span<const BitVec> generators,
                                    std::size_t element_budget = kDefaultElementBudget) {
    return ConcreteLogic::generate(std::move(ground), generators, element_budget);
}
inline Report verify_logic_axioms(const ConcreteLogic& logic) { return logic.verify_axioms(); }

} // namespace boxlogic
