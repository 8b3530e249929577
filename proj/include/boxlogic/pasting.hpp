#pragma once

#include "boxlogic/concrete_logic.hpp"

#include <span>

namespace boxlogic {

/// A finite bounded poset with an orthocomplement map, detached from any set
/// representation. Used to compare a concrete realization against the
/// abstract quotient view of a 0-1-pasting.
struct AbstractLogic {
    std::size_t n = 0;
    std::vector<BitVec> upset; // row i: bit j set iff i <= j
    std::vector<std::uint32_t> comp;

    bool leq(std::size_t i, std::size_t j) const { return upset[i].test(j); }
};

AbstractLogic to_abstract(const ConcreteLogic& logic);

/// The concrete realization of the 0-1-pasting of Boolean powerset blocks:
/// over the product ground set, the family of the empty set, the full set,
/// and every cylinder [a in A] for proper nonempty A. Throws InputError if
/// the block list is empty or a block is not a full powerset.
ConcreteLogic zero_one_pasting(std::span<const ConcreteLogic> blocks);

/// The abstract quotient view: disjoint union of the blocks glued at their
/// least and greatest elements.
AbstractLogic zero_one_pasting_abstract(std::span<const ConcreteLogic> blocks);

/// Existence of an order- and complement-preserving bijection, by
/// backtracking seeded with iterated degree-profile refinement.
bool are_isomorphic(const AbstractLogic& a, const AbstractLogic& b,
                    std::size_t element_budget = 4096);

inline bool are_isomorphic(const ConcreteLogic& a, const ConcreteLogic& b,
                           std::size_t element_budget = 4096) {
    return are_isomorphic(to_abstract(a), to_abstract(b), element_budget);
}
inline bool are_isomorphic(const ConcreteLogic& a, const AbstractLogic& b,
                           std::size_t element_budget = 4096) {
    return are_isomorphic(to_abstract(a), b, element_budget);
}

} // namespace boxlogic
