#pragma once

#include "boxlogic/behavior.hpp"

#include <span>

namespace boxlogic {

/// One pairwise-disjoint atom decomposition of a composite-logic event,
/// found by depth-first search branching on the uncovered point with the
/// fewest candidate atoms. Deterministic. Throws InternalError if no
/// decomposition exists (impossible for generated families).
std::vector<std::uint32_t> exact_cover_atoms(const BoxWorld& w, const BitVec& members);

/// State value of a composite event: decompose into disjoint atoms, sum the
/// table entries. No-signaling makes the result cover-independent (verified
/// by the test suite rather than assumed).
Rational evaluate(const Behavior& s, const BoxWorld& w, EventId p);
Rational evaluate(const Behavior& s, const BoxWorld& w, const BitVec& members);

enum class Side { Left, Right };

/// Component-state value of a single-box event via its cylinder shape.
Rational evaluate(const ComponentState& s, const BoxWorld& w, Side side, EventId p);

/// Values over every member of the composite logic, indexed by EventId.
std::vector<Rational> value_table(const Behavior& s, const BoxWorld& w);

/// All 0/1 states of the composite logic. These are exactly the point
/// evaluations of the phase space: one deterministic behavior per
/// (left point, right point) pair.
std::vector<TwoValuedState> enumerate_two_valued_states(const BoxWorld& w);

/// All 0/1 states of one box: one deterministic outcome per input.
std::vector<ComponentState> enumerate_two_valued_states(const BoxSpec& spec);

/// Splits a two-valued composite state into deterministic component states
/// via the rectangle structure of its support set: the joint choice must be
/// a product of a per-left-input and a per-right-input choice. Throws
/// InputError naming the offending context pair otherwise.
std::pair<ComponentState, ComponentState> factorize_two_valued(const BoxWorld& w,
                                                               const TwoValuedState& chi);

/// S is rich when the value-1 sets of its states determine the order:
/// whenever p is not below q some state values p at 1 and q below 1.
bool is_rich(std::span<const Behavior> S, const BoxWorld& w);

/// mu is a superposition of S when it vanishes on every event annihilated
/// by all of S.
bool is_superposition(const Behavior& mu, std::span<const Behavior> S, const BoxWorld& w);

/// The members of `candidates` that are superpositions of S.
std::vector<Behavior> superposition_closure_members(std::span<const Behavior> candidates,
                                                    std::span<const Behavior> S,
                                                    const BoxWorld& w);

} // namespace boxlogic
