#pragma once

#include "boxlogic/polytope.hpp"

namespace boxlogic {

/// Free orthodistributive product axioms, exhaustively over the witness
/// tables:
///   free_product.embeddings          u, v injective logic monomorphisms
///   free_product.generates           images generate the composite family
///                                    (closure under complement, disjoint
///                                    union, and meets available in it)
///   free_product.meets_nondegenerate u(a) ^ v(b) = 0 iff a = 0 or b = 0
///   free_product.cross_compatibility u(a) <-> v(b) for every pair
Report verify_free_orthodistributive(const BoxWorld& w, const ProductWitness& wit);

/// atoms(L) = { u(p) ^ v(q) : p, q component atoms }, as sets.
bool verify_atoms_product(const BoxWorld& w, const ProductWitness& wit);

/// Strong tensor product conditions:
///   strong_tp.product_rule  product states factor through the pairing map
///                           on every event pair, for all two-valued
///                           component states
///   strong_tp.rich          the product two-valued states are rich
///   strong_tp.generates     the pairing-map image generates the family
Report verify_strong_tensor_product(const BoxWorld& w, const ProductWitness& wit);

/// Weak tensor product conditions, certified on the polytope vertex set:
///   weak_tp.vertex_superpositions  every vertex is a superposition of the
///                                  product two-valued states
///   weak_tp.support_filters        for every c that is a meet of pairing
///                                  images (or a one-sided image), the
///                                  vertices valuing c at 1 are exactly the
///                                  superposition filter of the product
///                                  states valuing c at 1
Report verify_weak_conditions(const BoxWorld& w, const ProductWitness& wit,
                              std::span<const Behavior> vertices);

/// A logic is set-representable iff it has a rich set of two-valued states;
/// for a concrete logic the point evaluations provide one, and this checks
/// that they do.
bool is_set_representable(const ConcreteLogic& logic);

} // namespace boxlogic
