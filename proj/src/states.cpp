#include "boxlogic/states.hpp"

namespace boxlogic {

namespace {

/// Deterministic phase-space point of a two-valued behavior, via marginals.
std::pair<std::vector<int>, std::vector<int>> support_point(const Behavior& s) {
    std::vector<int> x(s.left().input_count()), y(s.right().input_count());
    for (int a = 0; a < s.left().input_count(); ++a) {
        int hits = 0;
        for (int alpha = 0; alpha < s.left().outcome_sizes[a]; ++alpha)
            if (s.left_marginal(a, alpha).is_one()) {
                x[a] = alpha;
                ++hits;
            }
        if (hits != 1) throw InternalError("two-valued behavior without deterministic marginal");
    }
    for (int b = 0; b < s.right().input_count(); ++b) {
        int hits = 0;
        for (int beta = 0; beta < s.right().outcome_sizes[b]; ++beta)
            if (s.right_marginal(b, beta).is_one()) {
                y[b] = beta;
                ++hits;
            }
        if (hits != 1) throw InternalError("two-valued behavior without deterministic marginal");
    }
    return {x, y};
}

void check_scenario(const Behavior& s, const BoxWorld& w) {
    if (s.left() != w.left() || s.right() != w.right())
        throw InputError("behavior scenario does not match the box world");
}

} // namespace

std::vector<std::uint32_t> exact_cover_atoms(const BoxWorld& w, const BitVec& members) {
    const ConcreteLogic& L = w.logic();
    if (members.bits() != L.ground().size())
        throw InputError("event width does not match the composite ground set");

    std::vector<std::uint32_t> candidates;
    for (std::uint32_t i = 0; i < L.atoms().size(); ++i)
        if (L.members(L.atoms()[i]).subset_of(members)) candidates.push_back(i);

    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> live = candidates;

    const auto rec = [&](auto&& self, const BitVec& rem) -> bool {
        if (rem.none()) return true;
        // branch on the uncovered point with the fewest candidate atoms
        std::size_t best_pt = rem.bits();
        std::size_t best_count = SIZE_MAX;
        rem.for_each_set([&](std::size_t pt) {
            std::size_t cnt = 0;
            for (const std::uint32_t c : live)
                if (L.members(L.atoms()[c]).subset_of(rem) &&
                    L.members(L.atoms()[c]).test(pt))
                    ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best_pt = pt;
            }
        });
        if (best_count == 0 || best_count == SIZE_MAX) return false;
        for (const std::uint32_t c : live) {
            const BitVec& am = L.members(L.atoms()[c]);
            if (!am.test(best_pt) || !am.subset_of(rem)) continue;
            chosen.push_back(c);
            if (self(self, rem.and_not(am))) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (!rec(rec, members))
        throw InternalError("no exact atom cover for event " + members.to_hex());
    return chosen;
}

Rational evaluate(const Behavior& s, const BoxWorld& w, const BitVec& members) {
    check_scenario(s, w);
    if (s.is_two_valued()) {
        // a 0/1 behavior is the point evaluation of its support point: each
        // atom in any disjoint cover contributes its indicator value
        const auto [x, y] = support_point(s);
        const std::size_t ix = w.gamma1().encode(x);
        const std::size_t iy = w.gamma2().encode(y);
        return members.test(w.gamma().fuse(ix, iy)) ? Rational(1) : Rational(0);
    }
    Rational value;
    for (const std::uint32_t c : exact_cover_atoms(w, members)) {
        const AtomSite& at = w.atom_sites()[c];
        value += s.prob(at.a, at.b, at.alpha, at.beta);
    }
    return value;
}

Rational evaluate(const Behavior& s, const BoxWorld& w, EventId p) {
    if (p >= w.logic().size()) throw InputError("event id out of range");
    return evaluate(s, w, w.logic().members(p));
}

Rational evaluate(const ComponentState& s, const BoxWorld& w, Side side, EventId p) {
    const auto shape = side == Side::Left ? w.classify_left_event(p) : w.classify_right_event(p);
    if (std::holds_alternative<EventIsEmpty>(shape)) return Rational(0);
    if (std::holds_alternative<EventIsFull>(shape)) return Rational(1);
    const auto& cyl = std::get<EventIsCylinder>(shape);
    Rational value;
    for (const int o : cyl.outcomes) value += s.prob(cyl.input, o);
    return value;
}

std::vector<Rational> value_table(const Behavior& s, const BoxWorld& w) {
    std::vector<Rational> out(w.logic().size());
    for (EventId p = 0; p < w.logic().size(); ++p) out[p] = evaluate(s, w, p);
    return out;
}

std::vector<ComponentState> enumerate_two_valued_states(const BoxSpec& spec) {
    spec.validate();
    const GroundSet g = GroundSet::single(spec.outcome_sizes);
    std::vector<ComponentState> out;
    out.reserve(g.size());
    for (std::size_t pt = 0; pt < g.size(); ++pt)
        out.push_back(ComponentState::deterministic(spec, g.decode(pt)));
    return out;
}

std::vector<TwoValuedState> enumerate_two_valued_states(const BoxWorld& w) {
    const auto mus = enumerate_two_valued_states(w.left());
    const auto nus = enumerate_two_valued_states(w.right());
    std::vector<TwoValuedState> out;
    out.reserve(mus.size() * nus.size());
    for (const auto& mu : mus)
        for (const auto& nu : nus)
            out.push_back(TwoValuedState::from_behavior(product_state(mu, nu)));
    return out;
}

std::pair<ComponentState, ComponentState> factorize_two_valued(const BoxWorld& w,
                                                               const TwoValuedState& chi) {
    check_scenario(chi.behavior, w);
    const int N = w.left().input_count(), M = w.right().input_count();
    // rectangle structure: the chosen left outcome cannot depend on the right
    // input, nor the right outcome on the left input
    std::vector<int> x(N), y(M);
    for (int a = 0; a < N; ++a) {
        x[a] = chi.support[a][0].first;
        for (int b = 1; b < M; ++b)
            if (chi.support[a][b].first != x[a])
                throw InputError(
                    "support is not a product set: atoms [" + std::to_string(a + 1) + " " +
                    std::to_string(x[a]) + ", " + std::to_string(1) + " " +
                    std::to_string(chi.support[a][0].second) + "] and [" +
                    std::to_string(a + 1) + " " + std::to_string(chi.support[a][b].first) +
                    ", " + std::to_string(b + 1) + " " + std::to_string(chi.support[a][b].second) +
                    "] pick different left outcomes");
    }
    for (int b = 0; b < M; ++b) {
        y[b] = chi.support[0][b].second;
        for (int a = 1; a < N; ++a)
            if (chi.support[a][b].second != y[b])
                throw InputError(
                    "support is not a product set: atoms [" + std::to_string(1) + " " +
                    std::to_string(chi.support[0][b].first) + ", " + std::to_string(b + 1) +
                    " " + std::to_string(y[b]) + "] and [" + std::to_string(a + 1) + " " +
                    std::to_string(chi.support[a][b].first) + ", " + std::to_string(b + 1) +
                    " " + std::to_string(chi.support[a][b].second) +
                    "] pick different right outcomes");
    }
    auto mu = ComponentState::deterministic(w.left(), x);
    auto nu = ComponentState::deterministic(w.right(), y);
    if (!(product_state(mu, nu) == chi.behavior))
        throw InternalError("factorization does not reproduce the two-valued state");
    return {std::move(mu), std::move(nu)};
}

bool is_rich(std::span<const Behavior> S, const BoxWorld& w) {
    const ConcreteLogic& L = w.logic();
    // per-event bitmask over S of the states valuing it 1
    std::vector<BitVec> ones(L.size(), BitVec(S.size()));
    for (std::size_t s = 0; s < S.size(); ++s) {
        const auto vals = value_table(S[s], w);
        for (EventId p = 0; p < L.size(); ++p)
            if (vals[p].is_one()) ones[p].set(s);
    }
    for (EventId p = 0; p < L.size(); ++p)
        for (EventId q = 0; q < L.size(); ++q) {
            if (L.members(p).subset_of(L.members(q))) continue;
            // need a state with value 1 on p and below 1 on q
            if (ones[p].and_not(ones[q]).none()) return false;
        }
    return true;
}

bool is_superposition(const Behavior& mu, std::span<const Behavior> S, const BoxWorld& w) {
    const ConcreteLogic& L = w.logic();
    std::vector<std::vector<Rational>> tables;
    tables.reserve(S.size());
    for (const auto& s : S) tables.push_back(value_table(s, w));
    for (EventId p = 0; p < L.size(); ++p) {
        bool all_null = true;
        for (const auto& t : tables)
            if (!t[p].is_zero()) {
                all_null = false;
                break;
            }
        if (all_null && !evaluate(mu, w, p).is_zero()) return false;
    }
    return true;
}

std::vector<Behavior> superposition_closure_members(std::span<const Behavior> candidates,
                                                    std::span<const Behavior> S,
                                                    const BoxWorld& w) {
    const ConcreteLogic& L = w.logic();
    std::vector<EventId> null_events;
    {
        std::vector<std::vector<Rational>> tables;
        tables.reserve(S.size());
        for (const auto& s : S) tables.push_back(value_table(s, w));
        for (EventId p = 0; p < L.size(); ++p) {
            bool all_null = true;
            for (const auto& t : tables)
                if (!t[p].is_zero()) {
                    all_null = false;
                    break;
                }
            if (all_null) null_events.push_back(p);
        }
    }
    std::vector<Behavior> out;
    for (const auto& c : candidates) {
        bool ok = true;
        for (const EventId p : null_events)
            if (!evaluate(c, w, p).is_zero()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(c);
    }
    return out;
}

} // namespace boxlogic
