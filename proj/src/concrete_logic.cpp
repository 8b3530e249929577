#include "boxlogic/concrete_logic.hpp"

#include <algorithm>
#include <deque>

namespace boxlogic {

namespace {

nlohmann::json event_hex(const BitVec& v) { return v.to_hex(); }

} // namespace

ConcreteLogic ConcreteLogic::generate(GroundSet ground, std::span<const BitVec> generators,
                                      std::size_t element_budget) {
    const std::size_t n = ground.size();
    for (const BitVec& g : generators)
        if (g.bits() != n) throw InputError("generator width does not match ground set");

    std::vector<Event> events;
    std::unordered_map<BitVec, EventId, BitVecHash> seen;
    std::deque<EventId> work;

    const auto add = [&](const BitVec& m, Certificate cert) -> bool {
        if (seen.contains(m)) return false;
        if (events.size() >= element_budget)
            throw BudgetError("logic closure exceeded the element budget of " +
                              std::to_string(element_budget));
        const EventId id = static_cast<EventId>(events.size());
        seen.emplace(m, id);
        events.push_back({m, cert});
        work.push_back(id);
        // keep the family complement-closed as it grows
        const BitVec c = m.complement();
        if (!seen.contains(c)) {
            if (events.size() >= element_budget)
                throw BudgetError("logic closure exceeded the element budget of " +
                                  std::to_string(element_budget));
            const EventId cid = static_cast<EventId>(events.size());
            seen.emplace(c, cid);
            events.push_back({c, {CertKind::ComplementOf, id, 0}});
            work.push_back(cid);
        }
        return true;
    };

    add(BitVec::zeros(n), {CertKind::Empty, 0, 0});
    if (!seen.contains(BitVec::ones(n))) add(BitVec::ones(n), {CertKind::Full, 0, 0});
    for (std::size_t i = 0; i < generators.size(); ++i)
        add(generators[i], {CertKind::Generator, static_cast<std::uint32_t>(i), 0});

    // worklist over pairs: each popped element meets everything present
    while (!work.empty()) {
        const EventId e = work.front();
        work.pop_front();
        const std::size_t bound = events.size(); // pairs with later arrivals happen on their turn
        for (EventId f = 0; f < bound; ++f) {
            if (f == e) continue;
            if (!events[e].members.disjoint_with(events[f].members)) continue;
            const BitVec u = events[e].members | events[f].members;
            add(u, {CertKind::DisjointUnionOf, e, f});
        }
    }

    ConcreteLogic logic(std::move(ground));
    logic.finalize(std::move(events));
    return logic;
}

ConcreteLogic ConcreteLogic::from_family(GroundSet ground, std::span<const BitVec> family) {
    const std::size_t n = ground.size();
    std::vector<Event> events;
    std::unordered_map<BitVec, EventId, BitVecHash> seen;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].bits() != n) throw InputError("event width does not match ground set");
        if (seen.contains(family[i])) continue;
        seen.emplace(family[i], static_cast<EventId>(events.size()));
        events.push_back({family[i], {CertKind::Generator, static_cast<std::uint32_t>(i), 0}});
    }
    if (events.empty()) throw InputError("a logic needs at least one event");
    ConcreteLogic logic(std::move(ground));
    logic.finalize(std::move(events));
    return logic;
}

void ConcreteLogic::finalize(std::vector<Event> events) {
    // canonical sorted order; certificates are remapped to sorted positions
    std::vector<EventId> order(events.size());
    for (EventId i = 0; i < events.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](EventId a, EventId b) {
        return events[a].members < events[b].members;
    });
    std::vector<EventId> rank(events.size());
    for (EventId pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;

    events_.reserve(events.size());
    for (EventId pos = 0; pos < order.size(); ++pos) {
        Event e = std::move(events[order[pos]]);
        if (e.cert.kind == CertKind::ComplementOf) {
            e.cert.a = rank[e.cert.a];
        } else if (e.cert.kind == CertKind::DisjointUnionOf) {
            e.cert.a = rank[e.cert.a];
            e.cert.b = rank[e.cert.b];
        }
        events_.push_back(std::move(e));
    }
    index_.reserve(events_.size());
    for (EventId i = 0; i < events_.size(); ++i) index_.emplace(events_[i].members, i);

    const auto empty = index_.find(BitVec::zeros(ground_.size()));
    const auto full = index_.find(BitVec::ones(ground_.size()));
    empty_id_ = empty == index_.end() ? static_cast<EventId>(events_.size()) : empty->second;
    full_id_ = full == index_.end() ? static_cast<EventId>(events_.size()) : full->second;
    compute_atoms();
}

void ConcreteLogic::compute_atoms() {
    atoms_.clear();
    for (EventId p = 0; p < events_.size(); ++p) {
        if (events_[p].members.none()) continue;
        bool minimal = true;
        for (EventId q = 0; q < events_.size() && minimal; ++q) {
            if (q == p || events_[q].members.none()) continue;
            if (events_[q].members.subset_of(events_[p].members) &&
                events_[q].members != events_[p].members)
                minimal = false;
        }
        if (minimal) atoms_.push_back(p);
    }
}

std::optional<EventId> ConcreteLogic::find(const BitVec& members) const {
    const auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EventId ConcreteLogic::require(const BitVec& members) const {
    const auto id = find(members);
    if (!id) throw InputError("event " + members.to_hex() + " is not a member of the logic");
    return *id;
}

bool ConcreteLogic::same_family(const ConcreteLogic& other) const {
    if (size() != other.size()) return false;
    for (EventId i = 0; i < size(); ++i)
        if (events_[i].members != other.events_[i].members) return false;
    return true;
}

bool ConcreteLogic::leq(EventId p, EventId q) const {
    if (p >= size() || q >= size()) throw InputError("event id out of range");
    return events_[p].members.subset_of(events_[q].members);
}

EventId ConcreteLogic::orthocomplement(EventId p) const {
    if (p >= size()) throw InputError("event id out of range");
    return require(events_[p].members.complement());
}

EventId ConcreteLogic::join_disjoint(std::span<const EventId> ps) const {
    BitVec u = BitVec::zeros(ground_.size());
    for (const EventId p : ps) {
        if (p >= size()) throw InputError("event id out of range");
        if (!u.disjoint_with(events_[p].members))
            throw InputError("join_disjoint requires pairwise disjoint events");
        u |= events_[p].members;
    }
    const auto id = find(u);
    if (!id)
        throw InternalError("disjoint union escaped the family: " + u.to_hex());
    return *id;
}

std::optional<EventId> ConcreteLogic::join(EventId p, EventId q) const {
    const BitVec lo = events_[p].members | events_[q].members;
    // least upper bound exists iff the intersection of all upper bounds is one
    BitVec cap = BitVec::ones(ground_.size());
    bool found = false;
    for (const auto& e : events_)
        if (lo.subset_of(e.members)) {
            cap &= e.members;
            found = true;
        }
    if (!found) return std::nullopt;
    const auto id = find(cap);
    if (!id || !lo.subset_of(events_[*id].members)) return std::nullopt;
    return id;
}

std::optional<EventId> ConcreteLogic::meet(EventId p, EventId q) const {
    return meet_below(events_[p].members & events_[q].members);
}

std::optional<EventId> ConcreteLogic::meet_below(const BitVec& cap) const {
    BitVec u = BitVec::zeros(ground_.size());
    for (const auto& e : events_)
        if (e.members.subset_of(cap)) u |= e.members;
    const auto id = find(u);
    if (!id) return std::nullopt;
    return id;
}

bool ConcreteLogic::is_atomistic() const {
    for (const auto& e : events_) {
        if (e.members.none()) continue;
        BitVec u = BitVec::zeros(ground_.size());
        for (const EventId a : atoms_)
            if (events_[a].members.subset_of(e.members)) u |= events_[a].members;
        if (u != e.members) return false;
    }
    return true;
}

bool ConcreteLogic::compatible(EventId p, EventId q) const {
    if (p >= size() || q >= size()) throw InputError("event id out of range");
    return contains(events_[p].members & events_[q].members);
}

bool ConcreteLogic::set_compatible(std::span<const EventId> ps,
                                   std::vector<BitVec>* partition) const {
    if (ps.size() > 20)
        throw BudgetError("set compatibility limited to 20 events (2^n regions)");
    for (const EventId p : ps)
        if (p >= size()) throw InputError("event id out of range");
    std::vector<BitVec> regions;
    const std::size_t combos = std::size_t{1} << ps.size();
    for (std::size_t mask = 1; mask < combos; ++mask) {
        BitVec r = BitVec::ones(ground_.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const BitVec& m = events_[ps[i]].members;
            r = (mask >> i) & 1 ? (r & m) : r.and_not(m);
        }
        if (r.none()) continue;
        if (!contains(r)) return false;
        regions.push_back(std::move(r));
    }
    if (partition) *partition = std::move(regions);
    return true;
}

std::vector<EventId> ConcreteLogic::boolean_sublogic(std::span<const BitVec> partition) const {
    if (partition.size() > 20)
        throw BudgetError("Boolean sublogic limited to 20 partition cells");
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (std::size_t j = i + 1; j < partition.size(); ++j)
            if (!partition[i].disjoint_with(partition[j]))
                throw InputError("partition cells must be pairwise disjoint");
    std::vector<EventId> out;
    const std::size_t combos = std::size_t{1} << partition.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        BitVec u = BitVec::zeros(ground_.size());
        for (std::size_t i = 0; i < partition.size(); ++i)
            if ((mask >> i) & 1) u |= partition[i];
        out.push_back(require(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ConcreteLogic::is_regular() const {
    const std::size_t n = size();
    // compatibility matrix as bitsets over event ids
    std::vector<BitVec> compat(n, BitVec(n));
    for (EventId i = 0; i < n; ++i)
        for (EventId j = i; j < n; ++j)
            if (contains(events_[i].members & events_[j].members)) {
                compat[i].set(j);
                compat[j].set(i);
            }
    for (EventId i = 0; i < n; ++i)
        for (EventId j = i; j < n; ++j) {
            if (!compat[i].test(j)) continue;
            const BitVec both = compat[i] & compat[j];
            for (EventId k = j; k < n; ++k) {
                if (!both.test(k)) continue;
                // all three role assignments of {i,j,k}
                const EventId t[3][3] = {{i, j, k}, {j, i, k}, {k, i, j}};
                for (const auto& r : t) {
                    // for compatible pairs in a closed family the join is the union
                    BitVec bc = events_[r[1]].members | events_[r[2]].members;
                    if (!contains(bc)) {
                        const auto j2 = join(r[1], r[2]);
                        if (!j2) return false;
                        bc = events_[*j2].members;
                    }
                    if (!contains(events_[r[0]].members & bc)) return false;
                }
            }
        }
    return true;
}

bool ConcreteLogic::is_lattice() const {
    for (EventId p = 0; p < size(); ++p)
        for (EventId q = p + 1; q < size(); ++q)
            if (!join(p, q)) return false;
    return true;
}

bool ConcreteLogic::is_boolean() const {
    if (!is_lattice()) return false;
    const std::size_t n = size();
    std::vector<std::vector<EventId>> jt(n, std::vector<EventId>(n));
    std::vector<std::vector<EventId>> mt(n, std::vector<EventId>(n));
    for (EventId p = 0; p < n; ++p)
        for (EventId q = p; q < n; ++q) {
            const auto j = join(p, q);
            const auto m = meet(p, q);
            if (!j || !m) return false; // finite lattice: meets follow joins
            jt[p][q] = jt[q][p] = *j;
            mt[p][q] = mt[q][p] = *m;
        }
    for (EventId p = 0; p < n; ++p)
        for (EventId q = 0; q < n; ++q)
            for (EventId r = 0; r < n; ++r)
                if (mt[p][jt[q][r]] != jt[mt[p][q]][mt[p][r]]) return false;
    return true;
}

Report ConcreteLogic::verify_axioms() const {
    Report report;
    const std::size_t n = size();

    // L1: greatest and least elements exist in the family
    {
        CheckResult c{.check_id = "L1.bounds"};
        std::optional<EventId> top, bottom;
        for (EventId p = 0; p < n; ++p) {
            bool is_top = true, is_bottom = true;
            for (EventId q = 0; q < n && (is_top || is_bottom); ++q) {
                if (!events_[q].members.subset_of(events_[p].members)) is_top = false;
                if (!events_[p].members.subset_of(events_[q].members)) is_bottom = false;
            }
            if (is_top) top = p;
            if (is_bottom) bottom = p;
        }
        c.pass = top.has_value() && bottom.has_value();
        c.counts["elements"] = n;
        if (!c.pass)
            c.counterexample = {{"missing", !top.has_value() ? "greatest" : "least"}};
        report.add(std::move(c));
    }

    // C2 first: the complement map must be total for L2/L3/L5 to be checked
    std::vector<std::optional<EventId>> comp(n);
    {
        CheckResult c{.check_id = "C2.complements"};
        c.pass = true;
        for (EventId p = 0; p < n; ++p) {
            comp[p] = find(events_[p].members.complement());
            if (!comp[p] && c.pass) {
                c.pass = false;
                c.counterexample = {{"event", event_hex(events_[p].members)},
                                    {"missing_complement",
                                     event_hex(events_[p].members.complement())}};
            }
        }
        c.counts["elements"] = n;
        report.add(std::move(c));
    }

    // L2: order-reversing on pairs whose complements exist
    {
        CheckResult c{.check_id = "L2.order_reversing"};
        c.pass = true;
        std::size_t pairs = 0;
        for (EventId p = 0; p < n && c.pass; ++p)
            for (EventId q = 0; q < n && c.pass; ++q) {
                if (!comp[p] || !comp[q]) continue;
                if (!events_[p].members.subset_of(events_[q].members)) continue;
                ++pairs;
                if (!events_[*comp[q]].members.subset_of(events_[*comp[p]].members)) {
                    c.pass = false;
                    c.counterexample = {{"p", event_hex(events_[p].members)},
                                        {"q", event_hex(events_[q].members)}};
                }
            }
        c.counts["ordered_pairs"] = pairs;
        report.add(std::move(c));
    }

    // L3: involution
    {
        CheckResult c{.check_id = "L3.involution"};
        c.pass = true;
        for (EventId p = 0; p < n && c.pass; ++p) {
            if (!comp[p]) continue;
            if (events_[*comp[p]].members.complement() != events_[p].members) {
                c.pass = false;
                c.counterexample = {{"event", event_hex(events_[p].members)}};
            }
        }
        report.add(std::move(c));
    }

    // L4: disjoint pairs have a least upper bound in the family
    {
        CheckResult c{.check_id = "L4.orthogonal_suprema"};
        c.pass = true;
        std::size_t pairs = 0;
        for (EventId p = 0; p < n && c.pass; ++p)
            for (EventId q = p; q < n && c.pass; ++q) {
                if (!comp[q]) continue;
                if (!events_[p].members.subset_of(events_[*comp[q]].members)) continue;
                ++pairs;
                if (!join(p, q)) {
                    c.pass = false;
                    c.counterexample = {{"p", event_hex(events_[p].members)},
                                        {"q", event_hex(events_[q].members)}};
                }
            }
        c.counts["disjoint_pairs"] = pairs;
        report.add(std::move(c));
    }

    // L5: orthomodular law q = p v (q ^ p^c) for p <= q
    {
        CheckResult c{.check_id = "L5.orthomodular"};
        c.pass = true;
        std::size_t pairs = 0;
        for (EventId p = 0; p < n && c.pass; ++p) {
            if (!comp[p]) continue;
            for (EventId q = 0; q < n && c.pass; ++q) {
                if (!events_[p].members.subset_of(events_[q].members)) continue;
                ++pairs;
                const auto m = meet(q, *comp[p]);
                const auto j = m ? join(p, *m) : std::nullopt;
                if (!m || !j || *j != q) {
                    c.pass = false;
                    c.counterexample = {{"p", event_hex(events_[p].members)},
                                        {"q", event_hex(events_[q].members)}};
                }
            }
        }
        c.counts["ordered_pairs"] = pairs;
        report.add(std::move(c));
    }

    // C1: the empty set belongs to the family
    {
        CheckResult c{.check_id = "C1.empty"};
        c.pass = contains(BitVec::zeros(ground_.size()));
        report.add(std::move(c));
    }

    // C3: disjoint unions stay in the family
    {
        CheckResult c{.check_id = "C3.disjoint_unions"};
        c.pass = true;
        std::size_t pairs = 0;
        for (EventId p = 0; p < n && c.pass; ++p)
            for (EventId q = p + 1; q < n && c.pass; ++q) {
                if (!events_[p].members.disjoint_with(events_[q].members)) continue;
                ++pairs;
                if (!contains(events_[p].members | events_[q].members)) {
                    c.pass = false;
                    c.counterexample = {{"p", event_hex(events_[p].members)},
                                        {"q", event_hex(events_[q].members)}};
                }
            }
        c.counts["disjoint_pairs"] = pairs;
        report.add(std::move(c));
    }

    return report;
}

} // namespace boxlogic
