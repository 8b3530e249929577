#include "boxlogic/pasting.hpp"

#include <algorithm>
#include <map>

namespace boxlogic {

namespace {

bool is_powerset(const ConcreteLogic& block) {
    const std::size_t n = block.ground().size();
    if (n > 20) return false;
    return block.size() == (std::size_t{1} << n);
}

} // namespace

AbstractLogic to_abstract(const ConcreteLogic& logic) {
    AbstractLogic a;
    a.n = logic.size();
    a.upset.assign(a.n, BitVec(a.n));
    a.comp.resize(a.n);
    for (EventId i = 0; i < a.n; ++i) {
        for (EventId j = 0; j < a.n; ++j)
            if (logic.members(i).subset_of(logic.members(j))) a.upset[i].set(j);
        a.comp[i] = logic.orthocomplement(i);
    }
    return a;
}

ConcreteLogic zero_one_pasting(std::span<const ConcreteLogic> blocks) {
    if (blocks.empty()) throw InputError("0-1-pasting needs at least one block");
    std::vector<int> sizes;
    for (const auto& b : blocks) {
        if (!is_powerset(b))
            throw InputError("0-1-pasting blocks must be Boolean powersets");
        sizes.push_back(static_cast<int>(b.ground().size()));
    }
    GroundSet ground = GroundSet::single(sizes);
    const std::size_t n = ground.size();

    std::vector<BitVec> family;
    family.push_back(BitVec::zeros(n));
    family.push_back(BitVec::ones(n));
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        const std::size_t subsets = std::size_t{1} << sizes[a];
        for (std::size_t A = 1; A + 1 < subsets; ++A) {
            BitVec e(n);
            for (std::size_t pt = 0; pt < n; ++pt)
                if ((A >> ground.digit(pt, a)) & 1) e.set(pt);
            family.push_back(std::move(e));
        }
    }
    return ConcreteLogic::from_family(std::move(ground), family);
}

AbstractLogic zero_one_pasting_abstract(std::span<const ConcreteLogic> blocks) {
    if (blocks.empty()) throw InputError("0-1-pasting needs at least one block");
    // elements: 0, 1, then each block's proper nonempty members
    struct Elem {
        std::size_t block;
        BitVec members;
    };
    std::vector<Elem> elems;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (!is_powerset(blocks[bi]))
            throw InputError("0-1-pasting blocks must be Boolean powersets");
        for (EventId i = 0; i < blocks[bi].size(); ++i) {
            const BitVec& m = blocks[bi].members(i);
            if (m.none() || m.count() == blocks[bi].ground().size()) continue;
            elems.push_back({bi, m});
        }
    }
    AbstractLogic a;
    a.n = elems.size() + 2; // index 0: least, 1: greatest
    a.upset.assign(a.n, BitVec(a.n));
    a.comp.resize(a.n);
    const auto idx = [&](std::size_t e) { return e + 2; };
    for (std::size_t i = 0; i < a.n; ++i) {
        a.upset[0].set(i);
        a.upset[i].set(1);
    }
    a.comp[0] = 1;
    a.comp[1] = 0;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        a.upset[idx(e)].set(idx(e));
        for (std::size_t f = 0; f < elems.size(); ++f) {
            if (elems[e].block != elems[f].block) continue;
            if (elems[e].members.subset_of(elems[f].members)) a.upset[idx(e)].set(idx(f));
            if (elems[e].members == elems[f].members.complement()) a.comp[idx(e)] = idx(f);
        }
    }
    return a;
}

namespace {

/// Iterated joint refinement of order/complement degree profiles over both
/// logics at once, so the resulting colors are comparable across them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
joint_colors(const AbstractLogic& A, const AbstractLogic& B) {
    const auto initial = [](const AbstractLogic& L) {
        std::vector<std::size_t> color(L.n);
        for (std::size_t i = 0; i < L.n; ++i) {
            std::size_t down = 0;
            for (std::size_t j = 0; j < L.n; ++j)
                if (L.leq(j, i)) ++down;
            color[i] = L.upset[i].count() * (L.n + 1) + down;
        }
        return color;
    };
    std::vector<std::size_t> ca = initial(A), cb = initial(B);

    using Sig = std::pair<std::size_t, std::map<std::size_t, std::size_t>>;
    const auto signatures = [](const AbstractLogic& L, const std::vector<std::size_t>& color) {
        std::vector<Sig> sig(L.n);
        for (std::size_t i = 0; i < L.n; ++i) {
            sig[i].first = color[i];
            for (std::size_t j = 0; j < L.n; ++j)
                if (L.leq(i, j)) ++sig[i].second[color[j] * 2];
            ++sig[i].second[color[L.comp[i]] * 2 + 1];
        }
        return sig;
    };

    for (std::size_t round = 0; round < A.n + 1; ++round) {
        const auto sa = signatures(A, ca);
        const auto sb = signatures(B, cb);
        std::map<Sig, std::size_t> remap;
        for (const auto& s : sa) remap.emplace(s, 0);
        for (const auto& s : sb) remap.emplace(s, 0);
        std::size_t id = 0;
        for (auto& [key, value] : remap) value = id++; // canonical: key-sorted
        std::vector<std::size_t> na(A.n), nb(B.n);
        for (std::size_t i = 0; i < A.n; ++i) na[i] = remap.at(sa[i]);
        for (std::size_t i = 0; i < B.n; ++i) nb[i] = remap.at(sb[i]);
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

struct IsoSearch {
    const AbstractLogic& A;
    const AbstractLogic& B;
    std::vector<std::size_t> colorA, colorB;
    std::vector<std::size_t> map;   // A -> B or npos
    std::vector<bool> used;         // B side
    static constexpr std::size_t npos = SIZE_MAX;

    bool consistent(std::size_t i, std::size_t bi) const {
        if (colorA[i] != colorB[bi]) return false;
        for (std::size_t j = 0; j < A.n; ++j) {
            if (map[j] == npos) continue;
            if (A.leq(i, j) != B.leq(bi, map[j])) return false;
            if (A.leq(j, i) != B.leq(map[j], bi)) return false;
        }
        const std::size_t ci = A.comp[i];
        if (map[ci] != npos && map[ci] != B.comp[bi]) return false;
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == A.n) return true;
        // next unmapped element with the fewest surviving candidates
        std::size_t best = npos, best_count = SIZE_MAX;
        for (std::size_t i = 0; i < A.n; ++i) {
            if (map[i] != npos) continue;
            std::size_t cnt = 0;
            for (std::size_t bi = 0; bi < B.n; ++bi)
                if (!used[bi] && consistent(i, bi)) ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best = i;
            }
            if (cnt == 0) return false;
        }
        for (std::size_t bi = 0; bi < B.n; ++bi) {
            if (used[bi] || !consistent(best, bi)) continue;
            map[best] = bi;
            used[bi] = true;
            if (run(depth + 1)) return true;
            map[best] = npos;
            used[bi] = false;
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const AbstractLogic& a, const AbstractLogic& b, std::size_t element_budget) {
    if (a.n != b.n) return false;
    if (a.n > element_budget)
        throw BudgetError("isomorphism search limited to " + std::to_string(element_budget) +
                          " elements");
    auto [colorA, colorB] = joint_colors(a, b);
    IsoSearch s{a, b, std::move(colorA), std::move(colorB), {}, {}};
    {
        auto ca = s.colorA;
        auto cb = s.colorB;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    s.map.assign(a.n, IsoSearch::npos);
    s.used.assign(b.n, false);
    return s.run(0);
}

} // namespace boxlogic
