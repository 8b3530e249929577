#include "boxlogic/behavior.hpp"

#include <algorithm>

namespace boxlogic {

namespace {

std::string ctx_name(int a, int b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

} // namespace

Behavior Behavior::from_table(BoxSpec left, BoxSpec right,
                              std::vector<std::vector<std::vector<Rational>>> tables) {
    left.validate();
    right.validate();
    const int N = left.input_count(), M = right.input_count();
    if (static_cast<int>(tables.size()) != N)
        throw InputError("behavior table must cover every left input");
    for (int a = 0; a < N; ++a)
        if (static_cast<int>(tables[a].size()) != M)
            throw InputError("behavior table must cover every context");

    Behavior s;
    s.left_ = std::move(left);
    s.right_ = std::move(right);
    s.tables_ = std::move(tables);

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < M; ++b) {
            const std::size_t want = static_cast<std::size_t>(s.left_.outcome_sizes[a]) *
                                     s.right_.outcome_sizes[b];
            if (s.tables_[a][b].size() != want)
                throw InputError("context " + ctx_name(a, b) + " needs " +
                                 std::to_string(want) + " entries");
            Rational sum;
            for (const Rational& p : s.tables_[a][b]) {
                if (p < Rational(0) || p > Rational(1))
                    throw InputError("probability out of [0,1] in context " + ctx_name(a, b));
                sum += p;
            }
            if (!sum.is_one())
                throw InputError("context " + ctx_name(a, b) + " sums to " + sum.str() +
                                 ", not 1");
        }

    // marginals must not depend on the distant input
    s.left_marginal_.resize(N);
    for (int a = 0; a < N; ++a) {
        s.left_marginal_[a].resize(s.left_.outcome_sizes[a]);
        for (int alpha = 0; alpha < s.left_.outcome_sizes[a]; ++alpha) {
            for (int b = 0; b < M; ++b) {
                Rational m;
                for (int beta = 0; beta < s.right_.outcome_sizes[b]; ++beta)
                    m += s.prob(a, b, alpha, beta);
                if (b == 0) {
                    s.left_marginal_[a][alpha] = m;
                } else if (m != s.left_marginal_[a][alpha]) {
                    throw InputError("no-signaling violation: left marginal of input " +
                                     std::to_string(a + 1) + " differs between contexts " +
                                     ctx_name(a, 0) + " and " + ctx_name(a, b));
                }
            }
        }
    }
    s.right_marginal_.resize(M);
    for (int b = 0; b < M; ++b) {
        s.right_marginal_[b].resize(s.right_.outcome_sizes[b]);
        for (int beta = 0; beta < s.right_.outcome_sizes[b]; ++beta) {
            for (int a = 0; a < N; ++a) {
                Rational m;
                for (int alpha = 0; alpha < s.left_.outcome_sizes[a]; ++alpha)
                    m += s.prob(a, b, alpha, beta);
                if (a == 0) {
                    s.right_marginal_[b][beta] = m;
                } else if (m != s.right_marginal_[b][beta]) {
                    throw InputError("no-signaling violation: right marginal of input " +
                                     std::to_string(b + 1) + " differs between contexts " +
                                     ctx_name(0, b) + " and " + ctx_name(a, b));
                }
            }
        }
    }
    return s;
}

Behavior Behavior::uniform(const BoxSpec& left, const BoxSpec& right) {
    std::vector<std::vector<std::vector<Rational>>> tables(left.input_count());
    for (int a = 0; a < left.input_count(); ++a) {
        tables[a].resize(right.input_count());
        for (int b = 0; b < right.input_count(); ++b) {
            const std::int64_t cells =
                std::int64_t{left.outcome_sizes[a]} * right.outcome_sizes[b];
            tables[a][b].assign(cells, Rational(1, cells));
        }
    }
    return from_table(left, right, std::move(tables));
}

bool Behavior::is_two_valued() const {
    for (const auto& row : tables_)
        for (const auto& ctx : row)
            for (const Rational& p : ctx)
                if (!p.is_zero() && !p.is_one()) return false;
    return true;
}

std::vector<Rational> Behavior::coordinates() const {
    std::vector<Rational> out;
    for (const auto& row : tables_)
        for (const auto& ctx : row)
            out.insert(out.end(), ctx.begin(), ctx.end());
    return out;
}

ComponentState ComponentState::from_table(BoxSpec spec,
                                          std::vector<std::vector<Rational>> table) {
    spec.validate();
    if (static_cast<int>(table.size()) != spec.input_count())
        throw InputError("component state must cover every input");
    for (int a = 0; a < spec.input_count(); ++a) {
        if (static_cast<int>(table[a].size()) != spec.outcome_sizes[a])
            throw InputError("component state input " + std::to_string(a + 1) +
                             " needs " + std::to_string(spec.outcome_sizes[a]) + " entries");
        Rational sum;
        for (const Rational& p : table[a]) {
            if (p < Rational(0) || p > Rational(1))
                throw InputError("probability out of [0,1] in component state");
            sum += p;
        }
        if (!sum.is_one())
            throw InputError("component state input " + std::to_string(a + 1) +
                             " sums to " + sum.str() + ", not 1");
    }
    ComponentState s;
    s.spec_ = std::move(spec);
    s.table_ = std::move(table);
    return s;
}

ComponentState ComponentState::deterministic(const BoxSpec& spec, std::span<const int> outcomes) {
    if (static_cast<int>(outcomes.size()) != spec.input_count())
        throw InputError("deterministic state needs one outcome per input");
    std::vector<std::vector<Rational>> table(spec.input_count());
    for (int a = 0; a < spec.input_count(); ++a) {
        if (outcomes[a] < 0 || outcomes[a] >= spec.outcome_sizes[a])
            throw InputError("deterministic outcome out of range");
        table[a].assign(spec.outcome_sizes[a], Rational(0));
        table[a][outcomes[a]] = Rational(1);
    }
    return from_table(spec, std::move(table));
}

ComponentState ComponentState::uniform(const BoxSpec& spec) {
    std::vector<std::vector<Rational>> table(spec.input_count());
    for (int a = 0; a < spec.input_count(); ++a)
        table[a].assign(spec.outcome_sizes[a], Rational(1, spec.outcome_sizes[a]));
    return from_table(spec, std::move(table));
}

bool ComponentState::is_two_valued() const {
    for (const auto& row : table_)
        for (const Rational& p : row)
            if (!p.is_zero() && !p.is_one()) return false;
    return true;
}

std::vector<int> ComponentState::support() const {
    if (!is_two_valued()) throw InputError("support is defined for two-valued states only");
    std::vector<int> out(spec_.input_count());
    for (int a = 0; a < spec_.input_count(); ++a)
        for (int alpha = 0; alpha < spec_.outcome_sizes[a]; ++alpha)
            if (table_[a][alpha].is_one()) out[a] = alpha;
    return out;
}

TwoValuedState TwoValuedState::from_behavior(Behavior b) {
    if (!b.is_two_valued())
        throw InputError("behavior is not two-valued");
    TwoValuedState chi{std::move(b), {}};
    const auto& s = chi.behavior;
    chi.support.resize(s.left().input_count());
    for (int a = 0; a < s.left().input_count(); ++a) {
        chi.support[a].resize(s.right().input_count());
        for (int bb = 0; bb < s.right().input_count(); ++bb) {
            int hits = 0;
            for (int alpha = 0; alpha < s.left().outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < s.right().outcome_sizes[bb]; ++beta)
                    if (s.prob(a, bb, alpha, beta).is_one()) {
                        chi.support[a][bb] = {alpha, beta};
                        ++hits;
                    }
            if (hits != 1)
                throw InputError("two-valued state must select exactly one joint outcome per context");
        }
    }
    return chi;
}

Behavior product_state(const ComponentState& mu, const ComponentState& nu) {
    const BoxSpec& L = mu.spec();
    const BoxSpec& R = nu.spec();
    std::vector<std::vector<std::vector<Rational>>> tables(L.input_count());
    for (int a = 0; a < L.input_count(); ++a) {
        tables[a].resize(R.input_count());
        for (int b = 0; b < R.input_count(); ++b) {
            tables[a][b].reserve(static_cast<std::size_t>(L.outcome_sizes[a]) *
                                 R.outcome_sizes[b]);
            for (int alpha = 0; alpha < L.outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < R.outcome_sizes[b]; ++beta)
                    tables[a][b].push_back(mu.prob(a, alpha) * nu.prob(b, beta));
        }
    }
    return Behavior::from_table(L, R, std::move(tables));
}

Rational chsh_value(const Behavior& s) {
    const std::vector<int> binary{2, 2};
    if (s.left().outcome_sizes != binary || s.right().outcome_sizes != binary)
        throw InputError("CHSH needs two binary inputs on each side");
    const auto corr = [&](int a, int b) {
        Rational e;
        for (int alpha = 0; alpha < 2; ++alpha)
            for (int beta = 0; beta < 2; ++beta) {
                const Rational& p = s.prob(a, b, alpha, beta);
                e += (alpha ^ beta) ? -p : p;
            }
        return e;
    };
    return corr(0, 0) + corr(0, 1) + corr(1, 0) - corr(1, 1);
}

Behavior pr_box_state() {
    const BoxSpec box{{2, 2}};
    std::vector<std::vector<std::vector<Rational>>> tables(2);
    for (int a = 0; a < 2; ++a) {
        tables[a].resize(2);
        for (int b = 0; b < 2; ++b)
            for (int alpha = 0; alpha < 2; ++alpha)
                for (int beta = 0; beta < 2; ++beta)
                    tables[a][b].push_back((alpha ^ beta) == (a & b) ? Rational(1, 2)
                                                                     : Rational(0));
    }
    return Behavior::from_table(box, box, std::move(tables));
}

} // namespace boxlogic
