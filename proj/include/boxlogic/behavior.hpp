#pragma once

#include "boxlogic/box_world.hpp"
#include "boxlogic/rational.hpp"

#include <span>

namespace boxlogic {

/// A no-signaling behavior: the conditional probability table P(ab|xy) of a
/// two-box scenario in exact rationals, validated on construction
/// (nonnegative, normalized per context, marginals independent of the
/// distant input). Immutable.
class Behavior {
public:
    /// `tables[a][b]` is the row-major outcome matrix of context (a,b):
    /// entry alpha * |V_b| + beta. Throws InputError naming the offending
    /// context (pair) on any violation.
    static Behavior from_table(BoxSpec left, BoxSpec right,
                               std::vector<std::vector<std::vector<Rational>>> tables);

    static Behavior uniform(const BoxSpec& left, const BoxSpec& right);

    const BoxSpec& left() const { return left_; }
    const BoxSpec& right() const { return right_; }

    const Rational& prob(int a, int b, int alpha, int beta) const {
        return tables_[a][b][static_cast<std::size_t>(alpha) * right_.outcome_sizes[b] + beta];
    }
    const Rational& left_marginal(int a, int alpha) const {
        return left_marginal_[a][alpha];
    }
    const Rational& right_marginal(int b, int beta) const {
        return right_marginal_[b][beta];
    }

    bool is_two_valued() const;

    /// Flat coordinate vector in context-major, row-major order — the
    /// polytope coordinates and the lexicographic sort key.
    std::vector<Rational> coordinates() const;

    friend bool operator==(const Behavior& x, const Behavior& y) {
        return x.left_ == y.left_ && x.right_ == y.right_ && x.tables_ == y.tables_;
    }
    friend bool operator<(const Behavior& x, const Behavior& y) {
        return x.coordinates() < y.coordinates();
    }

private:
    Behavior() = default;
    BoxSpec left_, right_;
    std::vector<std::vector<std::vector<Rational>>> tables_;
    std::vector<std::vector<Rational>> left_marginal_;  // [a][alpha]
    std::vector<std::vector<Rational>> right_marginal_; // [b][beta]
};

/// A single party's state: P(alpha|a) per input, normalized, exact.
class ComponentState {
public:
    static ComponentState from_table(BoxSpec spec, std::vector<std::vector<Rational>> table);
    static ComponentState deterministic(const BoxSpec& spec, std::span<const int> outcomes);
    static ComponentState uniform(const BoxSpec& spec);

    const BoxSpec& spec() const { return spec_; }
    const Rational& prob(int a, int alpha) const { return table_[a][alpha]; }
    bool is_two_valued() const;

    /// The chosen outcome per input, when two-valued.
    std::vector<int> support() const;

    friend bool operator==(const ComponentState&, const ComponentState&) = default;

private:
    ComponentState() = default;
    BoxSpec spec_;
    std::vector<std::vector<Rational>> table_;
};

/// A 0/1 behavior together with its selected joint outcome per context.
/// Construction re-validates two-valuedness; the rectangle structure of the
/// support is established separately by factorization.
struct TwoValuedState {
    Behavior behavior;
    std::vector<std::vector<std::pair<int, int>>> support; // [a][b] -> (alpha,beta)

    static TwoValuedState from_behavior(Behavior b);
};

/// P(ab|xy) = mu(alpha|a) * nu(beta|b); always no-signaling.
Behavior product_state(const ComponentState& mu, const ComponentState& nu);

/// E(a,b) = sum (-1)^(alpha xor beta) P(..); CHSH = E11 + E12 + E21 - E22.
/// Requires the binary two-input scenario on both sides.
Rational chsh_value(const Behavior& s);

/// The canonical extremal box: P(ab|xy) = 1/2 when alpha xor beta equals the
/// product of the 0-based inputs, else 0.
Behavior pr_box_state();

} // namespace boxlogic
