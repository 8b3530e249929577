#include "boxlogic/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace boxlogic {

namespace {

using I128 = __int128;

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        const I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(I128 v) {
    if (v < INT64_MIN || v > INT64_MAX)
        throw InternalError("polytope arithmetic overflow past 64 bits");
    return static_cast<std::int64_t>(v);
}

struct Ray {
    std::vector<std::int64_t> z; // (t_1..t_k, s)
    BitVec tight;                // over processed row indices

    void reduce() {
        I128 g = 0;
        for (const auto v : z) g = gcd128(g, v);
        if (g > 1)
            for (auto& v : z) v = narrow(v / static_cast<std::int64_t>(g));
    }
};

I128 dot(const std::vector<std::int64_t>& row, const std::vector<std::int64_t>& z) {
    I128 acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc += I128{row[i]} * z[i];
    return acc;
}

int sign(I128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

/// Reduced row echelon form in place; returns pivot columns. The last column
/// is the right-hand side.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size() - 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational p = m[row][col];
        for (auto& v : m[row]) v /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

} // namespace

StatePolytope::StatePolytope(BoxSpec left, BoxSpec right, std::size_t dimension_budget)
    : left_(std::move(left)), right_(std::move(right)) {
    left_.validate();
    right_.validate();
    const int N = left_.input_count(), M = right_.input_count();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < M; ++b)
            for (int alpha = 0; alpha < left_.outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < right_.outcome_sizes[b]; ++beta)
                    vars_.push_back({a, b, alpha, beta});
    if (vars_.size() > dimension_budget)
        throw BudgetError("no-signaling polytope dimension over budget (" +
                          std::to_string(vars_.size()) + " table entries)");

    const auto vid = [&](int a, int b, int alpha, int beta) {
        std::size_t i = 0;
        for (; i < vars_.size(); ++i)
            if (vars_[i].a == a && vars_[i].b == b && vars_[i].alpha == alpha &&
                vars_[i].beta == beta)
                return i;
        throw InternalError("table variable lookup failed");
    };

    // per-context normalization
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < M; ++b) {
            LinearRow row{std::vector<Rational>(vars_.size(), Rational(0)), Rational(1)};
            for (int alpha = 0; alpha < left_.outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < right_.outcome_sizes[b]; ++beta)
                    row.coeffs[vid(a, b, alpha, beta)] = Rational(1);
            equalities_.push_back(std::move(row));
        }
    // left marginals independent of the right input
    for (int a = 0; a < N; ++a)
        for (int alpha = 0; alpha < left_.outcome_sizes[a]; ++alpha)
            for (int b = 0; b + 1 < M; ++b) {
                LinearRow row{std::vector<Rational>(vars_.size(), Rational(0)), Rational(0)};
                for (int beta = 0; beta < right_.outcome_sizes[b]; ++beta)
                    row.coeffs[vid(a, b, alpha, beta)] += Rational(1);
                for (int beta = 0; beta < right_.outcome_sizes[b + 1]; ++beta)
                    row.coeffs[vid(a, b + 1, alpha, beta)] -= Rational(1);
                equalities_.push_back(std::move(row));
            }
    // right marginals independent of the left input
    for (int b = 0; b < M; ++b)
        for (int beta = 0; beta < right_.outcome_sizes[b]; ++beta)
            for (int a = 0; a + 1 < N; ++a) {
                LinearRow row{std::vector<Rational>(vars_.size(), Rational(0)), Rational(0)};
                for (int alpha = 0; alpha < left_.outcome_sizes[a]; ++alpha)
                    row.coeffs[vid(a, b, alpha, beta)] += Rational(1);
                for (int alpha = 0; alpha < left_.outcome_sizes[a + 1]; ++alpha)
                    row.coeffs[vid(a + 1, b, alpha, beta)] -= Rational(1);
                equalities_.push_back(std::move(row));
            }
}

std::size_t StatePolytope::dimension() const {
    std::vector<std::vector<Rational>> m;
    m.reserve(equalities_.size());
    for (const auto& row : equalities_) {
        auto r = row.coeffs;
        r.push_back(row.rhs);
        m.push_back(std::move(r));
    }
    const auto pivots = rref(m);
    return vars_.size() - pivots.size();
}

const std::vector<Behavior>& StatePolytope::vertices() const {
    enumerate_vertices();
    return vertices_;
}

void StatePolytope::enumerate_vertices() const {
    if (enumerated_) return;
    const std::size_t D = vars_.size();

    // solve the equality system: x = x0 + Nmat . t over the free columns
    std::vector<std::vector<Rational>> m;
    m.reserve(equalities_.size());
    for (const auto& row : equalities_) {
        auto r = row.coeffs;
        r.push_back(row.rhs);
        m.push_back(std::move(r));
    }
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(D, false);
    for (const auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < D; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const std::size_t k = free_cols.size();
    const std::size_t d = k + 1; // homogenizing coordinate s comes last

    std::vector<Rational> x0(D, Rational(0));
    std::vector<std::vector<Rational>> nmat(D, std::vector<Rational>(k, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) nmat[free_cols[j]][j] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x0[pivots[r]] = m[r].back();
        for (std::size_t j = 0; j < k; ++j) nmat[pivots[r]][j] = -m[r][free_cols[j]];
    }

    // one integer inequality row per table variable: x_i(t, s) >= 0
    std::vector<std::vector<std::int64_t>> rows(D, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < D; ++i) {
        std::int64_t scale = x0[i].den();
        for (std::size_t j = 0; j < k; ++j)
            scale = std::lcm(scale, nmat[i][j].den());
        for (std::size_t j = 0; j < k; ++j)
            rows[i][j] = nmat[i][j].num() * (scale / nmat[i][j].den());
        rows[i][k] = x0[i].num() * (scale / x0[i].den());
    }

    if (k == 0) {
        // unique solution; a vertex iff feasible
        vertices_.clear();
        bool feasible = true;
        for (const auto& v : x0)
            if (v < Rational(0)) feasible = false;
        if (feasible) vertices_.push_back(coords_to_behavior(x0));
        enumerated_ = true;
        return;
    }

    // initial simplicial cone from d independent rows: rays are the columns
    // of the inverse, which satisfy row_i . ray_j = delta_ij >= 0
    std::vector<std::size_t> basis_rows;
    {
        std::vector<std::vector<Rational>> acc;
        for (std::size_t i = 0; i < D && basis_rows.size() < d; ++i) {
            std::vector<Rational> cand(d + 1, Rational(0));
            for (std::size_t j = 0; j < d; ++j) cand[j] = Rational(rows[i][j]);
            auto trial = acc;
            trial.push_back(cand);
            if (rref(trial).size() > basis_rows.size()) {
                acc = std::move(trial);
                basis_rows.push_back(i);
            }
        }
        if (basis_rows.size() < d)
            throw InternalError("no-signaling constraint rows are rank deficient");
    }

    std::vector<Ray> rays;
    {
        // invert the basis matrix by Gauss-Jordan on [B | I]
        std::vector<std::vector<Rational>> gj(d, std::vector<Rational>(2 * d, Rational(0)));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) gj[r][c] = Rational(rows[basis_rows[r]][c]);
            gj[r][d + r] = Rational(1);
        }
        for (std::size_t col = 0; col < d; ++col) {
            std::size_t sel = col;
            while (gj[sel][col].is_zero()) ++sel;
            std::swap(gj[col], gj[sel]);
            const Rational p = gj[col][col];
            for (auto& v : gj[col]) v /= p;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == col || gj[r][col].is_zero()) continue;
                const Rational f = gj[r][col];
                for (std::size_t c = 0; c < 2 * d; ++c) gj[r][c] -= f * gj[col][c];
            }
        }
        for (std::size_t j = 0; j < d; ++j) {
            Ray ray;
            ray.z.resize(d);
            std::int64_t scale = 1;
            for (std::size_t r = 0; r < d; ++r) scale = std::lcm(scale, gj[r][d + j].den());
            for (std::size_t r = 0; r < d; ++r)
                ray.z[r] = gj[r][d + j].num() * (scale / gj[r][d + j].den());
            ray.reduce();
            rays.push_back(std::move(ray));
        }
    }

    // insertion order: basis rows count as processed from the start
    std::vector<std::size_t> order = basis_rows;
    for (std::size_t i = 0; i < D; ++i)
        if (std::find(basis_rows.begin(), basis_rows.end(), i) == basis_rows.end())
            order.push_back(i);

    const auto recompute_tight = [&](Ray& ray, std::size_t processed) {
        ray.tight = BitVec(D);
        for (std::size_t p = 0; p < processed; ++p)
            if (dot(rows[order[p]], ray.z) == 0) ray.tight.set(p);
    };
    for (auto& ray : rays) recompute_tight(ray, d);

    for (std::size_t next = d; next < order.size(); ++next) {
        const auto& row = rows[order[next]];
        std::vector<int> side(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            side[i] = sign(dot(row, rays[i].z));
            any_neg |= side[i] < 0;
        }
        if (!any_neg) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (side[i] == 0) rays[i].tight.set(next);
            continue;
        }
        std::vector<Ray> kept;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (side[i] >= 0) {
                Ray r = rays[i];
                if (side[i] == 0) r.tight.set(next);
                kept.push_back(std::move(r));
            }
        // combine adjacent (positive, negative) pairs onto the hyperplane
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (side[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (side[j] >= 0) continue;
                const BitVec common = rays[i].tight & rays[j].tight;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == i || o == j) continue;
                    if (common.subset_of(rays[o].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                const I128 wp = dot(row, rays[i].z);
                const I128 wn = dot(row, rays[j].z);
                std::vector<I128> combo(d);
                for (std::size_t c = 0; c < d; ++c)
                    combo[c] = wp * rays[j].z[c] - wn * rays[i].z[c];
                I128 g = 0;
                for (const auto v : combo) g = gcd128(g, v);
                Ray nr;
                nr.z.resize(d);
                for (std::size_t c = 0; c < d; ++c)
                    nr.z[c] = narrow(g > 1 ? combo[c] / g : combo[c]);
                recompute_tight(nr, next + 1);
                kept.push_back(std::move(nr));
            }
        }
        rays = std::move(kept);
    }

    // every extreme ray of the homogenized cone of a bounded polytope has s > 0
    vertices_.clear();
    for (const auto& ray : rays) {
        const std::int64_t s = ray.z[k];
        if (s <= 0)
            throw InternalError("unbounded direction in the no-signaling polytope");
        std::vector<Rational> x(D);
        for (std::size_t i = 0; i < D; ++i) {
            Rational acc = x0[i];
            for (std::size_t j = 0; j < k; ++j)
                acc += nmat[i][j] * Rational(ray.z[j], s);
            x[i] = acc;
        }
        vertices_.push_back(coords_to_behavior(x));
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end(),
                                [](const Behavior& a, const Behavior& b) { return a == b; }),
                    vertices_.end());
    enumerated_ = true;
}

Behavior StatePolytope::coords_to_behavior(const std::vector<Rational>& x) const {
    std::vector<std::vector<std::vector<Rational>>> tables(left_.input_count());
    for (int a = 0; a < left_.input_count(); ++a)
        tables[a].resize(right_.input_count());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        tables[vars_[i].a][vars_[i].b].push_back(x[i]);
    return Behavior::from_table(left_, right_, std::move(tables));
}

} // namespace boxlogic
