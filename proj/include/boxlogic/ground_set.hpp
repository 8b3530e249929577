#pragma once

#include "boxlogic/errors.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace boxlogic {

/// Enumerated finite phase space. Points are mixed-radix tuples over the
/// factor sizes, first factor most significant. A composite space carries the
/// split position so a point index decodes to a pair of per-party tuples;
/// the composite index is left_index * right_size + right_index.
class GroundSet {
public:
    static GroundSet single(std::vector<int> factors) {
        return GroundSet(std::move(factors), SIZE_MAX);
    }
    static GroundSet composite(std::vector<int> left, const std::vector<int>& right) {
        const std::size_t split = left.size();
        left.insert(left.end(), right.begin(), right.end());
        return GroundSet(std::move(left), split);
    }

    const std::vector<int>& factors() const { return factors_; }
    bool is_composite() const { return split_ != SIZE_MAX; }
    std::size_t left_arity() const { return is_composite() ? split_ : factors_.size(); }

    std::size_t size() const { return size_; }
    std::size_t left_size() const { return left_size_; }
    std::size_t right_size() const { return size_ / left_size_; }

    std::vector<int> decode(std::size_t index) const {
        std::vector<int> digits(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            digits[i] = static_cast<int>(index % factors_[i]);
            index /= factors_[i];
        }
        return digits;
    }

    std::size_t encode(std::span<const int> digits) const {
        if (digits.size() != factors_.size())
            throw InputError("point arity does not match ground set factors");
        std::size_t index = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (digits[i] < 0 || digits[i] >= factors_[i])
                throw InputError("point digit out of factor range");
            index = index * factors_[i] + digits[i];
        }
        return index;
    }

    std::pair<std::size_t, std::size_t> split(std::size_t index) const {
        const std::size_t r = right_size();
        return {index / r, index % r};
    }
    std::size_t fuse(std::size_t left_index, std::size_t right_index) const {
        return left_index * right_size() + right_index;
    }

    /// Value of factor `f` at point `index`, without building the full tuple.
    int digit(std::size_t index, std::size_t f) const {
        std::size_t suffix = 1;
        for (std::size_t i = factors_.size(); i-- > f + 1;) suffix *= factors_[i];
        return static_cast<int>((index / suffix) % factors_[f]);
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.factors_ == b.factors_ && a.split_ == b.split_;
    }

private:
    GroundSet(std::vector<int> factors, std::size_t split)
        : factors_(std::move(factors)), split_(split) {
        if (factors_.empty()) throw InputError("ground set needs at least one factor");
        size_ = 1;
        for (int f : factors_) {
            if (f < 1) throw InputError("ground set factor sizes must be >= 1");
            size_ *= static_cast<std::size_t>(f);
        }
        left_size_ = 1;
        for (std::size_t i = 0; i < left_arity(); ++i) left_size_ *= factors_[i];
    }

    std::vector<int> factors_;
    std::size_t split_; // SIZE_MAX for single-party spaces
    std::size_t size_ = 1;
    std::size_t left_size_ = 1;
};

} // namespace boxlogic
