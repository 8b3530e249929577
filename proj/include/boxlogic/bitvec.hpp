#pragma once

#include "boxlogic/errors.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace boxlogic {

/// Fixed-width bit vector over an enumerated ground set. Events are compared,
/// hashed and sorted purely by their bits; the width is fixed at construction.
class BitVec {
public:
    BitVec() : bits_(0) {}
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    static BitVec zeros(std::size_t bits) { return BitVec(bits); }
    static BitVec ones(std::size_t bits) {
        BitVec v(bits);
        for (auto& w : v.w_) w = ~0ull;
        v.trim();
        return v;
    }

    std::size_t bits() const { return bits_; }

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    BitVec operator&(const BitVec& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
    BitVec operator|(const BitVec& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
    BitVec operator^(const BitVec& o) const { return zip(o, [](auto a, auto b) { return a ^ b; }); }
    BitVec and_not(const BitVec& o) const { return zip(o, [](auto a, auto b) { return a & ~b; }); }
    BitVec complement() const {
        BitVec r(bits_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool disjoint_with(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return false;
        return true;
    }
    bool intersects(const BitVec& o) const { return !disjoint_with(o); }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.bits_ == b.bits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    /// Canonical order: numeric value with bit 0 least significant. The empty
    /// set sorts first, the full set last.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    /// Index of the lowest set bit, or bits() if none.
    std::size_t find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return bits_;
    }

    template <typename Fn> void for_each_set(Fn fn) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                fn(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h ^ bits_;
    }

    /// Hex digits high nibble first, covering ceil(bits/4) nibbles, "0x" prefixed.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const std::size_t nibbles = bits_ == 0 ? 1 : (bits_ + 3) / 4;
        std::string s = "0x";
        for (std::size_t k = nibbles; k-- > 0;) {
            const std::size_t lo = k * 4;
            unsigned v = 0;
            for (unsigned j = 0; j < 4 && lo + j < bits_; ++j)
                if (test(lo + j)) v |= 1u << j;
            s += digits[v];
        }
        return s;
    }

    static BitVec from_hex(std::string_view text, std::size_t bits) {
        if (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X") text.remove_prefix(2);
        BitVec v(bits);
        std::size_t nibble = 0;
        for (std::size_t k = text.size(); k-- > 0; ++nibble) {
            const char c = text[k];
            unsigned d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else throw InputError("bad hex digit in bit vector");
            for (unsigned j = 0; j < 4; ++j)
                if (d & (1u << j)) {
                    const std::size_t i = nibble * 4 + j;
                    if (i >= bits) throw InputError("hex bit vector wider than ground set");
                    v.set(i);
                }
        }
        return v;
    }

private:
    template <typename Fn> BitVec zip(const BitVec& o, Fn fn) const {
        BitVec r(bits_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = fn(w_[i], o.w_[i]);
        return r;
    }
    void trim() {
        if (bits_ & 63) w_.back() &= (1ull << (bits_ & 63)) - 1;
        if (bits_ == 0 && !w_.empty()) w_.back() = 0;
    }

    std::size_t bits_;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

} // namespace boxlogic
