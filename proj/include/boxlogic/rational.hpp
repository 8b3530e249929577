#pragma once

#include "boxlogic/errors.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>

namespace boxlogic {

/// Exact rational number on a 64-bit numerator/denominator, always reduced,
/// denominator > 0. All state-space arithmetic in this project is exact; any
/// overflow of the reduced representation throws instead of silently losing
/// precision. Magnitudes stay tiny at desk scale, so 64 bits is ample.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    static Rational from_i128(__int128 n, __int128 d);

    /// Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("rational division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw InputError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n, d);
        num_ = g ? n / g : 0;
        den_ = g ? d / g : 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a) { n /= a; d /= a; }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
        throw InternalError("rational overflow past 64 bits");
    Rational r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    return r;
}

inline Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto to_int = [](std::string_view s) {
        if (s.empty()) throw InputError("empty rational literal");
        std::size_t pos = 0;
        std::int64_t v = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; pos = 1; }
        if (pos == s.size()) throw InputError("bad rational literal");
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw InputError("bad rational literal: " + std::string(s));
            v = v * 10 + (s[pos] - '0');
        }
        return neg ? -v : v;
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

} // namespace boxlogic

template <> struct std::hash<boxlogic::Rational> {
    std::size_t operator()(const boxlogic::Rational& r) const noexcept {
        return std::hash<std::int64_t>()(r.num()) * 1000003u ^
               std::hash<std::int64_t>()(r.den());
    }
};
