#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace detail {

inline long long checked_i64(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational on 64-bit words, always normalized (den > 0, gcd(|num|,den) = 1).
// Intermediates go through __int128 and throw OverflowError rather than wrap.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(long long v) : num_(v) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational parse(const std::string& s);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make_normalized(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make_normalized(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_normalized((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return make_normalized((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = (__int128)a.num_ * b.den_;
        __int128 r = (__int128)b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Smallest integer >= this.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

  private:
    static Rational make_normalized(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = detail::checked_i64(n, "numerator");
        r.den_ = detail::checked_i64(d, "denominator");
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// n choose r as exact int64, throwing on overflow.
inline long long binom(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > INT64_MAX) throw OverflowError("binom overflow");
    }
    return static_cast<long long>(acc);
}

// ceil(q * scale) for a nonnegative rational threshold against an integer scale.
inline long long ceil_scaled(const Rational& q, long long scale) {
    __int128 prod = (__int128)q.num() * scale;
    __int128 d = q.den();
    __int128 r = prod / d;
    if (prod % d != 0 && prod > 0) ++r;
    return detail::checked_i64(r, "ceil_scaled");
}

}  // namespace hypertile
