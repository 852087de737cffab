#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rhls/errors.hpp"

namespace rhls {

// Exact rational arithmetic on 64-bit numerator/denominator, with 128-bit
// intermediates. Used so that exponent-relation residuals are exactly zero
// when the inputs are rational; anything that overflows throws rather than
// silently wrapping.
class Rat {
  public:
    constexpr Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const { return num_ == 0; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make_checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw DegenerateExponent("rational division by zero");
        return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  private:
    using i128 = __int128;

    static Rat make_checked(i128 n, i128 d) {
        if (d == 0) throw DegenerateExponent("rational with zero denominator");
        i128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        constexpr i128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim)
            throw OverflowError("rational arithmetic overflow");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() { *this = make_checked(num_, den_); }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace rhls
