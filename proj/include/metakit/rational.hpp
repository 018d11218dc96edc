#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "metakit/errors.hpp"

namespace metakit {

// Exact rational number on 64-bit components.  All coefficient arithmetic in
// this project stays far below the overflow range (values are bounded by
// small powers of q <= 19 times modest enumeration counts), but products are
// still widened through __int128 and checked.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw Error("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("Rational: division by zero");
        return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
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

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    using wide_t = __int128;
    static wide_t wide(std::int64_t x) { return static_cast<wide_t>(x); }

    static Rational make(wide_t n, wide_t d) {
        wide_t g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw Error("Rational: overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    static wide_t gcd128(wide_t a, wide_t b) {
        while (b != 0) {
            wide_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    void normalize() {
        *this = make(num_, den_);
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace metakit
