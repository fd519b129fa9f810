#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "szl/error.hpp"

namespace szl {

using i128 = __int128;

// exact rational with 128-bit numerator and denominator, always reduced, den > 0
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }
    double to_double() const { return double(num_) / double(den_); }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error(Errc::InvalidArgument, "rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const { return {-num_, den_}; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;

private:
    void normalize() {
        if (den_ == 0) throw Error(Errc::InvalidArgument, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 a = num_ < 0 ? -num_ : num_, b = den_;
        while (b != 0) {
            const i128 r = a % b;
            a = b;
            b = r;
        }
        if (a > 1) {
            num_ /= a;
            den_ /= a;
        }
    }

    i128 num_ = 0;
    i128 den_ = 1;
};

inline std::string i128_str(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string s;
    while (v != 0) {
        const int digit = int(v % 10);
        s.insert(s.begin(), char('0' + (digit < 0 ? -digit : digit)));
        v /= 10;
    }
    return neg ? "-" + s : s;
}

inline std::string Rational::str() const {
    return den_ == 1 ? i128_str(num_) : i128_str(num_) + "/" + i128_str(den_);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// p + q sqrt(m) with rational p, q and rational radicand m >= 0
struct QuadraticNumber {
    Rational p;
    Rational q;
    Rational m;

    double to_double() const { return p.to_double() + q.to_double() * std::sqrt(m.to_double()); }

    // exact sign
    int sign() const {
        const int sp = p.sign();
        const int sq = m.sign() == 0 ? 0 : q.sign();
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        // opposite signs: compare p^2 with q^2 m
        const Rational lhs = p * p, rhs = q * q * m;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sp : sq;
    }

    // exact comparison with a rational: -1, 0, +1
    int compare(const Rational& r) const { return QuadraticNumber{p - r, q, m}.sign(); }

    std::string str() const {
        if (q.sign() == 0 || m.sign() == 0) return p.str();
        return p.str() + (q.sign() > 0 ? " + " : " - ") + (q.sign() > 0 ? q : -q).str() + "*sqrt(" +
               m.str() + ")";
    }
};

// exp(length) of a hyperbolic element whose real trace tau satisfies tau^2 = t2:
// ((tau + sqrt(tau^2 - 4)) / 2)^2 = (t2 - 2)/2 + (1/2) sqrt(t2 (t2 - 4))
inline QuadraticNumber norm_from_trace_sq(const Rational& t2) {
    if (t2 <= Rational(4)) throw Error(Errc::InvalidArgument, "trace not hyperbolic");
    return {(t2 - 2) / 2, Rational(1, 2), t2 * (t2 - 4)};
}

}  // namespace szl
