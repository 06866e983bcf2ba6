#pragma once

#include <numeric>
#include <string>

#include "frob/common.hpp"

namespace frob {

// Exact rational values with a canonical positive denominator. Normalized
// invariant estimates stay exact at desk scale, so int64 components suffice;
// overflow aborts loudly rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw Error("rational with zero denominator");
        normalize();
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_, "rational add"),
                                    checked_mul(o.num_, den_, "rational add"),
                                    "rational add"),
                        checked_mul(den_, o.den_, "rational add"));
    }
    Rational operator-(const Rational& o) const {
        return *this + Rational(-o.num_, o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_, "rational mul"),
                        checked_mul(den_, o.den_, "rational mul"));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational division by zero");
        return Rational(checked_mul(num_, o.den_, "rational div"),
                        checked_mul(den_, o.num_, "rational div"));
    }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_, "rational cmp") <
               checked_mul(o.num_, den_, "rational cmp");
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return Rational(num_ < 0 ? -num_ : num_, den_); }

    // Serialized as "a/b", or just "a" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    int64_t num_;
    int64_t den_;
};

}  // namespace frob
