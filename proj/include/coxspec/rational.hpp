#pragma once

#include <compare>
#include <string>

#include "coxspec/bigint.hpp"
#include "coxspec/errors.hpp"

namespace coxspec {

// Exact rational, always reduced: gcd(|num|, den) = 1, den >= 1, zero = 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit integers wanted
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    static Rational of(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
        if (a.num_.is_zero()) return b;
        if (b.num_.is_zero()) return a;
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Rational();
        if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_);
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_.is_one()) return;
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace coxspec
