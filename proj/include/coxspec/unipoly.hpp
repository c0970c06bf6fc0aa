#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxspec/rational.hpp"

namespace coxspec {

// Univariate polynomial over the rationals, coefficients lowest degree
// first, trailing zeros trimmed (zero polynomial = empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Rational r);
    static UniPoly monomial(int degree, Rational coeff);
    // x^n - 1
    static UniPoly x_pow_minus_one(int n);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    Rational coeff(int degree) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // quotient when the division is exact, empty otherwise
    static std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b);
    // g = gcd (monic), plus s,t with s*a + t*b = g
    static UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);

    Rational eval(const Rational& x) const;
    std::string to_string() const;  // debugging aid

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

}  // namespace coxspec
