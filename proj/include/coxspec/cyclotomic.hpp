#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxspec/rational.hpp"
#include "coxspec/unipoly.hpp"

namespace coxspec {

// Element of the N-th cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N reduced mod Phi_N. The reduction is canonical, so two elements at a
// common order are equal iff their coefficient vectors are equal; elements at
// different orders are compared after embedding into the lcm order.
//
// Values are immutable after construction and safe to share across threads;
// the Phi_N cache below is guarded and write-once.
class Cyc {
public:
    Cyc() : order_(1), c_(1) {}                       // zero
    explicit Cyc(const Rational& r) : order_(1), c_{r} {}
    Cyc(long long n) : Cyc(Rational(n)) {}            // NOLINT: integer literals wanted

    // zeta_N^k (k taken mod N)
    static Cyc root_of_unity(int order, long long power);
    // zeta_n^k + zeta_n^{-k} = 2cos(2*pi*k/n)
    static Cyc two_cos(long long k, int n);
    // raw coefficients (length <= anything), reduced mod Phi_N on entry
    static Cyc from_coeffs(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_one() const { return is_rational() && c_[0] == Rational(1); }
    // throws math_error when the value is not rational
    Rational rational_value() const;

    // image under zeta_M -> zeta_N^{N/M}; throws incompatible_orders
    Cyc embedded(int target_order) const;
    // complex conjugate, zeta_N -> zeta_N^{-1}
    Cyc conj() const;
    // multiplicative inverse; throws division_by_zero on zero
    Cyc inv() const;

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    friend bool operator==(const Cyc& a, const Cyc& b);

    Cyc scaled(const Rational& r) const;

    // floating approximation at zeta_N = e^{2*pi*i/N}; rendering only,
    // never used for equality decisions
    std::complex<double> approx() const;

    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> c_;  // length phi(order_), canonical
};

// Euler's totient.
int euler_phi(int n);

// N-th cyclotomic polynomial, exact, monic of degree phi(N); cached.
const UniPoly& cyclotomic_polynomial(int n);

// The unique reduced fraction q = num/den with 0 < q < 1/2, den <= max_den
// and c = 2cos(2*pi*q), if one exists. Exact scan over candidates.
std::optional<std::pair<long long, long long>> match_two_cos(const Cyc& c, int max_den);

}  // namespace coxspec
