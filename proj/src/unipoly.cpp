#include "coxspec/unipoly.hpp"

#include <algorithm>

#include "coxspec/errors.hpp"

namespace coxspec {

UniPoly UniPoly::constant(Rational r) {
    std::vector<Rational> c;
    if (!r.is_zero()) c.push_back(std::move(r));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(int degree, Rational coeff) {
    if (coeff.is_zero()) return UniPoly();
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::x_pow_minus_one(int n) {
    std::vector<Rational> c(n + 1);
    c[0] = Rational(-1);
    c[n] = Rational(1);
    return UniPoly(std::move(c));
}

const Rational& UniPoly::leading() const {
    static const Rational zero;
    return c_.empty() ? zero : c_.back();
}

Rational UniPoly::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(c_.size())) return Rational();
    return c_[degree];
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw division_by_zero();
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> quo;
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational());
    Rational lead_inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[k];
        if (c.is_zero()) continue;
        Rational f = c * lead_inv;
        quo[k - db] = f;
        for (int i = 0; i <= db; ++i) {
            if (b.c_[i].is_zero()) continue;
            rem[k - db + i] -= f * b.c_[i];
        }
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

std::optional<UniPoly> UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly UniPoly::ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        UniPoly q, r;
        divmod(r0, r1, q, r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // normalize to monic gcd
    if (!r0.is_zero() && !(r0.leading() == Rational(1))) {
        Rational inv = r0.leading().inverse();
        r0 = r0 * UniPoly::constant(inv);
        s0 = s0 * UniPoly::constant(inv);
        t0 = t0 * UniPoly::constant(inv);
    }
    s = s0;
    t = t0;
    return r0;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += c_[i].sign() > 0 ? " + " : " - ";
        else if (c_[i].sign() < 0) out += "-";
        Rational a = c_[i].sign() < 0 ? -c_[i] : c_[i];
        bool unit = a == Rational(1);
        if (i == 0 || !unit) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace coxspec
