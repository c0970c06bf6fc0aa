#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxspec/cyclotomic.hpp"
#include "coxspec/linalg.hpp"

namespace coxspec {

// Monomial x1^i * x2^j. Terms are ordered graded-lexicographically with
// x1 > x2, highest term first, which fixes the leading term for division
// and the canonical printing order.
struct Mono {
    int i = 0;
    int j = 0;
    int total() const { return i + j; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.i == b.i && a.j == b.j; }
};

struct MonoBefore {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.i > b.i;
    }
};

// Bivariate polynomial over cyclotomic coefficients. All stored coefficients
// share one cyclotomic order; zero coefficients are never stored.
class BiPoly {
public:
    BiPoly() = default;
    static BiPoly constant(const Cyc& c);
    static BiPoly constant(const Rational& r) { return constant(Cyc(r)); }
    static BiPoly term(Mono m, const Cyc& c);
    // convenience: c1*x1 + c2*x2 + c0
    static BiPoly affine(const Cyc& c1, const Cyc& c2, const Cyc& c0);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    int total_degree() const;  // -1 for zero
    int order() const { return order_; }
    size_t term_count() const { return t_.size(); }
    const std::map<Mono, Cyc, MonoBefore>& terms() const { return t_; }
    Cyc coeff(Mono m) const;

    void add_term(Mono m, const Cyc& c);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    Cyc eval(const Cyc& x1, const Cyc& x2) const;

    // quotient q with numer = q * denom exactly, or empty when none exists;
    // throws division_by_zero when denom is zero
    static std::optional<BiPoly> exact_div(const BiPoly& numer, const BiPoly& denom);

    // canonical text: terms in descending graded-lex order, rational
    // coefficients plain, cyclotomic ones in their serialized object form
    std::string to_text() const;

private:
    int order_ = 1;
    std::map<Mono, Cyc, MonoBefore> t_;

    void ensure_order(int n);
};

// Square matrix of bivariate polynomials, used for the spectral pencils
// -I + x1*A + x2*B.
class PolyMatrix {
public:
    explicit PolyMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}
    static PolyMatrix pencil(const CycMatrix& a, const CycMatrix& b);

    int dim() const { return dim_; }
    const BiPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }
    BiPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }

private:
    int dim_;
    std::vector<BiPoly> e_;
};

// Exact determinant by Laplace expansion over memoized column subsets; rows
// with few nonzero entries keep the state space small, which covers both the
// block-diagonal pencils of assembled representations and the row-sparse
// pencils of reflection representations.
BiPoly det_pencil(const PolyMatrix& m);

}  // namespace coxspec
