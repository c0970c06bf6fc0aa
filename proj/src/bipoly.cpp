#include "coxspec/bipoly.hpp"

#include <numeric>
#include <unordered_map>

#include "coxspec/errors.hpp"

namespace coxspec {

BiPoly BiPoly::constant(const Cyc& c) { return term(Mono{0, 0}, c); }

BiPoly BiPoly::term(Mono m, const Cyc& c) {
    BiPoly p;
    p.order_ = c.order();
    if (!c.is_zero()) p.t_.emplace(m, c);
    return p;
}

BiPoly BiPoly::affine(const Cyc& c1, const Cyc& c2, const Cyc& c0) {
    BiPoly p;
    p.add_term(Mono{1, 0}, c1);
    p.add_term(Mono{0, 1}, c2);
    p.add_term(Mono{0, 0}, c0);
    return p;
}

bool BiPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
}

bool BiPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first == Mono{0, 0} && t_.begin()->second.is_one();
}

int BiPoly::total_degree() const { return t_.empty() ? -1 : t_.begin()->first.total(); }

Cyc BiPoly::coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Cyc() : it->second;
}

void BiPoly::ensure_order(int n) {
    if (order_ == n) return;
    long long l = std::lcm(static_cast<long long>(order_), static_cast<long long>(n));
    if (l != order_) {
        for (auto& [m, c] : t_) c = c.embedded(static_cast<int>(l));
        order_ = static_cast<int>(l);
    }
}

void BiPoly::add_term(Mono m, const Cyc& c) {
    if (c.is_zero()) return;
    ensure_order(c.order());
    Cyc v = c.order() == order_ ? c : c.embedded(order_);
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, std::move(v));
        return;
    }
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

Cyc BiPoly::eval(const Cyc& x1, const Cyc& x2) const {
    // powers on demand; degrees stay tiny
    std::unordered_map<int, Cyc> p1, p2;
    auto power = [](std::unordered_map<int, Cyc>& cache, const Cyc& x, int e) {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        Cyc v(1);
        for (int k = 0; k < e; ++k) v *= x;
        cache.emplace(e, v);
        return v;
    };
    Cyc acc;
    for (const auto& [m, c] : t_) acc += c * power(p1, x1, m.i) * power(p2, x2, m.j);
    return acc;
}

std::optional<BiPoly> BiPoly::exact_div(const BiPoly& numer, const BiPoly& denom) {
    if (denom.is_zero()) throw division_by_zero();
    BiPoly rem = numer;
    BiPoly quo;
    const Mono dlead = denom.t_.begin()->first;
    const Cyc dinv = denom.t_.begin()->second.inv();
    while (!rem.is_zero()) {
        const Mono rlead = rem.t_.begin()->first;
        if (rlead.i < dlead.i || rlead.j < dlead.j) return std::nullopt;
        Mono q{rlead.i - dlead.i, rlead.j - dlead.j};
        Cyc f = rem.t_.begin()->second * dinv;
        quo.add_term(q, f);
        // rem -= f * x^q * denom
        for (const auto& [m, c] : denom.t_) rem.add_term(Mono{m.i + q.i, m.j + q.j}, -(f * c));
    }
    return quo;
}

std::string BiPoly::to_text() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        bool neg = false;
        Cyc v = c;
        if (v.is_rational() && v.rational_value().sign() < 0) {
            neg = true;
            v = -v;
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = v.to_string();
        bool unit = v.is_one();
        if (m.total() == 0) {
            out += cs;
        } else {
            std::string mono;
            if (m.i > 0) {
                mono += "x1";
                if (m.i > 1) mono += "^" + std::to_string(m.i);
            }
            if (m.j > 0) {
                if (!mono.empty()) mono += "*";
                mono += "x2";
                if (m.j > 1) mono += "^" + std::to_string(m.j);
            }
            if (unit) {
                out += mono;
            } else {
                out += cs + "*" + mono;
            }
        }
    }
    return out;
}

PolyMatrix PolyMatrix::pencil(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim() != b.dim()) throw math_error("pencil requires equal dimensions");
    const int n = a.dim();
    PolyMatrix p(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            p.at(r, c) = BiPoly::affine(a.at(r, c), b.at(r, c),
                                        r == c ? Cyc(Rational(-1)) : Cyc());
    return p;
}

namespace {

// Laplace expansion along the first unprocessed row, memoized on the set of
// used columns. Rows of the pencils seen here carry few nonzero entries, so
// the reachable state count stays far below 2^dim.
class DetWorker {
public:
    explicit DetWorker(const PolyMatrix& m) : m_(m), dim_(m.dim()) {}

    BiPoly run() {
        if (dim_ == 0) return BiPoly::constant(Rational(1));
        return go(0, 0);
    }

private:
    const PolyMatrix& m_;
    int dim_;
    std::unordered_map<uint64_t, BiPoly> memo_;

    BiPoly go(int row, uint64_t used) {
        if (row == dim_) return BiPoly::constant(Rational(1));
        auto it = memo_.find(used);
        if (it != memo_.end()) return it->second;
        BiPoly acc;
        int parity = 0;  // number of unused columns passed so far
        for (int c = 0; c < dim_; ++c) {
            uint64_t bit = 1ULL << c;
            if (used & bit) continue;
            const BiPoly& entry = m_.at(row, c);
            if (!entry.is_zero()) {
                BiPoly sub = go(row + 1, used | bit);
                BiPoly contrib = entry * sub;
                acc += (parity % 2 == 0) ? contrib : -contrib;
            }
            ++parity;
        }
        memo_.emplace(used, acc);
        return acc;
    }
};

}  // namespace

BiPoly det_pencil(const PolyMatrix& m) {
    if (m.dim() > 64) throw math_error("determinant dimension above supported bound 64");
    DetWorker w(m);
    return w.run();
}

}  // namespace coxspec
