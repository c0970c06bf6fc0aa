#include "coxspec/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <type_traits>
#include <unordered_map>

#include "coxspec/errors.hpp"

namespace coxspec {

namespace {

// Orders are bounded so a runaway lcm of user-supplied orders fails fast
// instead of allocating absurd coefficient vectors.
constexpr int kMaxOrder = 20000;

void check_order(int n) {
    if (n < 1) throw math_error("cyclotomic order must be positive");
    if (n > kMaxOrder)
        throw math_error("cyclotomic order " + std::to_string(n) + " exceeds supported bound " +
                         std::to_string(kMaxOrder));
}

struct overflow_err {};

inline long long ck_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_err{};
    return r;
}
inline long long ck_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_err{};
    return r;
}
inline long long ck_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_err{};
    return r;
}

template <class I>
inline I lane_add(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) return ck_add(a, b);
    else return a + b;
}
template <class I>
inline I lane_sub(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) return ck_sub(a, b);
    else return a - b;
}
template <class I>
inline I lane_mul(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) return ck_mul(a, b);
    else return a * b;
}
template <class I>
inline bool lane_zero(const I& a) {
    if constexpr (std::is_same_v<I, long long>) return a == 0;
    else return a.is_zero();
}

template <class I>
std::vector<I> poly_mul_school(const std::vector<I>& a, const std::vector<I>& b) {
    std::vector<I> r(a.size() + b.size() - 1, I(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (lane_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (lane_zero(b[j])) continue;
            r[i + j] = lane_add(r[i + j], lane_mul(a[i], b[j]));
        }
    }
    return r;
}

// Karatsuba on the int64 lane; the heap lane is rare enough for schoolbook.
std::vector<long long> poly_mul64(const std::vector<long long>& a,
                                  const std::vector<long long>& b) {
    const size_t n = a.size(), m = b.size();
    if (std::min(n, m) < 48) return poly_mul_school(a, b);
    size_t h = (std::max(n, m) + 1) / 2;
    auto slice = [](const std::vector<long long>& v, size_t from, size_t to) {
        std::vector<long long> r;
        if (from < v.size()) r.assign(v.begin() + from, v.begin() + std::min(to, v.size()));
        if (r.empty()) r.push_back(0);
        return r;
    };
    std::vector<long long> a0 = slice(a, 0, h), a1 = slice(a, h, n);
    std::vector<long long> b0 = slice(b, 0, h), b1 = slice(b, h, m);
    std::vector<long long> z0 = poly_mul64(a0, b0);
    std::vector<long long> z2 = poly_mul64(a1, b1);
    std::vector<long long> sa(std::max(a0.size(), a1.size()), 0);
    std::vector<long long> sb(std::max(b0.size(), b1.size()), 0);
    for (size_t i = 0; i < sa.size(); ++i)
        sa[i] = ck_add(i < a0.size() ? a0[i] : 0, i < a1.size() ? a1[i] : 0);
    for (size_t i = 0; i < sb.size(); ++i)
        sb[i] = ck_add(i < b0.size() ? b0[i] : 0, i < b1.size() ? b1[i] : 0);
    std::vector<long long> z1 = poly_mul64(sa, sb);
    std::vector<long long> r(n + m - 1, 0);
    auto acc = [&r](const std::vector<long long>& v, size_t off, int sgn) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (off + i >= r.size()) {
                if (v[i] != 0) throw overflow_err{};
                continue;
            }
            r[off + i] = sgn > 0 ? ck_add(r[off + i], v[i]) : ck_sub(r[off + i], v[i]);
        }
    };
    acc(z0, 0, +1);
    acc(z2, 2 * h, +1);
    acc(z1, h, +1);
    acc(z0, h, -1);
    acc(z2, h, -1);
    return r;
}

struct PhiData {
    UniPoly poly;
    int deg = 0;
    bool fits64 = true;
    std::vector<std::pair<int, long long>> tail64;  // non-leading coefficients, sparse
    std::vector<std::pair<int, BigInt>> tail_big;
};

std::unordered_map<int, PhiData> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<int> proper_divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    ds.pop_back();  // drop n itself
    return ds;
}

const PhiData& phi_data(int n) {
    check_order(n);
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division
    UniPoly p = UniPoly::x_pow_minus_one(n);
    for (int d : proper_divisors(n)) {
        auto q = UniPoly::exact_div(p, phi_data(d).poly);
        if (!q) throw math_error("internal: cyclotomic division not exact");
        p = std::move(*q);
    }
    PhiData data;
    data.poly = p;
    data.deg = p.degree();
    for (int i = 0; i < data.deg; ++i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!c.is_integer()) throw math_error("internal: cyclotomic coefficient not integral");
        data.tail_big.emplace_back(i, c.num());
        if (c.num().fits_int64())
            data.tail64.emplace_back(i, c.num().to_int64());
        else
            data.fits64 = false;
    }
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto [it, inserted] = g_phi_cache.emplace(n, std::move(data));
    (void)inserted;  // a racing thread may have inserted the same value
    return it->second;
}

// Reduce an integer coefficient vector mod Phi_n in place, using x^n = 1
// first, then synthetic division by the monic Phi_n. Result has length deg.
template <class I>
void reduce_int(std::vector<I>& c, int n, const std::vector<std::pair<int, I>>& tail, int deg) {
    if (static_cast<int>(c.size()) > n) {
        for (size_t i = c.size(); i-- > static_cast<size_t>(n);) {
            if (!lane_zero(c[i])) c[i - n] = lane_add(c[i - n], c[i]);
        }
        c.resize(n);
    }
    for (size_t k = c.size(); k-- > static_cast<size_t>(deg);) {
        if (lane_zero(c[k])) continue;
        I v = c[k];
        c[k] = I(0);
        for (const auto& [d, q] : tail) {
            size_t idx = k - deg + d;
            c[idx] = lane_sub(c[idx], lane_mul(v, q));
        }
    }
    c.resize(deg, I(0));
}

// scaled integer form of a rational vector: coeffs[i] = ints[i] / den
struct ScaledInts {
    std::vector<BigInt> ints;
    BigInt den;
    bool fits64 = true;
};

ScaledInts scale_to_ints(const std::vector<Rational>& c) {
    ScaledInts s;
    s.den = BigInt(1);
    for (const auto& r : c)
        if (!r.is_integer()) s.den = BigInt::lcm(s.den, r.den());
    s.ints.reserve(c.size());
    for (const auto& r : c) {
        BigInt v = r.num() * (s.den / r.den());
        if (!v.fits_int64()) s.fits64 = false;
        s.ints.push_back(std::move(v));
    }
    return s;
}

std::vector<Rational> unscale(const std::vector<BigInt>& ints, const BigInt& den) {
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(v, den);
    return out;
}

std::vector<Rational> unscale64(const std::vector<long long>& ints, const BigInt& den) {
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (long long v : ints) out.emplace_back(BigInt(v), den);
    return out;
}

// canonical reduction of an arbitrary-length rational vector mod Phi_n
std::vector<Rational> reduce_rational_vec(const std::vector<Rational>& c, int n) {
    const PhiData& phi = phi_data(n);
    ScaledInts s = scale_to_ints(c);
    if (s.fits64 && phi.fits64) {
        try {
            std::vector<long long> v;
            v.reserve(s.ints.size());
            for (const auto& b : s.ints) v.push_back(b.to_int64());
            reduce_int(v, n, phi.tail64, phi.deg);
            return unscale64(v, s.den);
        } catch (const overflow_err&) {
            // fall through to the exact heap lane
        }
    }
    std::vector<BigInt> v = s.ints;
    reduce_int(v, n, phi.tail_big, phi.deg);
    return unscale(v, s.den);
}

long long lcm_order(int a, int b) {
    long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
    if (l > kMaxOrder)
        throw math_error("cyclotomic order lcm " + std::to_string(l) + " exceeds supported bound");
    return l;
}

}  // namespace

int euler_phi(int n) {
    check_order(n);
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const UniPoly& cyclotomic_polynomial(int n) { return phi_data(n).poly; }

Cyc Cyc::from_coeffs(int order, std::vector<Rational> coeffs) {
    check_order(order);
    Cyc r;
    r.order_ = order;
    r.c_ = reduce_rational_vec(coeffs, order);
    return r;
}

Cyc Cyc::root_of_unity(int order, long long power) {
    check_order(order);
    long long k = power % order;
    if (k < 0) k += order;
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c[static_cast<size_t>(k)] = Rational(1);
    return from_coeffs(order, std::move(c));
}

Cyc Cyc::two_cos(long long k, int n) {
    check_order(n);
    long long a = k % n;
    if (a < 0) a += n;
    long long b = (n - a) % n;
    std::vector<Rational> c(static_cast<size_t>(std::max(a, b)) + 1);
    c[static_cast<size_t>(a)] += Rational(1);
    c[static_cast<size_t>(b)] += Rational(1);
    return from_coeffs(n, std::move(c));
}

bool Cyc::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyc::rational_value() const {
    if (!is_rational()) throw math_error("cyclotomic value is not rational: " + to_string());
    return c_.empty() ? Rational() : c_[0];
}

Cyc Cyc::embedded(int target_order) const {
    check_order(target_order);
    if (target_order == order_) return *this;
    if (target_order % order_ != 0) throw incompatible_orders(order_, target_order);
    int stride = target_order / order_;
    std::vector<Rational> c(static_cast<size_t>(target_order), Rational());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        c[k * static_cast<size_t>(stride)] = c_[k];
    }
    return from_coeffs(target_order, std::move(c));
}

Cyc Cyc::conj() const {
    if (is_rational()) return *this;
    std::vector<Rational> c(static_cast<size_t>(order_), Rational());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        size_t idx = k == 0 ? 0 : static_cast<size_t>(order_) - k;
        c[idx] += c_[k];
    }
    return from_coeffs(order_, std::move(c));
}

Cyc Cyc::inv() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return Cyc::from_coeffs(order_, {c_[0].inverse()});
    // extended Euclid against Phi_N: s*a + t*Phi = 1 in Q[x]
    UniPoly a{std::vector<Rational>(c_)};
    UniPoly s, t;
    UniPoly g = UniPoly::ext_gcd(a, cyclotomic_polynomial(order_), s, t);
    if (g.degree() != 0) throw math_error("internal: non-invertible cyclotomic element");
    // g is monic constant 1 after normalization
    return from_coeffs(order_, s.coeffs());
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc Cyc::scaled(const Rational& f) const {
    if (f.is_zero()) return Cyc::from_coeffs(order_, {});
    Cyc r = *this;
    for (auto& x : r.c_) x *= f;
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.order_ != b.order_) {
        int l = static_cast<int>(lcm_order(a.order_, b.order_));
        return a.embedded(l) + b.embedded(l);
    }
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_rational()) return b.scaled(a.c_.empty() ? Rational() : a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_.empty() ? Rational() : b.c_[0]);
    if (a.order_ != b.order_) {
        int l = static_cast<int>(lcm_order(a.order_, b.order_));
        return a.embedded(l) * b.embedded(l);
    }
    const int n = a.order_;
    const PhiData& phi = phi_data(n);
    ScaledInts sa = scale_to_ints(a.c_);
    ScaledInts sb = scale_to_ints(b.c_);
    BigInt den = sa.den * sb.den;
    if (sa.fits64 && sb.fits64 && phi.fits64) {
        try {
            std::vector<long long> va, vb;
            va.reserve(sa.ints.size());
            vb.reserve(sb.ints.size());
            for (const auto& x : sa.ints) va.push_back(x.to_int64());
            for (const auto& x : sb.ints) vb.push_back(x.to_int64());
            std::vector<long long> p = poly_mul64(va, vb);
            reduce_int(p, n, phi.tail64, phi.deg);
            Cyc r;
            r.order_ = n;
            r.c_ = unscale64(p, den);
            return r;
        } catch (const overflow_err&) {
            // exact heap lane below
        }
    }
    std::vector<BigInt> p = poly_mul_school(sa.ints, sb.ints);
    reduce_int(p, n, phi.tail_big, phi.deg);
    Cyc r;
    r.order_ = n;
    r.c_ = unscale(p, den);
    return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) {
        Rational ra = a.c_.empty() ? Rational() : a.c_[0];
        Rational rb = b.c_.empty() ? Rational() : b.c_[0];
        return ra == rb;
    }
    int l = static_cast<int>(lcm_order(a.order_, b.order_));
    return a.embedded(l).c_ == b.embedded(l).c_;
}

std::complex<double> Cyc::approx() const {
    std::complex<double> z(0.0, 0.0);
    const double step = 2.0 * 3.14159265358979323846 / order_;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        z += c_[k].to_double() * std::polar(1.0, step * static_cast<double>(k));
    }
    return z;
}

std::string Cyc::to_string() const {
    if (is_rational()) return (c_.empty() ? Rational() : c_[0]).to_string();
    std::string out = "{\"order\":" + std::to_string(order_) + ",\"coeffs\":[";
    size_t last = c_.size();
    while (last > 0 && c_[last - 1].is_zero()) --last;
    for (size_t i = 0; i < last; ++i) {
        if (i) out += ",";
        out += "[" + c_[i].num().to_string() + "," + c_[i].den().to_string() + "]";
    }
    out += "]}";
    return out;
}

std::optional<std::pair<long long, long long>> match_two_cos(const Cyc& c, int max_den) {
    if (max_den < 2) throw math_error("match_two_cos requires max_den >= 2");
    const int order = c.order();
    const bool c_rational = c.is_rational();
    for (int den = 3; den <= max_den; ++den) {
        for (int num = 1; 2 * num < den; ++num) {
            if (std::gcd(num, den) != 1) continue;
            // the value 2cos(2*pi*num/den) lives at order m0: den, or den/2
            // when den = 2 (mod 4) (then -2cos(2*pi*j/m0) with j = (num+m0)/2)
            int m0 = den;
            Cyc cand;
            if (den % 4 == 2) {
                m0 = den / 2;
                long long j = ((num + m0) / 2) % m0;
                cand = -Cyc::two_cos(j, m0);
            } else {
                cand = Cyc::two_cos(num, den);
            }
            if (cand.is_rational()) {
                if (c_rational && c.rational_value() == cand.rational_value())
                    return std::make_pair<long long, long long>(num, den);
                continue;
            }
            // irrational candidate generates the real subfield of conductor
            // m0 >= 5, contained in Q(zeta_order) only when m0 | order
            if (c_rational || order % m0 != 0) continue;
            if (cand.embedded(order) == c) return std::make_pair<long long, long long>(num, den);
        }
    }
    return std::nullopt;
}

}  // namespace coxspec
