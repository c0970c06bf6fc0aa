#include "coxspec/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "coxspec/errors.hpp"

namespace coxspec {

namespace {
constexpr unsigned long long kBase = 1ULL << 32;
}

BigInt::BigInt(long long v) {
    if (v >= -kSmallMax && v <= kSmallMax) {
        sv_ = v;
        return;
    }
    sgn_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    mag_ = to_limbs(m);
}

BigInt BigInt::from_string(std::string_view s) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw input_error("empty integer literal");
    BigInt r = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw input_error("bad digit in integer literal");
        r = r * 10 + (s[i] - '0');
    }
    return neg ? -r : r;
}

int BigInt::sign() const {
    if (mag_.empty()) return sv_ > 0 ? 1 : (sv_ < 0 ? -1 : 0);
    return sgn_;
}

bool BigInt::fits_int64() const {
    if (mag_.empty()) return true;
    if (mag_.size() > 2) return false;
    unsigned long long m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sgn_ > 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    if (mag_.empty()) return sv_;
    if (!fits_int64()) throw math_error("integer out of int64 range: " + to_string());
    unsigned long long m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sgn_ > 0) return static_cast<long long>(m);
    return static_cast<long long>(~m + 1ULL);
}

double BigInt::to_double() const {
    if (mag_.empty()) return static_cast<double>(sv_);
    double r = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + static_cast<double>(mag_[i]);
    return sgn_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return std::to_string(sv_);
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9, collecting the remainder
        unsigned long long rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::string chunk = std::to_string(rem);
        if (m.empty()) {
            digits = chunk + digits;
        } else {
            digits = std::string(9 - chunk.size(), '0') + chunk + digits;
        }
    }
    return (sgn_ < 0 ? "-" : "") + digits;
}

BigInt BigInt::operator-() const {
    if (mag_.empty()) {
        BigInt r;
        r.sv_ = -sv_;
        return r;
    }
    BigInt r = *this;
    r.sgn_ = -r.sgn_;
    return r;
}

BigInt BigInt::abs() const { return sign() < 0 ? -*this : *this; }

std::vector<uint32_t> BigInt::to_limbs(unsigned long long v) {
    std::vector<uint32_t> m;
    while (v) {
        m.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
        v >>= 32;
    }
    return m;
}

std::vector<uint32_t> BigInt::limbs() const {
    if (!mag_.empty()) return mag_;
    unsigned long long m = sv_ < 0 ? ~static_cast<unsigned long long>(sv_) + 1ULL
                                   : static_cast<unsigned long long>(sv_);
    return to_limbs(m);
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) {
        sgn_ = 0;
        if (sv_ != 0 && (sv_ > kSmallMax || sv_ < -kSmallMax)) {
            // should not happen: small lane always constructed in range
            std::abort();
        }
        return;
    }
    if (mag_.size() <= 2) {
        unsigned long long m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (m <= static_cast<unsigned long long>(kSmallMax)) {
            sv_ = sgn_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
            mag_.clear();
            sgn_ = 0;
        }
    }
}

BigInt BigInt::from_parts(int sign, std::vector<uint32_t> mag) {
    BigInt r;
    r.sgn_ = sign;
    r.mag_ = std::move(mag);
    r.sv_ = 0;
    r.normalize();
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    long long borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        long long d = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<long long>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = r[i + j] +
                                     static_cast<unsigned long long>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Shift-subtract long division on magnitudes; fine for the rare heap-lane
// values this project produces.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = a.size() * 32; bit-- > 0;) {
        // r = (r << 1) | bit of a
        uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < r.size(); ++i) {
            uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
        long long s;
        if (!__builtin_add_overflow(a.sv_, b.sv_, &s) && s >= -BigInt::kSmallMax &&
            s <= BigInt::kSmallMax) {
            BigInt r;
            r.sv_ = s;
            return r;
        }
    }
    int sa = a.sign(), sb = b.sign();
    if (sa == 0) return b;
    if (sb == 0) return a;
    std::vector<uint32_t> ma = a.limbs(), mb = b.limbs();
    if (sa == sb) return BigInt::from_parts(sa, BigInt::add_mag(ma, mb));
    int c = BigInt::cmp_mag(ma, mb);
    if (c == 0) return BigInt(0);
    if (c > 0) return BigInt::from_parts(sa, BigInt::sub_mag(ma, mb));
    return BigInt::from_parts(sb, BigInt::sub_mag(mb, ma));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
        long long p;
        if (!__builtin_mul_overflow(a.sv_, b.sv_, &p) && p >= -BigInt::kSmallMax &&
            p <= BigInt::kSmallMax) {
            BigInt r;
            r.sv_ = p;
            return r;
        }
    }
    int s = a.sign() * b.sign();
    if (s == 0) return BigInt(0);
    return BigInt::from_parts(s, BigInt::mul_mag(a.limbs(), b.limbs()));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw division_by_zero();
    if (a.mag_.empty() && b.mag_.empty()) {
        q = BigInt(a.sv_ / b.sv_);
        r = BigInt(a.sv_ % b.sv_);
        return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs(), b.limbs(), qm, rm);
    const int qs = qm.empty() ? 0 : a.sign() * b.sign();
    const int rs = rm.empty() ? 0 : a.sign();
    q = from_parts(qs, std::move(qm));
    r = from_parts(rs, std::move(rm));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sv_ == b.sv_ && a.sgn_ == b.sgn_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) return a.sv_ <=> b.sv_;
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    int c = BigInt::cmp_mag(a.limbs(), b.limbs());
    if (sa < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        if (a.mag_.empty() && b.mag_.empty()) {
            // finish on the fast lane
            unsigned long long x = static_cast<unsigned long long>(a.sv_);
            unsigned long long y = static_cast<unsigned long long>(b.sv_);
            while (y) {
                unsigned long long t = x % y;
                x = y;
                y = t;
            }
            return BigInt(static_cast<long long>(x));
        }
        BigInt r = a % b;
        a = b;
        b = r.abs();
    }
    return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return (a / gcd(a, b) * b).abs();
}

}  // namespace coxspec
