#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coxspec {

// Arbitrary-precision signed integer with an inline fast lane.
//
// Values with |v| <= kSmallMax live in a plain int64 and never touch the
// heap; larger values carry a little-endian base-2^32 magnitude. All
// arithmetic stays exact and canonical (the heap lane is used only when the
// value does not fit the small lane), so equality is plain member equality.
class BigInt {
public:
    static constexpr long long kSmallMax = (1LL << 62) - 1;

    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return mag_.empty() && sv_ == 0; }
    bool is_one() const { return mag_.empty() && sv_ == 1; }
    int sign() const;
    bool is_small() const { return mag_.empty(); }
    // Only valid on the small lane.
    long long small_value() const { return sv_; }
    bool fits_int64() const;
    long long to_int64() const;  // throws math_error when out of range
    double to_double() const;
    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder keeps the
    // sign of the dividend. Throws division_by_zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);

private:
    // Small lane: mag_ empty, value in sv_ (|sv_| <= kSmallMax).
    // Heap lane: sgn_ in {-1,+1}, mag_ nonempty with no leading zero limb.
    long long sv_ = 0;
    int sgn_ = 0;
    std::vector<uint32_t> mag_;

    void normalize();
    static std::vector<uint32_t> to_limbs(unsigned long long v);
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    std::vector<uint32_t> limbs() const;
    static BigInt from_parts(int sign, std::vector<uint32_t> mag);
};

}  // namespace coxspec
