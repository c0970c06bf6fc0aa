#include <doctest.h>

#include <string>
#include <vector>

#include "coxspec/bigint.hpp"
#include "coxspec/errors.hpp"
#include "coxspec/rational.hpp"

#ifdef COXSPEC_HAVE_GMP
#include <gmpxx.h>
#endif

using coxspec::BigInt;
using coxspec::Rational;

namespace {

// xorshift generator kept local so test data never depends on library code
struct Rng {
    unsigned long long s = 0x853c49e6748fea9bULL;
    unsigned long long next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1DULL;
    }
    long long small() { return static_cast<long long>(next() % 2000001) - 1000000; }
    BigInt big(int words) {
        BigInt v = 0;
        for (int i = 0; i < words; ++i) v = v * BigInt(1000000007LL) + BigInt(small());
        return v;
    }
};

}  // namespace

TEST_CASE("bigint small arithmetic matches int64") {
    Rng rng;
    for (int t = 0; t < 2000; ++t) {
        long long a = rng.small(), b = rng.small();
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint crosses the small/heap boundary consistently") {
    BigInt two62 = BigInt(1LL << 31) * BigInt(1LL << 31);  // 2^62, just past the lane
    CHECK(two62.to_string() == "4611686018427387904");
    CHECK((two62 - BigInt(1)).is_small());
    CHECK_FALSE(two62.is_small());
    CHECK((two62 - two62).is_zero());
    CHECK((two62 / BigInt(2)).is_small());
    BigInt neg = -two62;
    CHECK(neg + two62 == BigInt(0));
    CHECK(neg < BigInt(0));
    CHECK(neg.to_int64() == -(1LL << 62));
}

TEST_CASE("bigint factorial frozen value") {
    // 30! cross-checked against an independent bignum tool
    BigInt f = 1;
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
    CHECK(BigInt::from_string("265252859812191058636308480000000") == f);
    CHECK((f / BigInt(30)).to_string() == "8841761993739701954543616000000");
}

#ifdef COXSPEC_HAVE_GMP
TEST_CASE("bigint matches the GMP oracle on random big operands") {
    Rng rng;
    auto to_mpz = [](const BigInt& v) { return mpz_class(v.to_string()); };
    for (int t = 0; t < 400; ++t) {
        BigInt a = rng.big(1 + static_cast<int>(rng.next() % 6));
        BigInt b = rng.big(1 + static_cast<int>(rng.next() % 6));
        mpz_class za = to_mpz(a), zb = to_mpz(b);
        CHECK((a + b).to_string() == mpz_class(za + zb).get_str());
        CHECK((a - b).to_string() == mpz_class(za - zb).get_str());
        CHECK((a * b).to_string() == mpz_class(za * zb).get_str());
        if (!b.is_zero()) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
            CHECK((a / b).to_string() == q.get_str());
            CHECK((a % b).to_string() == r.get_str());
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
        CHECK(BigInt::gcd(a, b).to_string() == g.get_str());
        CHECK((a < b) == (za < zb));
    }
}
#endif

TEST_CASE("bigint division by zero") {
    CHECK_THROWS_AS(BigInt(3) / BigInt(0), coxspec::division_by_zero);
}

TEST_CASE("rational canonical form") {
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(-2, -4) == Rational::of(1, 2));
    CHECK(Rational::of(2, -4) == Rational::of(-1, 2));
    CHECK(Rational::of(0, 7) == Rational(0));
    CHECK(Rational::of(0, 7).den() == BigInt(1));
    CHECK_THROWS_AS(Rational::of(1, 0), coxspec::division_by_zero);
}

TEST_CASE("rational field axioms on random samples") {
    Rng rng;
    auto rnd = [&rng] {
        return Rational::of(rng.small() % 500, 1 + static_cast<long long>(rng.next() % 40));
    };
    for (int t = 0; t < 500; ++t) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("rational ordering") {
    CHECK(Rational::of(1, 3) < Rational::of(1, 2));
    CHECK(Rational::of(-1, 2) < Rational::of(-1, 3));
    CHECK(Rational::of(7, 5) > Rational(1));
}
