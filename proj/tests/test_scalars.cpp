#include <doctest.h>

#include <random>

#include "phinforge/scalars.hpp"

using namespace phinforge;

TEST_CASE("bigint arithmetic against 64-bit oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 500; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a % 100000) * BigInt(b % 100000)).to_ll() == (a % 100000) * (b % 100000));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_ll() == a / b);
            CHECK(r.to_ll() == a % b);
        }
    }
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    BigInt big = BigInt::pow(BigInt(7), 40);
    BigInt q, r;
    BigInt::divmod(big, BigInt::pow(BigInt(7), 17), q, r);
    CHECK(r.is_zero());
    CHECK(q == BigInt::pow(BigInt(7), 23));
}

TEST_CASE("rational reduction and valuation") {
    Rational x(6, -4);
    CHECK(x.to_string() == "-3/2");
    CHECK(Rational::from_string("-3/2") == x);
    CHECK(Rational(3, 4).valuation(BigInt(2)) == -2);
    CHECK(Rational(8).valuation(BigInt(2)) == 3);
}

TEST_CASE("val_p normalization") {
    FieldParams fp(2, 2, 1);
    CHECK(*val_p(PiScalar::p_pow(fp, 1)) == Rational(1));
    CHECK(*val_p(PiScalar::pi_pow(fp, 1)) == Rational(1, 2));
    // (3/4) * pi^2 at p=2, e=2: val = -2 + 1
    PiScalar x = PiScalar(fp, Rational(3, 4)) * PiScalar::pi_pow(fp, 2);
    CHECK(*val_p(x) == Rational(-1));
    CHECK(!val_p(PiScalar::zero(fp)).has_value());
}

TEST_CASE("val_p is additive on products") {
    FieldParams fp(3, 3, 1);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-12, 12);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> ca(3), cb(3);
        for (int k = 0; k < 3; ++k) {
            ca[static_cast<size_t>(k)] = Rational(dist(rng), 1 + std::abs(dist(rng)));
            cb[static_cast<size_t>(k)] = Rational(dist(rng), 1 + std::abs(dist(rng)));
        }
        PiScalar a(fp, ca), b(fp, cb);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*val_p(a * b) == *val_p(a) + *val_p(b));
    }
}

TEST_CASE("pi scalar inverse") {
    FieldParams fp(5, 3, 1);
    PiScalar x(fp, {Rational(2, 3), Rational(-1), Rational(7, 2)});
    PiScalar inv = x.inverse();
    CHECK(x * inv == PiScalar::one(fp));
}

TEST_CASE("newton slopes basic examples") {
    FieldParams fp(2, 1, 1);
    auto id2 = scalar_identity(fp, 2);
    auto s = newton_slopes(id2, fp, 1);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Rational(0));
    CHECK(s[1] == Rational(0));

    ScalarMatrix diag(2, 2);
    diag(0, 0) = PiScalar::p_pow(fp, 1);
    diag(1, 1) = PiScalar::p_pow(fp, 2);
    s = newton_slopes(diag, fp, 1);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == Rational(2));

    // cyclic monomial with entries 1 and p; square has char poly (x - p)^2
    ScalarMatrix cyc(2, 2);
    cyc(0, 1) = PiScalar::p_pow(fp, 1);
    cyc(1, 0) = PiScalar::one(fp);
    s = newton_slopes(cyc, fp, 2);
    CHECK(s[0] == Rational(1, 2));
    CHECK(s[1] == Rational(1, 2));

    ScalarMatrix sing(2, 2);
    sing(0, 0) = PiScalar::one(fp);
    CHECK_THROWS_WITH_AS(newton_slopes(sing, fp, 1), "non-bijective Frobenius", std::domain_error);
}

TEST_CASE("newton slopes of block diagonal matrices union, sum equals det valuation") {
    FieldParams fp(3, 2, 1);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> dist(-6, 6);
    for (int rep = 0; rep < 10; ++rep) {
        ScalarMatrix a(2, 2), b(3, 3);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    a(i, j) = PiScalar(fp, {Rational(dist(rng)), Rational(dist(rng))});
        } while (determinant(a, PiScalar::one(fp)).is_zero());
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    b(i, j) = PiScalar(fp, {Rational(dist(rng)), Rational(dist(rng))});
        } while (determinant(b, PiScalar::one(fp)).is_zero());

        ScalarMatrix blk(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) blk(i, j) = PiScalar::zero(fp);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) blk(i, j) = a(i, j);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) blk(2 + i, 2 + j) = b(i, j);

        auto sa = newton_slopes(a, fp, 1);
        auto sb = newton_slopes(b, fp, 1);
        auto sblk = newton_slopes(blk, fp, 1);
        std::vector<Rational> merged = sa;
        merged.insert(merged.end(), sb.begin(), sb.end());
        std::sort(merged.begin(), merged.end());
        REQUIRE(sblk.size() == merged.size());
        for (size_t i = 0; i < merged.size(); ++i) CHECK(sblk[i] == merged[i]);

        Rational total(0);
        for (const auto& sl : sblk) total += sl;
        CHECK(total == *val_p(determinant(blk, PiScalar::one(fp))));
    }
}
