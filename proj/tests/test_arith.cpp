// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <siegelcong/arith.hpp>

#include "oracles.hpp"

using namespace siegelcong;

TEST(Rational, ToStringAndParse) {
    EXPECT_EQ(to_string(Rat(43867, 798)), "43867/798");
    EXPECT_EQ(to_string(Rat(-5, 66)), "-5/66");
    EXPECT_EQ(to_string(Rat(7)), "7");
    EXPECT_EQ(to_string(Rat(0)), "0");
    EXPECT_EQ(to_string(Rat(4, 2)), "2");  // canonicalized
    EXPECT_EQ(parse_rational("43867/798"), Rat(43867, 798));
    EXPECT_EQ(parse_rational("-43867/14364"), Rat(-43867, 14364));
    EXPECT_EQ(parse_rational("12"), Rat(12));
    EXPECT_EQ(parse_rational("-12"), Rat(-12));
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0x"), std::invalid_argument);
    EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_int("3/2"), std::invalid_argument);
    EXPECT_EQ(parse_int("-17"), Int(-17));
}

TEST(Rational, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int n = Int(rng()) - Int(rng());
        Int d = Int(rng() % 1000000) + 1;
        Rat x(n, d);
        EXPECT_EQ(parse_rational(to_string(x)), x);
    }
}

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binomial(10, 5), 252);
    EXPECT_EQ(binomial(52, 5), 2598960);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(5, 6), 0);
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned k = 1; k <= n; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Primality, SmallAndKnown) {
    EXPECT_FALSE(is_prime(Int(0)));
    EXPECT_FALSE(is_prime(Int(1)));
    EXPECT_TRUE(is_prime(Int(2)));
    EXPECT_TRUE(is_prime(Int(43867)));
    EXPECT_TRUE(is_prime(Int(691)));
    EXPECT_FALSE(is_prime(Int(561)));    // Carmichael
    EXPECT_FALSE(is_prime(Int(41041)));  // Carmichael
    EXPECT_TRUE(is_prime(Int("2305843009213693951")));  // 2^61 - 1
    EXPECT_TRUE(is_prime(Int("154210205991661")));
    EXPECT_FALSE(is_prime(Int("854513")));  // 11 * 131 * 593
}

TEST(Primality, CertificationBoundary) {
    // prime beyond the deterministic witness bound: refuse to certify
    Int m89 = (Int(1) << 89) - 1;
    EXPECT_THROW(is_prime(m89), std::domain_error);
    // composite beyond the bound: compositeness is still provable
    Int sq = Int("2305843009213693951") * Int("2305843009213693951");
    EXPECT_FALSE(is_prime(sq));
}

TEST(Primality, NextPrime) {
    EXPECT_EQ(next_prime(Int(0)), 2);
    EXPECT_EQ(next_prime(Int(2)), 3);
    EXPECT_EQ(next_prime(Int(13)), 17);
    EXPECT_EQ(next_prime(Int(20)), 23);
    EXPECT_EQ(next_prime(Int(43866)), 43867);
}

TEST(Factorize, KnownNumerators) {
    auto f1 = factorize(Int(854513));
    ASSERT_EQ(f1.factors.size(), 3u);
    EXPECT_EQ(f1.factors[0].first, 11);
    EXPECT_EQ(f1.factors[1].first, 131);
    EXPECT_EQ(f1.factors[2].first, 593);

    auto f2 = factorize(Int("8615841276005"));
    ASSERT_EQ(f2.factors.size(), 3u);
    EXPECT_EQ(f2.factors[0].first, 5);
    EXPECT_EQ(f2.factors[1].first, 1721);
    EXPECT_EQ(f2.factors[2].first, Int("1001259881"));

    auto f3 = factorize(Int("2577687858367"));
    ASSERT_EQ(f3.factors.size(), 2u);
    EXPECT_EQ(f3.factors[0].first, 17);
    EXPECT_EQ(f3.factors[1].first, Int("151628697551"));

    auto f4 = factorize(Int("2929993913841559"));
    ASSERT_EQ(f4.factors.size(), 2u);
    EXPECT_EQ(f4.factors[0].first, 19);
    EXPECT_EQ(f4.factors[1].first, Int("154210205991661"));

    auto f5 = factorize(Int(8553103));
    ASSERT_EQ(f5.factors.size(), 2u);
    EXPECT_EQ(f5.factors[0].first, 13);
    EXPECT_EQ(f5.factors[1].first, 657931);
}

TEST(Factorize, ReassemblyExhaustive) {
    for (std::int64_t n = 1; n <= 200000; ++n) {
        Factorization f = factorize(Int(n));
        ASSERT_EQ(f.value(), n) << n;
        for (const auto& [p, e] : f.factors) ASSERT_TRUE(is_prime(p)) << n;
    }
}

TEST(Factorize, ReassemblyRandomWide) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Int n = Int(rng() % (std::uint64_t(1) << 40)) + 2;
        Factorization f = factorize(n);
        ASSERT_EQ(f.value(), n) << n.str();
        for (std::size_t j = 1; j < f.factors.size(); ++j)
            ASSERT_LT(f.factors[j - 1].first, f.factors[j].first);
        for (const auto& [p, e] : f.factors) ASSERT_TRUE(is_prime(p));
    }
    EXPECT_THROW(factorize(Int(0)), std::domain_error);
    EXPECT_TRUE(factorize(Int(1)).factors.empty());
}

TEST(OrdP, ValuesAndAdditivity) {
    EXPECT_EQ(ord_p(Rat(0), Int(5)), ord_infinity);
    EXPECT_EQ(ord_p(Rat(250, 3), Int(5)), 3);
    EXPECT_EQ(ord_p(Rat(3, 250), Int(5)), -3);
    EXPECT_EQ(ord_p(Rat(43867, 798), Int(43867)), 1);
    EXPECT_THROW(ord_p(Rat(1), Int(6)), std::domain_error);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Int p = next_prime(Int(rng() % 100));
        Rat x(Int(rng() % 100000) + 1, Int(rng() % 100000) + 1);
        Rat y(Int(rng() % 100000) + 1, Int(rng() % 100000) + 1);
        ASSERT_EQ(ord_p(x * y, p), ord_p(x, p) + ord_p(y, p));
    }
}

TEST(Sigma, AgainstBruteForce) {
    EXPECT_EQ(sigma(9, Int(1)), 1);
    EXPECT_EQ(sigma(3, Int(2)), 9);
    EXPECT_EQ(sigma(9, Int(2)), 513);
    EXPECT_EQ(sigma(17, Int(6)), Int("16926788715972"));
    EXPECT_THROW(sigma(3, Int(0)), std::domain_error);
    for (unsigned w : {0u, 1u, 3u, 9u})
        for (std::int64_t n = 1; n <= 300; ++n) {
            Int brute = 0;
            for (std::int64_t d = 1; d <= n; ++d)
                if (n % d == 0) brute += pow_int(Int(d), w);
            ASSERT_EQ(sigma(w, Int(n)), brute) << w << " " << n;
        }
}

TEST(Kronecker, FrozenSamples) {
    EXPECT_EQ(kronecker(Int(-4), Int(1)), 1);
    EXPECT_EQ(kronecker(Int(-4), Int(3)), -1);
    EXPECT_EQ(kronecker(Int(-4), Int(5)), 1);
    EXPECT_EQ(kronecker(Int(-4), Int(2)), 0);
    EXPECT_EQ(kronecker(Int(-3), Int(2)), -1);
    EXPECT_EQ(kronecker(Int(-8), Int(3)), 1);
    EXPECT_EQ(kronecker(Int(5), Int(5)), 0);
    EXPECT_EQ(kronecker(Int(1), Int(0)), 1);
    EXPECT_EQ(kronecker(Int(2), Int(0)), 0);
    EXPECT_EQ(kronecker(Int(-1), Int(-1)), -1);
}

TEST(Kronecker, MatchesLegendreRoute) {
    for (Int D : {Int(-3), Int(-4), Int(-7), Int(-8), Int(-11), Int(5), Int(8), Int(12)})
        for (Int n = 1; n <= 399; n += 2)
            ASSERT_EQ(kronecker(D, n), oracles::kronecker_odd(D, n)) << D << " " << n;
}

TEST(Kronecker, PeriodicityAndMultiplicativity) {
    for (Int D : {Int(-3), Int(-4), Int(-8), Int(-20), Int(13)}) {
        Int f = boost::multiprecision::abs(D);
        for (Int n = 1; n <= 100; ++n)
            ASSERT_EQ(kronecker(D, n), kronecker(D, n + f)) << D << " " << n;
        for (Int m = 1; m <= 40; ++m)
            for (Int n = 1; n <= 40; ++n)
                ASSERT_EQ(kronecker(D, m * n), kronecker(D, m) * kronecker(D, n));
    }
}

TEST(FundamentalDiscriminant, Classification) {
    for (Int d : {Int(1), Int(-3), Int(-4), Int(-7), Int(-8), Int(-11), Int(-19), Int(5),
                  Int(8), Int(12), Int(-20)})
        EXPECT_TRUE(is_fundamental_discriminant(d)) << d;
    for (Int d : {Int(0), Int(-1), Int(2), Int(3), Int(4), Int(9), Int(-9), Int(-12), Int(25)})
        EXPECT_FALSE(is_fundamental_discriminant(d)) << d;
}

TEST(FundamentalDecomposition, FrozenAndProperty) {
    auto check = [](std::int64_t N, std::int64_t d, std::int64_t f) {
        auto [dd, ff] = fundamental_decomposition(Int(N));
        EXPECT_EQ(dd, d) << N;
        EXPECT_EQ(ff, f) << N;
    };
    check(3, -3, 1);
    check(4, -4, 1);
    check(7, -7, 1);
    check(8, -8, 1);
    check(12, -3, 2);
    check(16, -4, 2);
    check(27, -3, 3);
    check(100, -4, 5);
    EXPECT_THROW(fundamental_decomposition(Int(1)), std::domain_error);
    EXPECT_THROW(fundamental_decomposition(Int(2)), std::domain_error);
    EXPECT_THROW(fundamental_decomposition(Int(0)), std::domain_error);
    for (Int N = 3; N <= 10000; ++N) {
        Int r = mod4(-N);
        if (r != 0 && r != 1) continue;
        auto [d, f] = fundamental_decomposition(N);
        ASSERT_TRUE(is_fundamental_discriminant(d)) << N;
        ASSERT_LT(d, 0) << N;
        ASSERT_EQ(d * f * f, -N) << N;
    }
}
