#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amicable/arith.hpp"

#include <numeric>
#include <random>

using namespace amicable;

namespace {

// Independent oracle: plain trial division.
bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FactoredNat fn(std::vector<PrimePower> fs) { return FactoredNat::from_factors(std::move(fs)); }

}  // namespace

TEST_CASE("value expands factorizations") {
    CHECK(value(fn({{2, 2}, {5, 1}, {11, 1}})) == 220);
    CHECK(value(FactoredNat::one()) == 1);
    CHECK(value(fn({{2, 4}, {23, 1}, {47, 1}})) == 17296);
}

TEST_CASE("value overflow is loud") {
    // 2^127 * 3 does not fit in 128 bits
    CHECK_THROWS_AS(value(fn({{2, 127}, {3, 1}})), std::overflow_error);
}

TEST_CASE("sigma on factored forms") {
    CHECK(sigma(fn({{2, 2}, {71, 1}})) == 504);
    CHECK(sigma(FactoredNat::one()) == 1);
    CHECK(sigma(fn({{97, 1}})) == 98);
    CHECK(sigma(fn({{2, 1}})) == 3);
}

TEST_CASE("aliquot sums of the classic pair") {
    CHECK(aliquot_sum(220) == 284);
    CHECK(aliquot_sum(284) == 220);
    CHECK(aliquot_sum(1) == 0);
    CHECK(aliquot_sum(7919) == 1);
    CHECK_THROWS_AS(aliquot_sum(0), std::domain_error);
}

TEST_CASE("is_prime basics") {
    CHECK(is_prime(71));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(143));  // 11 * 13
    CHECK(is_prime(73727));
    CHECK(is_prime(u64(18446744073709551557ULL)));  // largest 64-bit prime
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
    for (u64 n = 0; n <= 1000000; ++n) {
        if (is_prime(n) != trial_division_prime(n)) {
            CAPTURE(n);
            REQUIRE(is_prime(n) == trial_division_prime(n));
        }
    }
}

TEST_CASE("is_prime_exact beyond 64 bits") {
    u128 big_even = (u128(1) << 70);
    CHECK_FALSE(is_prime_exact(big_even));
    CHECK_FALSE(is_prime_exact((u128(1) << 70) + 5));  // divisible by 3
    // survives trial division, cannot be certified
    u128 m127 = (u128(1) << 127) - 1;  // Mersenne prime, but out of reach
    CHECK_THROWS_AS(is_prime_exact(m127), std::domain_error);
}

TEST_CASE("factorize canonical forms") {
    CHECK(factorize(284) == fn({{2, 2}, {71, 1}}));
    CHECK(factorize(1) == FactoredNat::one());
    CHECK(factorize(73727) == fn({{73727, 1}}));
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize handles semiprimes past the trial bound") {
    // both factors above the 10^4 trial-division cutoff
    u64 p = 1000003, q = 1000033;
    CHECK(factorize(p * q) == fn({{p, 1}, {q, 1}}));
    CHECK(factorize(p * p) == fn({{p, 2}}));
}

TEST_CASE("divisor enumeration") {
    auto ds = divisors(fn({{2, 2}, {71, 1}}));
    CHECK(ds == std::vector<u128>{1, 2, 4, 71, 142, 284});
    CHECK(divisors(FactoredNat::one()) == std::vector<u128>{1});

    auto d220 = divisors(fn({{2, 2}, {5, 1}, {11, 1}}));
    CHECK(d220.size() == 12);
    u128 sum = 0;
    for (u128 d : d220) sum += d;
    CHECK(sum == 504);
}

TEST_CASE("divisor cap is enforced") {
    CHECK_THROWS_AS(divisors(fn({{2, 2}, {5, 1}, {11, 1}}), 4), std::length_error);
}

TEST_CASE("factored-form text round trip") {
    CHECK(format_factored(parse_factored("2^2*5*11")) == "2^2*5*11");
    CHECK(value(parse_factored("2^2 * 5 * 11")) == 220);
    CHECK(value(parse_factored("2^2\xC2\xB7""5\xC2\xB7""11")) == 220);
    CHECK(parse_factored("1") == FactoredNat::one());
    // out-of-order and repeated primes normalize
    CHECK(format_factored(parse_factored("23*2^2*5*137")) == "2^2*5*23*137");
    CHECK(format_factored(parse_factored("3*3*5")) == "3^2*5");
    CHECK_THROWS_AS(parse_factored("4*5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored("2^0"), std::invalid_argument);
}

TEST_CASE("sigma is multiplicative over coprime arguments") {
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<u64> dist(1, 1000000);
    int tested = 0;
    while (tested < 2000) {
        u64 m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        ++tested;
        CHECK(sigma(factorize(m * n)) == checked_mul(sigma(factorize(m)), sigma(factorize(n))));
    }
}

TEST_CASE("value(factorize(n)) round trips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(1, u64(1) << 40);
    for (int i = 0; i < 500; ++i) {
        u64 n = dist(rng);
        CHECK(value(factorize(n)) == n);
    }
}

TEST_CASE("divisor sum and count match sigma and exponents") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<u64> dist(1, 1000000);
    for (int i = 0; i < 300; ++i) {
        auto f = factorize(dist(rng));
        auto ds = divisors(f);
        u128 sum = 0;
        for (u128 d : ds) sum += d;
        CHECK(sum == sigma(f));
        u64 count = 1;
        for (const auto& pp : f.factors) count *= pp.exponent + 1;
        CHECK(ds.size() == count);
    }
}
