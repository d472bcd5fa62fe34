#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amicable/sieve.hpp"

#include <algorithm>
#include <random>

using namespace amicable;

TEST_CASE("sieve basics") {
    auto s = build_sieve(300);
    CHECK(s.sums[1] == 0);
    CHECK(s.sums[2] == 1);
    CHECK(s.sums[12] == 16);
    CHECK(s.sums[220] == 284);
    CHECK(s.sums[284] == 220);
    CHECK(build_sieve(10).sums[1] == 0);
    CHECK_THROWS_AS(build_sieve(0), std::domain_error);
}

TEST_CASE("sieve entries are primes' calling card") {
    auto s = build_sieve(1000);
    for (u64 p : {2, 3, 5, 7, 97, 997}) CHECK(s.sums[p] == 1);
}

TEST_CASE("sieve agrees with factorization on random samples") {
    auto s = build_sieve(200000);
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<u64> dist(1, s.bound);
    for (int i = 0; i < 1000; ++i) {
        u64 n = dist(rng);
        CHECK(u128(s.sums[n]) == aliquot_sum(n));
    }
}

TEST_CASE("segmented build is identical to the plain build") {
    auto plain = build_sieve(30000);
    for (u64 seg : {u64(1000), u64(4096), u64(29999), u64(100000)}) {
        auto segmented = build_sieve_segmented(30000, seg);
        CHECK(segmented.sums == plain.sums);
    }
}

TEST_CASE("census below 100 is empty") {
    CHECK(amicable_below(build_sieve(100)).empty());
}

TEST_CASE("census below 300 is exactly the classic pair") {
    auto pairs = amicable_below(build_sieve(300));
    REQUIRE(pairs.size() == 1);
    CHECK(value(pairs[0].first) == 220);
    CHECK(value(pairs[0].second) == 284);
    CHECK(pairs[0].prov.origin == Origin::sieve);
}

TEST_CASE("census below 10^4: the frozen five") {
    auto pairs = amicable_below(build_sieve(10000));
    std::vector<std::pair<u64, u64>> got;
    for (const auto& p : pairs) got.emplace_back(to_u64(value(p.first)), to_u64(value(p.second)));
    std::vector<std::pair<u64, u64>> expected{
        {220, 284}, {1184, 1210}, {2620, 2924}, {5020, 5564}, {6232, 6368}};
    CHECK(got == expected);
}

TEST_CASE("no false positives in the census") {
    for (const auto& p : amicable_below(build_sieve(20000)))
        CHECK(is_amicable(to_u64(value(p.first)), to_u64(value(p.second))));
}

TEST_CASE("census at 10^6 contains every valid table pair under the bound") {
    auto s = build_sieve_segmented(1000000);
    auto pairs = amicable_below(s);
    std::vector<std::pair<u64, u64>> census;
    for (const auto& p : pairs) census.emplace_back(to_u64(value(p.first)), to_u64(value(p.second)));
    int covered = 0;
    for (const auto& e : euler_table()) {
        if (!check_pair(e.pair).ok) continue;
        u128 m = value(e.pair.first), n = value(e.pair.second);
        if (n > 1000000) continue;
        ++covered;
        std::pair<u64, u64> key{to_u64(m), to_u64(n)};
        CAPTURE(e.index);
        CHECK(std::find(census.begin(), census.end(), key) != census.end());
    }
    // entries 1, 2, 4, 5, 6, 8, 9, 10, 11, 19, 20, 22, 24, 28 fit below 10^6
    CHECK(covered == 14);
}
