#pragma once

// Exhaustive aliquot-sum table up to a bound: the brute-force oracle and
// census generator.

#include "amicable/arith.hpp"
#include "amicable/verify.hpp"

#include <vector>

namespace amicable {

inline constexpr u64 kDefaultCensusBound = 1000000;

// Immutable after construction; sums[n] is the aliquot sum of n for
// 1 <= n <= bound. Safe for bound <= 2^32: aliquot sums fit 64 bits.
struct AliquotSieve {
    u64 bound = 0;
    std::vector<u64> sums;  // index 0 unused
};

// Divisor-summation sieve: each d <= bound/2 is added into sums[k*d], k >= 2.
AliquotSieve build_sieve(u64 bound);

// Same table, filled window by window. segment_size = 0 picks a default.
AliquotSieve build_sieve_segmented(u64 bound, u64 segment_size = 0);

// All (m, n) with m < n <= bound, sums[m] = n, sums[n] = m; ascending by m.
std::vector<AmicablePair> amicable_below(const AliquotSieve& s);

}  // namespace amicable
