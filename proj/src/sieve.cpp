#include "amicable/sieve.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>

namespace amicable {

static std::vector<u64> allocate(u64 bound) {
    if (bound < 1) throw std::domain_error("sieve bound must be >= 1");
    try {
        return std::vector<u64>(bound + 1, 0);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("sieve allocation failed for bound " + std::to_string(bound));
    }
}

AliquotSieve build_sieve(u64 bound) {
    AliquotSieve s{bound, allocate(bound)};
    for (u64 d = 1; d <= bound / 2; ++d)
        for (u64 m = 2 * d; m <= bound; m += d) s.sums[m] += d;
    return s;
}

AliquotSieve build_sieve_segmented(u64 bound, u64 segment_size) {
    if (segment_size == 0) segment_size = 1 << 18;
    AliquotSieve s{bound, allocate(bound)};
    for (u64 lo = 2; lo <= bound; lo += segment_size) {
        u64 hi = std::min(bound, lo + segment_size - 1);
        // only divisors d <= hi/2 can land a multiple in [lo, hi]
        for (u64 d = 1; d <= hi / 2; ++d) {
            u64 first = std::max<u64>(2, (lo + d - 1) / d) * d;
            for (u64 m = first; m <= hi; m += d) s.sums[m] += d;
        }
    }
    return s;
}

std::vector<AmicablePair> amicable_below(const AliquotSieve& s) {
    std::vector<AmicablePair> pairs;
    for (u64 m = 2; m <= s.bound; ++m) {
        u64 n = s.sums[m];
        if (n > m && n <= s.bound && s.sums[n] == m)
            pairs.push_back(make_amicable_pair(factorize(m), factorize(n),
                                               Provenance{Origin::sieve, 0, {}}));
    }
    return pairs;
}

}  // namespace amicable
