#pragma once

// Complete solver for the Descartes/van Schooten rule: all prime pairs
// (x, y) with z = xy + x + y and 2^n (x + y + 2) = xy + x + y + 1 for a
// given exponent n, and the amicable pairs (2^n x y, 2^n z) they induce.

#include "amicable/arith.hpp"
#include "amicable/verify.hpp"

#include <vector>

namespace amicable {

inline constexpr u32 kDefaultThabitMaxN = 60;

struct ThabitCandidate {
    u32 n;
    u64 x, y;           // odd primes, x < y
    u128 z;             // xy + x + y
    u32 splitting_index;  // i with x = 2^n + 2^i - 1, y = 2^n + 2^(2n-i) - 1
    bool z_prime;
};

// Every candidate for the given exponent, enumerated via the splittings of
// (x + 1 - 2^n)(y + 1 - 2^n) = 2^(2n) for i = 1..n-1. Throws
// std::out_of_range for n outside [1, max_n]; primality queries past the
// 64-bit deterministic range propagate std::domain_error.
std::vector<ThabitCandidate> solve_rule(u32 n, u32 max_n = kDefaultThabitMaxN);

// All amicable pairs induced by z-prime candidates with exponent <= n_max.
std::vector<AmicablePair> rule_pairs(u32 n_max, u32 max_n = kDefaultThabitMaxN);

}  // namespace amicable
