#pragma once

// Exact arithmetic over factored naturals: sigma, aliquot sums, primality,
// factorization, divisor enumeration. Products and sigma values are carried
// in 128 bits; every operation is overflow-checked and throws rather than
// wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amicable {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("128-bit addition overflow");
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit multiplication overflow");
    return r;
}

u128 checked_pow(u64 base, u32 exp);

std::string dec_string(u128 v);
u128 parse_decimal(std::string_view s);

// Narrow to 64 bits, throwing instead of truncating.
inline u64 to_u64(u128 v) {
    if (v > u128(UINT64_MAX))
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<u64>(v);
}

struct PrimePower {
    u64 prime;
    u32 exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime factorization. Empty factor list is the number 1.
// Primes strictly increasing, exponents >= 1, every prime certified prime.
struct FactoredNat {
    std::vector<PrimePower> factors;

    static FactoredNat one() { return FactoredNat{}; }
    // Normalizes (sorts, merges repeats) and validates primality.
    static FactoredNat from_factors(std::vector<PrimePower> fs);

    friend bool operator==(const FactoredNat&, const FactoredNat&) = default;
};

u128 value(const FactoredNat& f);
u128 sigma(const FactoredNat& f);

// Deterministic for all 64-bit inputs (Miller-Rabin, 12-prime witness set).
bool is_prime(u64 n);

// Exact for n < 2^64. Above that, trial division up to 10^6 can still prove
// compositeness; if inconclusive, throws std::domain_error rather than
// returning a probabilistic answer.
bool is_prime_exact(u128 n);

// n >= 1. Trial division to a fixed bound, then Brent's rho with a
// deterministic polynomial-increment fallback.
FactoredNat factorize(u64 n);

// sigma(n) - n. n >= 1, else std::domain_error.
u128 aliquot_sum(u64 n);

inline constexpr u64 kDefaultDivisorCap = u64(1) << 20;

// All divisors ascending; throws std::length_error past the cap.
std::vector<u128> divisors(const FactoredNat& f, u64 cap = kDefaultDivisorCap);

// Text syntax: `2^2*5*11` -- caret for exponent, `*` (or `·`) separator,
// exponent 1 omitted. Parser tolerates whitespace and out-of-order primes;
// output is always canonical ascending. "1" is the empty product.
FactoredNat parse_factored(std::string_view text);
std::string format_factored(const FactoredNat& f);

}  // namespace amicable
