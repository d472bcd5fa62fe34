#include "amicable/thabit.hpp"

namespace amicable {

std::vector<ThabitCandidate> solve_rule(u32 n, u32 max_n) {
    if (n < 1 || n > max_n)
        throw std::out_of_range("thabit exponent out of range: " + std::to_string(n));
    std::vector<ThabitCandidate> out;
    u128 pow_n = checked_pow(2, n);
    // i = 0 gives even x, i = n gives x = y; both excluded.
    for (u32 i = 1; i < n; ++i) {
        u128 x128 = pow_n + checked_pow(2, i) - 1;
        u128 y128 = checked_add(pow_n, checked_pow(2, 2 * n - i)) - 1;
        if (!is_prime_exact(x128) || !is_prime_exact(y128)) continue;
        u64 x = to_u64(x128), y = to_u64(y128);
        u128 z = checked_add(checked_mul(x, y), u128(x) + y);
        // re-check both rule equations independently of the construction
        if (z != checked_mul(x, y) + x + y) continue;
        if (checked_mul(pow_n, u128(x) + y + 2) != checked_add(z, 1))
            continue;
        out.push_back(ThabitCandidate{n, x, y, z, i, is_prime_exact(z)});
    }
    return out;
}

std::vector<AmicablePair> rule_pairs(u32 n_max, u32 max_n) {
    std::vector<AmicablePair> pairs;
    for (u32 n = 1; n <= n_max; ++n) {
        for (const auto& c : solve_rule(n, max_n)) {
            if (!c.z_prime) continue;
            auto m = FactoredNat::from_factors({{2, c.n}, {c.x, 1}, {c.y, 1}});
            auto w = FactoredNat::from_factors({{2, c.n}, {to_u64(c.z), 1}});
            pairs.push_back(make_amicable_pair(std::move(m), std::move(w),
                                               Provenance{Origin::thabit, c.n, {}}));
        }
    }
    return pairs;
}

}  // namespace amicable
