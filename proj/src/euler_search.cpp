#include "amicable/euler_search.hpp"

#include <algorithm>
#include <numeric>

namespace amicable {

static bool coprime_to(u128 av, u64 p) { return av % p != 0; }

std::vector<EulerSolutionA> search_form_a(const FactoredNat& a) {
    std::vector<EulerSolutionA> out;
    u128 av = value(a);
    u128 b = sigma(a);
    if (2 * av <= b) return out;  // not deficient
    u128 c = 2 * av - b;
    u128 e = b - av;

    auto a_sq = a;
    for (auto& pp : a_sq.factors) pp.exponent *= 2;

    for (u128 d1 : divisors(a_sq)) {
        if (checked_mul(d1, d1) >= value(a_sq)) break;  // d1 = d2 rejected
        u128 d2 = value(a_sq) / d1;
        if ((d1 + e) % c != 0 || (d2 + e) % c != 0) continue;
        u128 p128 = (d1 + e) / c, q128 = (d2 + e) / c;
        if (p128 < 2 || !is_prime_exact(p128) || !is_prime_exact(q128)) continue;
        u64 p = to_u64(p128), q = to_u64(q128);
        if (!coprime_to(av, p) || !coprime_to(av, q)) continue;
        u128 r128 = checked_add(checked_mul(p, q), u128(p) + q);
        if (!is_prime_exact(r128)) continue;
        u64 r = to_u64(r128);
        if (!coprime_to(av, r)) continue;

        auto mf = a.factors;
        mf.push_back({p, 1});
        mf.push_back({q, 1});
        auto nf = a.factors;
        nf.push_back({r, 1});
        auto pair = make_amicable_pair(FactoredNat::from_factors(mf),
                                       FactoredNat::from_factors(nf),
                                       Provenance{Origin::euler_form_a, 0, format_factored(a)});
        if (!check_pair(pair).ok) continue;  // full sigma recomputation
        out.push_back(EulerSolutionA{a, b, p, q, r, std::move(pair)});
    }
    return out;
}

namespace {
struct Splitting {
    u64 p, q;  // p < q, both prime, (p+1)(q+1) = g
    u64 sum;
};
}  // namespace

static std::vector<Splitting> prime_splittings(u64 g, u128 av) {
    std::vector<Splitting> sp;
    for (u128 d : divisors(factorize(g))) {
        if (d < 3) continue;
        if (checked_mul(d, d) >= g) break;  // d = g/d would give p = q
        u64 p = u64(d) - 1, q = g / u64(d) - 1;
        if (!is_prime(p) || !is_prime(q)) continue;
        if (!coprime_to(av, p) || !coprime_to(av, q)) continue;
        sp.push_back(Splitting{p, q, p + q});
    }
    return sp;
}

std::vector<EulerSolutionB> search_form_b(const FactoredNat& a, u64 g_max) {
    std::vector<EulerSolutionB> out;
    u128 av128 = value(a);
    u128 b128 = sigma(a);
    if (2 * av128 <= b128) return out;
    u64 av = to_u64(av128), b = to_u64(b128);
    u128 c = 2 * u128(av) - b;
    u64 step = av / std::gcd(av, b);  // smallest g stride with a | b*g

    for (u64 g = step; g <= g_max; g += step) {
        u128 target = checked_mul(u128(g), c) / av;
        if (target < 2) continue;
        u64 want = to_u64(target - 2);  // required u + v

        auto sp = prime_splittings(g, av128);
        if (sp.size() < 2) continue;
        for (size_t i = 0; i + 1 < sp.size(); ++i) {
            for (size_t j = i + 1; j < sp.size(); ++j) {
                if (sp[i].sum + sp[j].sum != want) continue;
                const auto &lo = sp[i], &hi = sp[j];  // ascending min prime
                if (lo.p == hi.p || lo.p == hi.q || lo.q == hi.p || lo.q == hi.q)
                    continue;
                auto mf = a.factors;
                mf.push_back({lo.p, 1});
                mf.push_back({lo.q, 1});
                auto nf = a.factors;
                nf.push_back({hi.p, 1});
                nf.push_back({hi.q, 1});
                auto pair = make_amicable_pair(
                    FactoredNat::from_factors(mf), FactoredNat::from_factors(nf),
                    Provenance{Origin::euler_form_b, 0, format_factored(a)});
                if (!check_pair(pair).ok) continue;
                out.push_back(EulerSolutionB{a, b128, g, lo.p, lo.q, hi.p, hi.q,
                                             lo.sum, hi.sum, std::move(pair)});
            }
        }
    }
    return out;
}

// Splits a table pair into common part and per-member free primes. The free
// parts qualify only if squarefree and disjoint from the common part.
static bool free_primes(const FactoredNat& member, const FactoredNat& common,
                        std::vector<u64>& out) {
    out.clear();
    size_t ci = 0;
    for (const auto& pp : member.factors) {
        while (ci < common.factors.size() && common.factors[ci].prime < pp.prime) ++ci;
        u32 shared = (ci < common.factors.size() && common.factors[ci].prime == pp.prime)
                         ? common.factors[ci].exponent
                         : 0;
        if (shared == pp.exponent) continue;
        if (shared != 0 || pp.exponent != 1) return false;
        out.push_back(pp.prime);
    }
    return true;
}

static FactoredNat common_part(const FactoredNat& a, const FactoredNat& b) {
    std::vector<PrimePower> fs;
    size_t j = 0;
    for (const auto& pp : a.factors) {
        while (j < b.factors.size() && b.factors[j].prime < pp.prime) ++j;
        if (j < b.factors.size() && b.factors[j].prime == pp.prime)
            fs.push_back({pp.prime, std::min(pp.exponent, b.factors[j].exponent)});
    }
    return FactoredNat::from_factors(std::move(fs));
}

std::map<int, Coverage> coverage_report(const std::vector<TableEntry>& table) {
    std::map<int, Coverage> report;
    for (const auto& e : table) {
        Coverage cov = Coverage::not_generated;
        if (check_pair(e.pair).ok) {
            FactoredNat a = common_part(e.pair.first, e.pair.second);
            std::vector<u64> fm, fn;
            if (free_primes(e.pair.first, a, fm) && free_primes(e.pair.second, a, fn)) {
                if (fm.size() == 2 && fn.size() == 1) {
                    for (const auto& sol : search_form_a(a))
                        if (sol.p == fm[0] && sol.q == fm[1] && sol.r == fn[0])
                            cov = Coverage::form_a;
                } else if (fm.size() == 2 && fn.size() == 2) {
                    u64 g = (fm[0] + 1) * (fm[1] + 1);
                    if (g == (fn[0] + 1) * (fn[1] + 1)) {
                        for (const auto& sol : search_form_b(a, g)) {
                            bool direct = sol.p == fm[0] && sol.q == fm[1] &&
                                          sol.r == fn[0] && sol.s == fn[1];
                            bool swapped = sol.p == fn[0] && sol.q == fn[1] &&
                                           sol.r == fm[0] && sol.s == fm[1];
                            if (direct || swapped) cov = Coverage::form_b;
                        }
                    }
                }
            }
        }
        report[e.index] = cov;
    }
    return report;
}

}  // namespace amicable
