#pragma once

// Sigma-equation searches over pairs sharing a common part a with b = sigma(a):
// form A finds (a*p*q, a*r) with r = pq + p + q, form B finds (a*p*q, a*r*s)
// with (p+1)(q+1) = (r+1)(s+1). Both require a deficient (2a > b).

#include "amicable/arith.hpp"
#include "amicable/verify.hpp"

#include <map>
#include <vector>

namespace amicable {

struct EulerSolutionA {
    FactoredNat a;
    u128 b;       // sigma(a)
    u64 p, q, r;  // p < q, r = pq + p + q
    AmicablePair pair;
};

struct EulerSolutionB {
    FactoredNat a;
    u128 b;
    u64 g;          // shared value (p+1)(q+1) = (r+1)(s+1)
    u64 p, q, r, s; // p < q, r < s, min(p,q) < min(r,s)
    u64 u, v;       // p + q and r + s
    AmicablePair pair;
};

// Enumerates divisor splittings d1*d2 = a^2 under the identity
// ((2a-b)p + (a-b))((2a-b)q + (a-b)) = a^2, keeping integral prime solutions
// coprime to a with r prime. Empty when a is not deficient.
std::vector<EulerSolutionA> search_form_a(const FactoredNat& a);

// Walks g <= g_max with a | b*g, target sum u + v = g(2a-b)/a - 2, and pairs
// up distinct prime splittings of g. Empty when a is not deficient.
std::vector<EulerSolutionB> search_form_b(const FactoredNat& a, u64 g_max);

enum class Coverage { form_a, form_b, not_generated };

// For each table entry: does the matching search over the entry's own common
// part regenerate it?
std::map<int, Coverage> coverage_report(const std::vector<TableEntry>& table);

}  // namespace amicable
