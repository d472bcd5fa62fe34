#include "amicable/arith.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace amicable {

u128 checked_pow(u64 base, u32 exp) {
    u128 r = 1;
    for (u32 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::string dec_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("not a decimal number: " + std::string(s));
        v = checked_add(checked_mul(v, 10), u128(c - '0'));
    }
    return v;
}

static u64 mulmod(u64 a, u64 b, u64 m) {
    return u64((u128(a) * b) % m);
}

static u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Witness set covering all n < 2^64 (Sorenson & Webster).
static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : kWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_exact(u128 n) {
    if (n <= UINT64_MAX) return is_prime(u64(n));
    if (n % 2 == 0) return false;
    for (u64 d = 3; d <= 1000000; d += 2)
        if (n % d == 0) return false;
    throw std::domain_error(
        "primality undecidable: " + dec_string(n) +
        " exceeds the 64-bit deterministic witness range and has no factor <= 10^6");
}

FactoredNat FactoredNat::from_factors(std::vector<PrimePower> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    FactoredNat f;
    for (const auto& pp : fs) {
        if (pp.exponent == 0) throw std::invalid_argument("exponent must be >= 1");
        if (!is_prime(pp.prime))
            throw std::invalid_argument(std::to_string(pp.prime) + " is not prime");
        if (!f.factors.empty() && f.factors.back().prime == pp.prime)
            f.factors.back().exponent += pp.exponent;
        else
            f.factors.push_back(pp);
    }
    return f;
}

u128 value(const FactoredNat& f) {
    u128 v = 1;
    for (const auto& pp : f.factors) v = checked_mul(v, checked_pow(pp.prime, pp.exponent));
    return v;
}

u128 sigma(const FactoredNat& f) {
    u128 s = 1;
    for (const auto& pp : f.factors) {
        // (p^(e+1) - 1) / (p - 1), computed as a running geometric sum
        u128 term = 1, pk = 1;
        for (u32 i = 0; i < pp.exponent; ++i) {
            pk = checked_mul(pk, pp.prime);
            term = checked_add(term, pk);
        }
        s = checked_mul(s, term);
    }
    return s;
}

static u64 pollard_brent(u64 n, u64 c) {
    // Brent's cycle variant of rho with f(x) = x^2 + c.
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 0;
    while (d == 1) {
        if (lam == power) { x = y; power <<= 1; lam = 0; }
        y = u64((u128(y) * y + c) % n);
        ++lam;
        u64 diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;  // cycle without factor; caller bumps c
        d = std::gcd(diff, n);
    }
    return d == n ? 0 : d;
}

static void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = 0;
    for (u64 c = 1; d == 0; ++c) d = pollard_brent(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

FactoredNat factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize(0) is undefined");
    FactoredNat f;
    auto push = [&f](u64 p, u32 e) { f.factors.push_back({p, e}); };
    for (u64 p : {u64(2), u64(3), u64(5)}) {
        u32 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) push(p, e);
    }
    // wheel over 6k +- 1 up to the trial bound
    for (u64 p = 7; p <= 10000 && p * p <= n; p += (p % 6 == 1) ? 4 : 2) {
        u32 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) push(p, e);
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            push(rest[i], u32(j - i));
            i = j;
        }
    }
    return f;
}

u128 aliquot_sum(u64 n) {
    if (n == 0) throw std::domain_error("aliquot_sum(0) is undefined");
    return sigma(factorize(n)) - n;
}

std::vector<u128> divisors(const FactoredNat& f, u64 cap) {
    u64 count = 1;
    for (const auto& pp : f.factors) {
        if (__builtin_mul_overflow(count, u64(pp.exponent) + 1, &count) || count > cap)
            throw std::length_error("divisor count exceeds cap");
    }
    std::vector<u128> ds{1};
    ds.reserve(count);
    for (const auto& pp : f.factors) {
        size_t old = ds.size();
        u128 pk = 1;
        for (u32 e = 1; e <= pp.exponent; ++e) {
            pk = checked_mul(pk, pp.prime);
            for (size_t i = 0; i < old; ++i) ds.push_back(checked_mul(ds[i], pk));
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

FactoredNat parse_factored(std::string_view text) {
    // Separators: '*' or the UTF-8 middle dot.
    std::string cleaned;
    for (size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (std::isspace(c)) { ++i; continue; }
        if (c == 0xC2 && i + 1 < text.size() && (unsigned char)text[i + 1] == 0xB7) {
            cleaned.push_back('*');
            i += 2;
            continue;
        }
        cleaned.push_back(char(c));
        ++i;
    }
    if (cleaned == "1") return FactoredNat::one();
    if (cleaned.empty()) throw std::invalid_argument("empty factored form");

    std::vector<PrimePower> fs;
    size_t pos = 0;
    while (pos <= cleaned.size()) {
        size_t star = cleaned.find('*', pos);
        std::string tok = cleaned.substr(pos, star == std::string::npos ? star : star - pos);
        size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        u64 p = to_u64(parse_decimal(base));
        u32 e = 1;
        if (caret != std::string::npos) {
            u64 e64 = to_u64(parse_decimal(tok.substr(caret + 1)));
            if (e64 == 0 || e64 > UINT32_MAX)
                throw std::invalid_argument("bad exponent in " + tok);
            e = u32(e64);
        }
        fs.push_back({p, e});
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return FactoredNat::from_factors(std::move(fs));
}

std::string format_factored(const FactoredNat& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& pp : f.factors) {
        if (!s.empty()) s.push_back('*');
        s += std::to_string(pp.prime);
        if (pp.exponent > 1) {
            s.push_back('^');
            s += std::to_string(pp.exponent);
        }
    }
    return s;
}

}  // namespace amicable
