#pragma once

// Amicability decisions, pair audits with full diagnostics, and Euler's
// 30-entry table replay.

#include "amicable/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amicable {

enum class Origin { table, thabit, euler_form_a, euler_form_b, sieve, user };

struct Provenance {
    Origin origin = Origin::user;
    u64 param = 0;             // table index or thabit exponent n
    std::string common_part;   // factored text of a, for the search forms
};

// Ordered candidate pair, canonicalized so value(first) < value(second).
struct AmicablePair {
    FactoredNat first;
    FactoredNat second;
    Provenance prov;
};

// Throws std::invalid_argument when both members expand to the same value.
AmicablePair make_amicable_pair(FactoredNat a, FactoredNat b, Provenance prov = {});

struct VerificationReport {
    AmicablePair pair;
    u128 sigma_first = 0;
    u128 sigma_second = 0;
    u128 expected_sum = 0;
    bool ok = false;
    std::string defect;  // names the failing equality, empty when ok
};

// m, n >= 2. True iff m != n and each is the other's aliquot sum.
bool is_amicable(u64 m, u64 n);

VerificationReport check_pair(const AmicablePair& p);

struct TableEntry {
    int index;               // print-order position 1..30
    std::string label;       // roman numeral as printed
    bool misprinted_label;   // position 28 repeats the label XVIII
    AmicablePair pair;
};

// The embedded table, parsed once. Entry 13 is defective and kept verbatim.
const std::vector<TableEntry>& euler_table();

// 30 reports in print order: 29 valid, entry 13 flagged.
std::vector<VerificationReport> verify_table();

}  // namespace amicable
