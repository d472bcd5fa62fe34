#include "amicable/verify.hpp"

#include <sstream>

namespace amicable {

AmicablePair make_amicable_pair(FactoredNat a, FactoredNat b, Provenance prov) {
    u128 va = value(a), vb = value(b);
    if (va == vb)
        throw std::invalid_argument("pair members coincide: " + dec_string(va));
    if (va > vb) std::swap(a, b);
    return AmicablePair{std::move(a), std::move(b), std::move(prov)};
}

bool is_amicable(u64 m, u64 n) {
    if (m == n) return false;
    return aliquot_sum(m) == n && aliquot_sum(n) == m;
}

VerificationReport check_pair(const AmicablePair& p) {
    VerificationReport r;
    r.pair = p;
    r.sigma_first = sigma(p.first);
    r.sigma_second = sigma(p.second);
    r.expected_sum = checked_add(value(p.first), value(p.second));
    r.ok = r.sigma_first == r.expected_sum && r.sigma_second == r.expected_sum;
    if (!r.ok) {
        std::ostringstream os;
        if (r.sigma_first != r.expected_sum)
            os << "sigma(m) = " << dec_string(r.sigma_first)
               << " != " << dec_string(r.expected_sum) << " = m + n";
        if (r.sigma_second != r.expected_sum) {
            if (!os.str().empty()) os << "; ";
            os << "sigma(n) = " << dec_string(r.sigma_second)
               << " != " << dec_string(r.expected_sum) << " = m + n";
        }
        r.defect = os.str();
    }
    return r;
}

// Print-order transcription: positions 1..30. Factor order follows the
// printing; the parser canonicalizes. Position 13 is the defective entry.
// Position 28 is printed with a repeated label XVIII where XXVIII is meant.
static const char* kTableText =
    "1|2^2*5*11|2^2*71\n"
    "2|2^4*23*47|2^4*1151\n"
    "3|2^7*191*383|2^7*73727\n"
    "4|2^2*23*5*137|2^2*23*827\n"
    "5|3^2*5*13*11*19|3^2*5*13*239\n"
    "6|3^2*7*13*5*17|3^2*7*13*107\n"
    "7|3^2*7^2*13*5*41|3^2*7^2*13*251\n"
    "8|2^2*5*131|2^2*17*43\n"
    "9|2^2*5*251|2^2*13*107\n"
    "10|2^3*17*79|2^3*23*59\n"
    "11|2^4*23*1367|2^4*53*607\n"
    "12|2^4*17*10303|2^4*167*1103\n"
    "13|2^4*19*8563|2^4*83*2039\n"
    "14|2^4*17*5119|2^4*239*383\n"
    "15|2^5*59*1103|2^5*79*827\n"
    "16|2^5*37*12671|2^5*227*2111\n"
    "17|2^5*53*10559|2^5*79*7127\n"
    "18|2^6*79*11087|2^6*383*2309\n"
    "19|2^2*11*17*263|2^2*11*43*107\n"
    "20|3^3*5*7*71|3^3*5*17*31\n"
    "21|3^2*5*13*29*79|3^2*5*13*11*199\n"
    "22|3^2*5*13*19*47|3^2*5*13*29*31\n"
    "23|3^2*5*13*19*37*1583|3^2*5*13*19*227*263\n"
    "24|3^2*5*31*89|3^2*5*7*11*29\n"
    "25|2*5*7*60659|2*5*23*29*673\n"
    "26|2^3*31*11807|2^3*11*163*191\n"
    "27|3^2*7*13*23*79*1103|3^2*7*13*23*11*19*367\n"
    "28|2^3*47*2609|2^3*11*59*173\n"
    "29|3^3*5*23*79*1103|3^3*5*23*11*19*367\n"
    "30|3^2*5^2*11*59*179|3^2*5^2*17*19*359\n";

static const char* kLabels[30] = {
    "I",    "II",    "III",  "IV",  "V",    "VI",    "VII",   "VIII", "IX",  "X",
    "XI",   "XII",   "XIII", "XIV", "XV",   "XVI",   "XVII",  "XVIII", "XIX", "XX",
    "XXI",  "XXII",  "XXIII", "XXIV", "XXV", "XXVI", "XXVII", "XVIII", "XXIX", "XXX"};

static std::vector<TableEntry> load_table() {
    std::vector<TableEntry> out;
    std::istringstream in(kTableText);
    std::string line;
    while (std::getline(in, line)) {
        size_t p1 = line.find('|');
        size_t p2 = line.find('|', p1 + 1);
        int idx = std::stoi(line.substr(0, p1));
        FactoredNat m = parse_factored(line.substr(p1 + 1, p2 - p1 - 1));
        FactoredNat n = parse_factored(line.substr(p2 + 1));
        Provenance prov{Origin::table, u64(idx), {}};
        out.push_back(TableEntry{idx, kLabels[idx - 1], idx == 28,
                                 make_amicable_pair(std::move(m), std::move(n), prov)});
    }
    return out;
}

const std::vector<TableEntry>& euler_table() {
    static const std::vector<TableEntry> table = load_table();
    return table;
}

std::vector<VerificationReport> verify_table() {
    std::vector<VerificationReport> reports;
    reports.reserve(30);
    for (const auto& e : euler_table()) reports.push_back(check_pair(e.pair));
    return reports;
}

}  // namespace amicable
