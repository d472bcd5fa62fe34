// Command-line front door: check, verify-table, thabit, search, sieve.
// Exit codes: 0 success / expected outcome, 1 semantic negative, 2 usage error.

#include "amicable/arith.hpp"
#include "amicable/euler_search.hpp"
#include "amicable/sieve.hpp"
#include "amicable/thabit.hpp"
#include "amicable/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using json = nlohmann::json;
using namespace amicable;

namespace {

// Numeric arguments accept plain decimal or factored-form text.
u64 parse_natural(const std::string& s) {
    if (s.find('^') != std::string::npos || s.find('*') != std::string::npos ||
        s.find("\xC2\xB7") != std::string::npos)
        return to_u64(value(parse_factored(s)));
    return to_u64(parse_decimal(s));
}

bool jsonl_mode(const std::string& mode) {
    if (mode == "jsonl") return true;
    if (mode == "text") return false;
    throw CLI::ValidationError("--mode must be text or jsonl");
}

json report_json(const VerificationReport& r, int index = -1) {
    json j;
    if (index >= 0) j["index"] = index;
    j["m"] = to_u64(value(r.pair.first));
    j["n"] = to_u64(value(r.pair.second));
    j["sigma_m"] = to_u64(r.sigma_first);
    j["sigma_n"] = to_u64(r.sigma_second);
    j["expected"] = to_u64(r.expected_sum);
    j["ok"] = r.ok;
    j["defect"] = r.defect;
    return j;
}

void print_report_text(const VerificationReport& r, const std::string& head) {
    std::cout << head << format_factored(r.pair.first) << " / "
              << format_factored(r.pair.second) << "  (" << dec_string(value(r.pair.first))
              << ", " << dec_string(value(r.pair.second)) << ")  sigma "
              << dec_string(r.sigma_first) << " | " << dec_string(r.sigma_second)
              << "  expected " << dec_string(r.expected_sum) << "  "
              << (r.ok ? "PASS" : "FAIL");
    if (!r.defect.empty()) std::cout << "  [" << r.defect << "]";
    std::cout << "\n";
}

int cmd_check(u64 m, u64 n, bool jsonl) {
    if (m < 2 || n < 2) throw CLI::ValidationError("check requires m, n >= 2");
    auto rep = (m == n)
                   ? VerificationReport{AmicablePair{factorize(m), factorize(n), {}},
                                        sigma(factorize(m)), sigma(factorize(n)),
                                        checked_add(m, n), false,
                                        "members coincide: m = n"}
                   : check_pair(make_amicable_pair(factorize(m), factorize(n)));
    if (jsonl)
        std::cout << report_json(rep).dump() << "\n";
    else
        print_report_text(rep, "");
    return rep.ok ? 0 : 1;
}

int cmd_verify_table(bool jsonl) {
    auto reports = verify_table();
    int fails = 0, fail_index = 0;
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        int index = int(i) + 1;
        if (!r.ok) { ++fails; fail_index = index; }
        if (jsonl) {
            std::cout << report_json(r, index).dump() << "\n";
        } else {
            const auto& e = euler_table()[i];
            std::string head = std::to_string(index) + " (" + e.label +
                               (e.misprinted_label ? ", misprinted label" : "") + "): ";
            print_report_text(r, head);
        }
    }
    bool expected_split = fails == 1 && fail_index == 13;
    if (!jsonl)
        std::cout << (reports.size() - fails) << " valid, " << fails << " invalid\n";
    return expected_split ? 0 : 1;
}

int cmd_thabit(u32 n_max, bool jsonl) {
    if (n_max < 1) throw CLI::ValidationError("thabit requires n_max >= 1");
    for (u32 n = 1; n <= n_max; ++n) {
        for (const auto& c : solve_rule(n)) {
            if (jsonl) {
                json j{{"record", "candidate"}, {"n", c.n},     {"i", c.splitting_index},
                       {"x", c.x},             {"y", c.y},      {"z", to_u64(c.z)},
                       {"z_prime", c.z_prime}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "n=" << c.n << " i=" << c.splitting_index << " x=" << c.x
                          << " y=" << c.y << " z=" << dec_string(c.z)
                          << (c.z_prime ? " z prime" : " z composite") << "\n";
            }
        }
    }
    auto pairs = rule_pairs(n_max);
    for (const auto& p : pairs) {
        if (jsonl) {
            json j{{"record", "pair"},
                   {"n", p.prov.param},
                   {"m", to_u64(value(p.first))},
                   {"n_value", to_u64(value(p.second))},
                   {"m_factored", format_factored(p.first)},
                   {"n_factored", format_factored(p.second)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "pair n=" << p.prov.param << ": " << format_factored(p.first)
                      << " / " << format_factored(p.second) << "  ("
                      << dec_string(value(p.first)) << ", " << dec_string(value(p.second))
                      << ")\n";
        }
    }
    if (!jsonl) std::cout << pairs.size() << " pairs\n";
    return 0;
}

void print_induced(const AmicablePair& p) {
    std::cout << "pair " << format_factored(p.first) << " / " << format_factored(p.second)
              << "  (" << dec_string(value(p.first)) << ", " << dec_string(value(p.second))
              << ")\n";
}

int cmd_search(const std::string& form, const std::string& a_text, u64 g_max, bool jsonl) {
    FactoredNat a = parse_factored(a_text);
    if (form == "a") {
        for (const auto& sol : search_form_a(a)) {
            if (jsonl) {
                json j{{"form", "a"},
                       {"a", format_factored(sol.a)},
                       {"p", sol.p},
                       {"q", sol.q},
                       {"r", sol.r},
                       {"m", to_u64(value(sol.pair.first))},
                       {"n", to_u64(value(sol.pair.second))}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "a=" << format_factored(sol.a) << " p=" << sol.p
                          << " q=" << sol.q << " r=" << sol.r << "  ";
                print_induced(sol.pair);
            }
        }
        return 0;
    }
    if (form == "b") {
        if (g_max == 0) throw CLI::ValidationError("form b requires --g-max");
        for (const auto& sol : search_form_b(a, g_max)) {
            if (jsonl) {
                json j{{"form", "b"},
                       {"a", format_factored(sol.a)},
                       {"g", sol.g},
                       {"p", sol.p},
                       {"q", sol.q},
                       {"r", sol.r},
                       {"s", sol.s},
                       {"m", to_u64(value(sol.pair.first))},
                       {"n", to_u64(value(sol.pair.second))}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "a=" << format_factored(sol.a) << " g=" << sol.g
                          << " p=" << sol.p << " q=" << sol.q << " r=" << sol.r
                          << " s=" << sol.s << "  ";
                print_induced(sol.pair);
            }
        }
        return 0;
    }
    throw CLI::ValidationError("form must be a or b");
}

int cmd_sieve(u64 bound, bool segmented, bool jsonl) {
    auto sieve = segmented ? build_sieve_segmented(bound) : build_sieve(bound);
    auto pairs = amicable_below(sieve);
    for (const auto& p : pairs) {
        u64 m = to_u64(value(p.first)), n = to_u64(value(p.second));
        if (jsonl) {
            json j{{"m", m}, {"n", n}, {"sigma", m + n}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << m << " " << n << " sigma=" << m + n << "\n";
        }
    }
    if (!jsonl) std::cout << pairs.size() << " pairs below " << bound << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amicable-number toolkit: audits Euler's table, generates pairs "
                 "by the classical rule and by sigma-equation searches, and "
                 "cross-checks against an exhaustive aliquot sieve"};
    app.require_subcommand(1);
    std::string mode = "text";
    app.add_option("--mode", mode, "Output mode: text or jsonl")->capture_default_str();

    std::string m_arg, n_arg;
    auto* check = app.add_subcommand("check", "Decide whether two numbers are amicable");
    check->add_option("m", m_arg, "First number (decimal or factored form)")->required();
    check->add_option("n", n_arg, "Second number")->required();

    app.add_subcommand("verify-table", "Recompute and audit the 30-entry table");

    auto* thabit = app.add_subcommand("thabit", "Solve the classical rule up to an exponent");
    u32 n_max = 0;
    thabit->add_option("n_max,--n-max", n_max, "Largest exponent")->required();

    auto* search = app.add_subcommand("search", "Sigma-equation search over a common part");
    std::string form, a_text;
    u64 g_max = 0;
    search->add_option("form", form, "a or b")->required();
    search->add_option("a", a_text, "Common part, factored form")->required();
    search->add_option("--g-max", g_max, "Largest shared (p+1)(q+1) value, form b");

    auto* sieve = app.add_subcommand("sieve", "Census of all pairs below a bound");
    u64 bound = kDefaultCensusBound;
    bool segmented = false;
    sieve->add_option("bound,--bound", bound, "Sieve bound")->capture_default_str();
    sieve->add_flag("--segmented", segmented, "Build the table in fixed-size windows");

    try {
        app.parse(argc, argv);
        bool jsonl = jsonl_mode(mode);
        if (check->parsed()) return cmd_check(parse_natural(m_arg), parse_natural(n_arg), jsonl);
        if (app.get_subcommand("verify-table")->parsed()) return cmd_verify_table(jsonl);
        if (thabit->parsed()) return cmd_thabit(n_max, jsonl);
        if (search->parsed()) return cmd_search(form, a_text, g_max, jsonl);
        if (sieve->parsed()) return cmd_sieve(bound, segmented, jsonl);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
