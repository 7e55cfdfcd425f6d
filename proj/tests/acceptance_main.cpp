// Acceptance suite: exercises the full laboratory end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.
//
//   1  enumeration totals match the product formula for n = 1..6
//      (n = 7 only when RSLAB_ACCEPT_N7 is set)
//   2  ground state equals the configuration counts exactly, n <= 5
//   3  harmonic identity for every k, n <= 5
//   4  set equinumeracy |A_k| = |B_k| for every k, n <= 4, with
//      |A_k| = 2n A(pi_k) checked structurally
//   5  Temperley-Lieb relations as exact matrix identities, n <= 5
//   6  toggle closure and involution over every cycle (cap 10^4/FPL), n <= 4
//   7  gyration rotates every link pattern by the fixed direction, n <= 4
//   8  both strategies count every FPL exactly 2n times at n = 2, 3; at
//      n = 5 both report ambiguities and the search maps to the
//      expected-negative exit status
//   9  every JSON report above is byte-identical when recomputed

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rslab/altpath.hpp"
#include "rslab/json_io.hpp"
#include "rslab/spectral.hpp"

using namespace rslab;

namespace {

int failures = 0;
std::vector<std::string> report_dumps_first, report_dumps_second;
bool second_pass = false;

void record_report(const Json& j) {
    (second_pass ? report_dumps_second : report_dumps_first).push_back(j.dump());
}

void criterion(int number, const std::string& text, bool pass, double seconds) {
    std::ostringstream line;
    line << "criterion " << number << " " << (pass ? "PASS" : "FAIL") << " [" << seconds
         << "s]: " << text;
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

bool run_criterion_1() {
    const long long expected[] = {0, 1, 2, 7, 42, 429, 7436};
    bool pass = true;
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        for_each_asm(n, [&](const Asm&) { ++count; });
        pass = pass && count == expected[n] && asm_count_formula(n) == count;
    }
    if (std::getenv("RSLAB_ACCEPT_N7") != nullptr) {
        long long count = 0;
        for_each_asm(7, [&](const Asm&) { ++count; });
        pass = pass && count == 218348 && asm_count_formula(7) == count;
    }
    return pass;
}

bool run_criterion_2() {
    bool pass = true;
    for (int n = 1; n <= 5; ++n) {
        const RsRecord rec = verify_rs(n);
        pass = pass && rec.pass;
        if (n == 2)
            pass = pass && rec.entries.size() == 2 && rec.entries[0].psi == 1 &&
                   rec.entries[0].fpl_count == 1 && rec.entries[1].psi == 1 &&
                   rec.entries[1].fpl_count == 1;
        record_report(to_json(rec));
    }
    return pass;
}

bool run_criterion_3() {
    bool pass = true;
    for (int n = 1; n <= 5; ++n) {
        const HarmonicReport rep = verify_harmonic(n);
        pass = pass && rep.pass;
        if (n == 2)
            pass = pass && rep.entries.size() == 2 && rep.entries[0].lhs == 4 &&
                   rep.entries[0].rhs == 4;
        record_report(to_json(rep));
    }
    return pass;
}

bool run_criterion_4() {
    bool pass = true;
    for (int n = 1; n <= 4; ++n) {
        const auto recs = verify_set_equinumeracy_all(n);
        const auto counts = count_by_pattern(n);
        for (const auto& rec : recs) {
            pass = pass && rec.pass;
            pass = pass && rec.size_a == 2LL * n * counts.counts[rec.k - 1];
        }
        record_report(to_json(recs));
    }
    return pass;
}

bool run_criterion_5() {
    bool pass = true;
    for (int n = 1; n <= 5; ++n) {
        const RelationReport rep = check_tl_relations(n);
        pass = pass && rep.all_pass();
        record_report(to_json(rep));
    }
    return pass;
}

bool run_criterion_6() {
    bool pass = true;
    for (int n = 2; n <= 4; ++n) {
        std::set<std::string> keys;
        const auto fpls = enumerate_fpls(n);
        for (const auto& f : fpls) keys.insert(f.key());
        for (const auto& f : fpls) {
            const auto res = find_alternating_cycles(f, std::nullopt, 10000);
            for (const auto& cyc : res.cycles) {
                try {
                    const Fpl g = toggle(f, cyc);
                    if (keys.count(g.key()) != 1) pass = false;
                    if (!(toggle(g, AlternatingCycle{g, cyc.edges, cyc.mask}) == f)) pass = false;
                } catch (const std::exception&) {
                    pass = false;
                }
            }
        }
    }
    return pass;
}

bool run_criterion_7() {
    bool pass = true;
    for (int n = 1; n <= 4; ++n) {
        const GyrationRecord rec = verify_gyration(n);
        pass = pass && rec.pass && rec.checked == asm_count_formula(n);
        record_report(to_json(rec));
    }
    return pass;
}

bool run_criterion_8() {
    bool pass = true;
    for (const std::string name : {"first-path", "shortest"}) {
        const StrategyId id = parse_strategy(name);
        for (int n = 2; n <= 3; ++n) {
            const auto rep = run_search(n, id);
            pass = pass && rep.histogram.pass_2n && rep.histogram.ambiguous.empty() &&
                   rep.histogram.not_found.empty();
            Json j = to_json(rep.histogram);
            j["audit"] = to_json(rep.audit);
            record_report(j);
        }
        const auto rep5 = run_search(5, id);
        const bool ambiguities = !rep5.histogram.ambiguous.empty();
        // the search command maps this outcome to the expected-negative exit
        const int exit_code = (rep5.histogram.pass_2n && rep5.histogram.ambiguous.empty() &&
                               rep5.histogram.not_found.empty())
                                  ? 0
                                  : 2;
        pass = pass && ambiguities && exit_code == 2;
        Json j = to_json(rep5.histogram);
        j["audit"] = to_json(rep5.audit);
        record_report(j);
    }
    return pass;
}

} // namespace

int main() {
    {
        Timer t;
        const bool pass = run_criterion_1();
        criterion(1, "enumeration totals equal the product formula, n <= 6", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_2();
        criterion(2, "ground state equals configuration counts, n <= 5", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_3();
        criterion(3, "harmonic identity for every k, n <= 5", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_4();
        criterion(4, "set equinumeracy for every k, n <= 4", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_5();
        criterion(5, "Temperley-Lieb relations, n <= 5", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_6();
        criterion(6, "toggle closure and involution, n <= 4", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_7();
        criterion(7, "gyration rotation property, n <= 4", pass, t.seconds());
    }
    {
        Timer t;
        const bool pass = run_criterion_8();
        criterion(8, "strategy counting at n = 2,3; ambiguities at n = 5", pass, t.seconds());
    }
    {
        Timer t;
        second_pass = true;
        bool pass = run_criterion_2() && run_criterion_3() && run_criterion_4() &&
                    run_criterion_5() && run_criterion_7() && run_criterion_8();
        pass = pass && report_dumps_first == report_dumps_second;
        criterion(9, "repeated runs byte-reproduce every JSON report", pass, t.seconds());
    }
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return 1;
}
