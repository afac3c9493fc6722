// Acceptance suite: runs every primary criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include "burgess/applications.hpp"
#include "burgess/burgess.hpp"
#include "burgess/constants.hpp"
#include "burgess/tables.hpp"
#include "burgess/verify.hpp"

using namespace burgess;

namespace {

int g_failures = 0;

void line(const char* name, bool pass, const std::string& detail) {
    printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name, detail.empty() ? "" : " -- ",
           detail.c_str());
    fflush(stdout);
    if (!pass) ++g_failures;
}

struct CellCheck {
    int total = 0;
    int matched = 0;
    int anomalies = 0;          // flagged cells (reported, never gating)
    int anomaly_matched = 0;
    std::vector<std::string> mismatches;

    void add(const std::string& label, const Real& rounded, const tables::Cell& cell) {
        ++total;
        Real paper = Real::parse(cell.value);
        bool ok = abs(rounded - paper) <= Real::parse("0.00010000000001");
        bool anomaly = cell.tag == tables::CellTag::KnownAnomaly;
        if (anomaly) {
            ++anomalies;
            if (ok) ++anomaly_matched;
            return;
        }
        if (ok) {
            ++matched;
        } else {
            char* s = nullptr;
            mpfr_asprintf(&s, "%.4Rf", rounded.raw());
            mismatches.push_back(label + " engine=" + s + " paper=" + cell.value);
            mpfr_free_str(s);
        }
    }
    bool gate() const { return matched + anomalies == total; }
    std::string summary(const char* what) const {
        char buf[256];
        snprintf(buf, sizeof buf,
                 "%s: %d/%d plain cells within one unit in the 4th decimal, %d flagged anomaly "
                 "cells reported (%d of those still match)",
                 what, matched, total - anomalies, anomalies, anomaly_matched);
        return buf;
    }
};

int p0_index_of(int e) {
    for (int i = 0; i < tables::kNumP0; ++i)
        if (tables::kP0Exponents[i] == e) return i;
    return -1;
}

struct Columns {
    std::vector<std::pair<int, core::ChainResult>> by_p0;
};

Columns run_all_columns(int grid) {
    std::vector<std::future<std::pair<int, core::ChainResult>>> futs;
    for (int e : tables::kP0Exponents)
        futs.push_back(std::async(std::launch::async, [e, grid] {
            return std::make_pair(e, core::run_chain(Real::parse("1e" + std::to_string(e)), 10,
                                                     grid));
        }));
    Columns out;
    for (auto& f : futs) out.by_p0.push_back(f.get());
    return out;
}

void criterion_tables_357(const Columns& cols, const core::ChainResult& t7chain) {
    CellCheck t3, t5;
    for (const auto& [e, chain] : cols.by_p0) {
        int idx = p0_index_of(e);
        t3.add("C(2;1e" + std::to_string(e) + ")", chain.C2_published.rounded,
               tables::table3_cell(2, idx));
        for (const auto& res : chain.higher)
            t3.add("C(" + std::to_string(res.r) + ";1e" + std::to_string(e) + ")", res.rounded,
                   tables::table3_cell(static_cast<int>(res.r), idx));
        t5.add("c2even(1e" + std::to_string(e) + ")", chain.c2_even.rounded,
               tables::table5_cell(true, idx));
        t5.add("c2odd(1e" + std::to_string(e) + ")", chain.c2_odd.rounded,
               tables::table5_cell(false, idx));
    }
    // grid monotonicity of the engine's own values: non-increasing in p0 for
    // fixed r, and in r (r >= 3) for fixed p0
    bool monotone = true;
    for (long r = 2; r <= 10; ++r) {
        const Real* prev = nullptr;
        for (const auto& [e, chain] : cols.by_p0) {
            const Real* cur = nullptr;
            if (r == 2) cur = &chain.C2_published.value;
            else cur = &chain.higher[static_cast<size_t>(r - 3)].value;
            if (prev && *cur > *prev) monotone = false;
            prev = cur;
        }
    }
    for (const auto& [e, chain] : cols.by_p0)
        for (size_t i = 1; i < chain.higher.size(); ++i)
            if (chain.higher[i].value > chain.higher[i - 1].value) monotone = false;
    line("table-3-reproduction", t3.gate(),
         t3.summary("T3") + (monotone ? "; engine grid monotone in p0 and r"
                                      : "; MONOTONICITY VIOLATION in engine grid"));
    for (const auto& m : t3.mismatches) printf("        %s\n", m.c_str());
    line("table-5-reproduction", t5.gate(), t5.summary("T5"));
    for (const auto& m : t5.mismatches) printf("        %s\n", m.c_str());

    CellCheck t7;
    t7.add("C(2;1e3500)", t7chain.C2_published.rounded, tables::table7_cell(2));
    for (const auto& res : t7chain.higher)
        t7.add("C(" + std::to_string(res.r) + ";1e3500)", res.rounded,
               tables::table7_cell(static_cast<int>(res.r)));
    // the r=23 anchor, at the table tolerance
    bool anchor =
        abs(t7chain.higher[20].rounded - Real::parse("1.2367")) <= Real::parse("0.00010000000001");
    line("table-7-reproduction", t7.gate() && anchor, t7.summary("T7"));
    for (const auto& m : t7.mismatches) printf("        %s\n", m.c_str());
}

void criterion_section5_anchors(const core::ChainResult& c40) {
    const Real& C3 = c40.higher[0].value;
    const Real& C4 = c40.higher[1].value;
    Real d3 = apps::d2(3, C3);
    Real d4 = apps::d2(4, C4);
    bool c3ok = abs(C3 - Real::parse("2.1590344")) < Real::parse("5e-7");
    bool c4ok = abs(C4 - Real::parse("1.9146092")) < Real::parse("5e-7");
    bool d3ok = abs(ceil_decimals(d3, 4) - Real::parse("3.5239")) < Real::parse("1e-30");
    bool d4ok = abs(ceil_decimals(d4, 4) - Real::parse("3.1608")) < Real::parse("1e-30");
    std::string detail = "C(3;1e40)=" + C3.str(9) + " (published 2.1590344), C(4;1e40)=" +
                         C4.str(9) + " (published 1.9146092), D2(3)=" + d3.str(8) + "->" +
                         ceil_decimals(d3, 4).str(5) + ", D2(4)=" + d4.str(8) + "->" +
                         ceil_decimals(d4, 4).str(5);
    line("section-5-anchors", c3ok && c4ok && d3ok && d4ok, detail);
    if (!(c3ok && c4ok))
        printf("        published-table computational noise at the 1e-5 scale; see the engine "
               "notes in the repository README\n");
}

void criterion_table4(const core::ChainResult& c75, const core::ChainResult& t7chain) {
    struct Want {
        const char* alpha;
        long denom;
        long r;
        Real C;
        long Y;
        const char* delta;
    };
    std::vector<Want> wants = {{"1/4", 4, 4, c75.higher[1].value, 83, "0.060136"},
                               {"1/5", 5, 7, c75.higher[4].value, 334, "0.015691"},
                               {"1/6", 6, 23, t7chain.higher[20].value, 3872, "0.006802"}};
    bool all = true;
    std::string detail;
    for (const auto& w : wants) {
        auto cert = apps::nonresidue_threshold(div(Real(1), Real(w.denom)), w.r, w.C);
        bool okY = cert.Y == w.Y;
        bool okD = abs(cert.delta - Real::parse(w.delta)) < Real::parse("1.1e-6");
        bool okB = cert.lhs_at_prev >= cert.rhs_at_prev && cert.lhs_at_y < cert.rhs_at_y &&
                   cert.monotone_persistent;
        all = all && okY && okD && okB;
        detail += std::string(w.alpha) + "->Y=" + std::to_string(cert.Y) + " ";
    }
    line("table-4-reproduction", all, detail + "(bracketing certificates verified)");
}

void criterion_table6(const core::ChainResult& c40) {
    Real D2_3 = apps::d2(3, c40.higher[0].value);
    Real D2_4 = apps::d2(4, c40.higher[1].value);
    bool all = true;
    int exact = 0;
    std::string misses;
    for (const auto& row : tables::table6_rows()) {
        long r = apps::conductor_r_for_degree(row.l);
        auto cb = apps::conductor_bound(row.l, r == 4 ? D2_4 : D2_3, r);
        // within one unit in the second significant digit
        auto split = [](const std::string& sci, double& m, int& e) {
            auto pos = sci.find('e');
            m = std::stod(sci.substr(0, pos));
            e = std::stoi(sci.substr(pos + 1));
        };
        double got_m, paper_m;
        int got_e, paper_e;
        split(cb.scientific, got_m, got_e);
        split(row.bound, paper_m, paper_e);
        double scaled = got_m * std::pow(10.0, got_e - paper_e);
        bool ok = std::abs(scaled - paper_m) < 0.10001;
        if (cb.scientific == row.bound) ++exact;
        if (!ok) misses += " l=" + std::to_string(row.l) + ":" + cb.scientific + " vs " +
                           row.bound;
        all = all && ok;
    }
    char buf[128];
    snprintf(buf, sizeof buf, "24 degrees, %d byte-exact, all within one second-digit unit%s",
             exact, misses.c_str());
    line("table-6-reproduction", all, buf);
}

void criterion_pv(const core::ChainResult&) {
    bool limits =
        abs(floor_decimals(core::pv_alpha2(core::Parity::Even, Real::parse("1e30")), 4) -
            Real::parse("0.9466")) < Real::parse("1e-30") &&
        abs(floor_decimals(core::pv_alpha2(core::Parity::Odd, Real::parse("1e30")), 4) -
            Real::parse("0.8203")) < Real::parse("1e-30");
    bool threshold = core::pv_alpha2(core::Parity::Even, Real(854)) <= Real(1) &&
                     core::pv_alpha2(core::Parity::Even, Real(853)) > Real(1) &&
                     core::pv_alpha2(core::Parity::Odd, Real(854)) <= Real(1);
    auto suite = verify::pv_suite(1200, 3000);
    std::string detail = "alpha2 limits 0.9466/0.8203 at q0=1e30, threshold bracketed at 854; " +
                         suite.summary;
    line("polya-vinogradov-suite", limits && threshold && suite.ok(), detail);
    for (const auto& f : suite.failures)
        printf("        %s %s exact=%s bound=%s\n", f.operation.c_str(), f.inputs.c_str(),
               f.exact.c_str(), f.bound.c_str());
}

}  // namespace

int main() {
    set_working_precision_digits(50);

    // heavyweight engine runs, in parallel with the oracle suites
    auto fut_cols = std::async(std::launch::async, [] { return run_all_columns(2000); });
    auto fut_t7 = std::async(std::launch::async,
                             [] { return core::run_chain(Real::parse("1e3500"), 25, 2000); });
    auto fut_c40 = std::async(std::launch::async,
                              [] { return core::run_chain(Real::parse("1e40"), 4, 2000); });
    auto fut_c75 = std::async(std::launch::async,
                              [] { return core::run_chain(Real::parse("1e75"), 7, 2000); });
    auto fut_lemmas = std::async(std::launch::async, [] { return verify::lemma_suite(100000); });
    auto fut_pairs = std::async(std::launch::async, [] { return verify::pair_sum_suite(500); });
    auto fut_v2 = std::async(std::launch::async, [] { return verify::v2_suite(10000, 12345); });
    auto fut_weil = std::async(std::launch::async, [] { return verify::weil_suite(10000); });
    auto fut_struct =
        std::async(std::launch::async, [] { return verify::character_structure_suite(); });

    Columns cols = fut_cols.get();
    core::ChainResult t7chain = fut_t7.get();
    core::ChainResult c40 = fut_c40.get();
    core::ChainResult c75 = fut_c75.get();

    criterion_tables_357(cols, t7chain);
    criterion_section5_anchors(c40);
    criterion_table4(c75, t7chain);
    criterion_table6(c40);

    {
        auto s = fut_lemmas.get();
        line("lemma-oracle-suite", s.ok(), s.summary);
        for (const auto& f : s.failures)
            printf("        %s %s\n", f.operation.c_str(), f.inputs.c_str());
    }
    {
        auto s1 = fut_pairs.get();
        auto s2 = fut_v2.get();
        bool enough = s2.checks >= 200;
        line("v2-oracle-suite", s1.ok() && s2.ok() && enough,
             s1.summary + "; " + s2.summary + (enough ? "" : " (grid smaller than 200)"));
        for (const auto& f : s1.failures) printf("        %s %s\n", f.operation.c_str(), f.inputs.c_str());
        for (const auto& f : s2.failures) printf("        %s %s\n", f.operation.c_str(), f.inputs.c_str());
    }
    {
        auto s = fut_weil.get();
        auto st = fut_struct.get();
        line("weil-moment-suite", s.ok() && st.ok(), s.summary + "; " + st.summary);
        for (const auto& f : s.failures) printf("        %s %s\n", f.operation.c_str(), f.inputs.c_str());
    }
    {
        // Burgess empirical with the engine's own C(r;1e5)
        const core::ChainResult* chain5 = nullptr;
        for (const auto& [e, chain] : cols.by_p0)
            if (e == 5) chain5 = &chain;
        std::vector<Real> c_by_r = {chain5->C2_published.value, chain5->higher[0].value,
                                    chain5->higher[1].value};
        auto s = verify::burgess_empirical_suite({100003ull, 1000003ull}, c_by_r, 12345);
        line("burgess-empirical-suite", s.ok(), s.summary);
        for (const auto& f : s.failures)
            printf("        %s %s exact=%s bound=%s\n", f.operation.c_str(), f.inputs.c_str(),
                   f.exact.c_str(), f.bound.c_str());
    }
    criterion_pv(c40);

    printf("%d criterion failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
