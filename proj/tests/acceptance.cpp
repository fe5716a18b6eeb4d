// Acceptance gate: one check per numbered criterion, each with its stated
// runtime budget, printed as a pass/fail table. Exit code 0 iff all pass.

#include "quiverhom/worked_examples.hpp"

#include <chrono>
#include <iostream>

using namespace quiverhom;

namespace {

const FixtureSet FX{"fixtures"};
constexpr int CAP = 33;
int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds, double budget) {
    bool ok = pass && seconds < budget;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
              << " (" << seconds << " s, budget " << budget << " s)";
    if (!pass) std::cout << " -- check failed";
    if (seconds >= budget) std::cout << " -- over budget";
    std::cout << "\n";
    failures += !ok;
}

template <typename F>
void run(int criterion, const std::string& what, double budget, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = e.what();
        pass = false;
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!note.empty()) std::cout << "  exception: " << note << "\n";
    report(criterion, what, pass, s, budget);
}

AlgebraPtr zero_relation_an(int n) {
    std::vector<int> c(n, 2);
    c[n - 1] = 1;
    return BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Linear, c}, Field::rationals());
}

} // namespace

int main() {
    run(1, "Kupisch [3,3,3,4]: gldim 5 = domdim, pdim tau_5(DA) = 3, not QF-1", 1.0, [] {
        auto a = FX.load("kupisch-3334.alg");
        Qf1Verdict v = qf1_finite_test(a, CAP);
        return v.gldim.finite_eq(5) && v.domdim.finite_eq(5) &&
               v.condition1.pdim_tau_g_DA.finite_eq(3) && !v.is_qf1;
    });

    run(2, "Kupisch [2,3,3,3,3,2,2,1]: QF-1 via finite test and Morita, Ext^3(DA,A) != 0", 2.0, [] {
        auto a = FX.load("kupisch-23333221.alg");
        Qf1Verdict v = qf1_finite_test(a, CAP);
        if (!(v.gldim.finite_eq(4) && v.domdim.finite_eq(4) && v.is_qf1)) return false;
        IndecFamily fam = enumerate_nakayama_indecomposables(a);
        if (fam.modules.size() != 19) return false;
        MoritaReport m = morita_bruteforce(a, fam, CAP);
        if (!m.qf1 || !m.family_exhaustive) return false;
        return ext_dim(coregular(a), regular(a), 3) > 0;
    });

    run(3, "Kupisch [5,5,5,5,5,7,6]: g = 5; unique simple summands S(7) and S(1)", 5.0, [] {
        auto a = FX.load("kupisch-5555576.alg");
        HigherAuslanderInfo ha = is_higher_auslander(a, CAP);
        if (!ha.is_higher_auslander || ha.g != 5) return false;
        auto simple_summands = [&](const QuiverModule& m, int vertex) {
            int count = 0;
            bool right = true;
            for (const auto& p : decompose(m, 5))
                if (p.summand.total_dim() == 1) {
                    count += p.multiplicity;
                    right = right && is_isomorphic(p.summand, simple(a, vertex), 5);
                }
            return std::make_pair(count, right);
        };
        auto [tc, tok] = simple_summands(tau_n(coregular(a), 5), 6);
        auto [cc, cok] = simple_summands(costable_module(a, CAP), 0);
        return tc == 1 && tok && cc == 1 && cok;
    });

    run(4, "zero-relation A_n, n = 2..8: dimensions, QF-1, translate, Ext vanishing", 10.0, [] {
        for (int n = 2; n <= 8; ++n) {
            auto a = zero_relation_an(n);
            if (!gldim(a, CAP).finite_eq(n - 1)) return false;
            if (!algebra_domdim(a, CAP).finite_eq(n - 1)) return false;
            if (!qf1_finite_test(a, CAP).is_qf1) return false;
            if (!is_isomorphic(tau_n(coregular(a), n - 1), projective(a, n - 1), 5)) return false;
            QuiverModule m = direct_sum({regular(a), coregular(a)});
            for (int i = 1; i <= n - 2; ++i)
                if (ext_dim(m, m, i) != 0) return false;
        }
        return true;
    });

    run(5, "Gorenstein two-vertex example: the finiteness hypothesis is necessary", 1.0, [] {
        auto a = FX.load("gorenstein-domdim1.alg");
        if (!algebra_domdim(a, CAP).finite_eq(1)) return false;
        if (!is_isomorphic(costable_module(a, CAP), projective(a, 1), 5)) return false;
        QuiverModule s = socle(projective(a, 1)).module;
        if (!(pdim(s, CAP) == ExtendedNat::at_least(CAP))) return false;
        QuiverModule costable = costable_module(a, CAP);
        int sup = -1;
        for (int k = 0; k <= CAP; ++k)
            if (ext_dim(s, costable, k) > 0) sup = k;
        return sup == 0;
    });

    run(6, "GF(3) twelve-vertex algebra: gldim 3 = domdim, QF-1 with no witness", 60.0, [] {
        auto a = FX.load("gf3-12vertex.alg");
        Qf1Verdict v = qf1_finite_test(a, CAP);
        return v.gldim.finite_eq(3) && v.domdim.finite_eq(3) && v.is_qf1 &&
               !v.condition2.witness;
    });

    run(7, "small Auslander-algebra fixtures: the two QF-1 cases and the two failures", 10.0, [] {
        if (!qf1_finite_test(FX.load("auslander-a1.alg"), CAP).is_qf1) return false;
        Qf1Verdict a2 = qf1_finite_test(FX.load("auslander-a2.alg"), CAP);
        if (!a2.is_qf1 || !a2.gldim.finite_eq(2)) return false;
        Qf1Verdict c = qf1_finite_test(FX.load("auslander-a3-nonlinear.alg"), CAP);
        if (!c.is_qf1 || !c.gldim.finite_eq(2) || !c.domdim.finite_eq(2)) return false;
        if (qf1_finite_test(FX.load("auslander-a3-linear.alg"), CAP).is_qf1) return false;
        auto dual_numbers = FX.load("auslander-dualnumbers.alg");
        if (qf1_finite_test(dual_numbers, CAP).is_qf1) return false;
        MoritaReport m =
            morita_bruteforce(dual_numbers, enumerate_nakayama_indecomposables(dual_numbers), CAP);
        return !m.qf1 && m.witness.has_value();
    });

    run(8, "desk-scale conjecture scan (linear <= 10, cyclic <= 9, 8 workers)", 600.0, [] {
        ScanConfig lin;
        lin.kind = ScanConfig::Kind::Linear;
        lin.max_simples = 10;
        lin.parity = ScanConfig::Parity::EvenOnly;
        lin.workers = 8;
        ScanReport rl = conjecture_scan(lin);
        if (!rl.counterexamples.empty()) return false;

        ScanConfig cyc = lin;
        cyc.kind = ScanConfig::Kind::Cyclic;
        cyc.max_simples = 9;
        ScanReport rc = conjecture_scan(cyc);
        if (!rc.counterexamples.empty()) return false;

        // Same bounds at all-g parity: [3,3,3,4] must appear among the odd-g
        // violations and the even-g record must stay clean.
        ScanConfig all = cyc;
        all.parity = ScanConfig::Parity::All;
        ScanReport ra = conjecture_scan(all);
        if (!ra.counterexamples.empty()) return false;
        bool flagged = false;
        for (const ScanRecord& rec : ra.odd_g_violations)
            if (rec.series.entries == std::vector<int>{3, 3, 3, 4}) flagged = true;
        std::cout << "  scanned " << rl.algebras_scanned << " linear + " << rc.algebras_scanned
                  << " cyclic series; " << rc.higher_auslander_found
                  << " cyclic higher Auslander; " << ra.odd_g_violations.size()
                  << " odd-g violations at all parity\n";
        return flagged;
    });

    run(9, "property suites (seeded): all invariants hold exactly", 120.0, [] {
        bool ok = true;
        for (const CheckResult& r : run_property_suites(FX, CAP, 20240808)) {
            std::cout << "  " << (r.pass ? "ok   " : "FAIL ") << r.name << " -- " << r.detail
                      << "\n";
            ok = ok && r.pass;
        }
        return ok;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: FAILURES PRESENT\n");
    return failures == 0 ? 0 : 1;
}
