#include "quiverhom/worked_examples.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace quiverhom {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        auto [ok, detail] = f();
        r.pass = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

AlgebraPtr zero_relation_an(int n, Field f = Field::rationals()) {
    std::vector<int> c(n, 2);
    c[n - 1] = 1;
    return BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Linear, c}, f);
}

std::vector<AlgebraPtr> standard_fixtures(const FixtureSet& fx) {
    return {
        fx.load("kupisch-3334.alg"),
        fx.load("kupisch-23333221.alg"),
        fx.load("gorenstein-domdim1.alg"),
        fx.load("auslander-a2.alg"),
        fx.load("auslander-dualnumbers.alg"),
        zero_relation_an(5),
    };
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

} // namespace

AlgebraPtr FixtureSet::load(const std::string& file, int length_cap) const {
    return parse_algebra_file(dir + "/" + file, length_cap).algebra;
}

std::vector<CheckResult> run_worked_example_checks(const FixtureSet& fx, int cap) {
    std::vector<CheckResult> out;

    out.push_back(timed("zero-relation A_n: pdim S(i) = n-i, gldim = domdim = n-1", [&] {
        for (int n = 2; n <= 6; ++n) {
            auto a = zero_relation_an(n);
            for (int i = 0; i < n; ++i)
                if (!pdim(simple(a, i), cap).finite_eq(n - (i + 1)))
                    return std::make_pair(false, "pdim S(" + std::to_string(i + 1) + ") wrong");
            if (!gldim(a, cap).finite_eq(n - 1) || !algebra_domdim(a, cap).finite_eq(n - 1))
                return std::make_pair(false, "gldim/domdim wrong at n=" + std::to_string(n));
        }
        return std::make_pair(true, std::string("n = 2..6"));
    }));

    out.push_back(timed("zero-relation A_n: tau_{n-1}(DA) = P(n), algebra is QF-1", [&] {
        for (int n = 2; n <= 6; ++n) {
            auto a = zero_relation_an(n);
            if (!is_isomorphic(tau_n(coregular(a), n - 1), projective(a, n - 1), 3))
                return std::make_pair(false, "translate mismatch at n=" + std::to_string(n));
            if (!qf1_finite_test(a, cap).is_qf1)
                return std::make_pair(false, "QF-1 failed at n=" + std::to_string(n));
        }
        return std::make_pair(true, std::string("n = 2..6"));
    }));

    out.push_back(timed("Gorenstein example: faithful projective-injective side", [&] {
        auto a = fx.load("gorenstein-domdim1.alg");
        bool ok = is_projective_injective(projective(a, 0)) && !is_injective(projective(a, 1));
        return std::make_pair(ok, std::string("e_1A projective-injective, e_2A not injective"));
    }));

    out.push_back(timed("Gorenstein example: domdim 1, costable = e_2A, Ext^1(soc e_2A, A) = 0", [&] {
        auto a = fx.load("gorenstein-domdim1.alg");
        if (!algebra_domdim(a, cap).finite_eq(1)) return std::make_pair(false, std::string("domdim"));
        if (!is_isomorphic(costable_module(a, cap), projective(a, 1), 3))
            return std::make_pair(false, std::string("costable"));
        QuiverModule s = socle(projective(a, 1)).module;
        if (ext_dim(s, regular(a), 1) != 0) return std::make_pair(false, std::string("Ext^1"));
        if (!(pdim(s, cap) == ExtendedNat::at_least(cap)))
            return std::make_pair(false, std::string("pdim soc e_2A should exceed the cap"));
        return std::make_pair(true, std::string("all verified"));
    }));

    out.push_back(timed("Kupisch [3,3,3,4]: gldim 5 = domdim, pdim tau_5(DA) = 3, not QF-1", [&] {
        auto a = fx.load("kupisch-3334.alg");
        Qf1Verdict v = qf1_finite_test(a, cap);
        bool ok = v.gldim.finite_eq(5) && v.domdim.finite_eq(5) &&
                  v.condition1.pdim_tau_g_DA.finite_eq(3) && v.condition1.holds &&
                  !v.condition2.holds && !v.is_qf1;
        return std::make_pair(ok, "qf1 = " + yes_no(v.is_qf1));
    }));

    out.push_back(timed("Kupisch [2,3,3,3,3,2,2,1]: gldim 4 = domdim 4, QF-1, Ext^3(DA,A) != 0", [&] {
        auto a = fx.load("kupisch-23333221.alg");
        Qf1Verdict v = qf1_finite_test(a, cap);
        if (!(v.gldim.finite_eq(4) && v.domdim.finite_eq(4) && v.is_qf1))
            return std::make_pair(false, std::string("verdict"));
        if (ext_dim(coregular(a), regular(a), 3) <= 0)
            return std::make_pair(false, std::string("Ext^3(DA, A)"));
        MoritaReport m = morita_bruteforce(a, enumerate_nakayama_indecomposables(a), cap);
        return std::make_pair(m.qf1 && m.family_exhaustive, std::string("Morita agrees"));
    }));

    out.push_back(timed("Kupisch [5,5,5,5,5,7,6]: simple summands of tau_5(DA) and costable", [&] {
        auto a = fx.load("kupisch-5555576.alg");
        HigherAuslanderInfo ha = is_higher_auslander(a, cap);
        if (!ha.is_higher_auslander || !ha.g || *ha.g != 5)
            return std::make_pair(false, std::string("not higher Auslander of g = 5"));
        auto count_simple = [&](const QuiverModule& m, int vertex) {
            int total = 0;
            bool right_vertex = true;
            for (const auto& p : decompose(m, 5))
                if (p.summand.total_dim() == 1) {
                    total += p.multiplicity;
                    right_vertex = right_vertex && is_isomorphic(p.summand, simple(a, vertex), 5);
                }
            return std::make_pair(total, right_vertex);
        };
        auto [t_count, t_ok] = count_simple(tau_n(coregular(a), 5), 6);
        auto [c_count, c_ok] = count_simple(costable_module(a, cap), 0);
        bool ok = t_count == 1 && t_ok && c_count == 1 && c_ok;
        return std::make_pair(ok, std::string("tau_5(DA) has S(7), costable has S(1)"));
    }));

    out.push_back(timed("GF(3) 12-vertex: builds, gldim 3 = domdim, QF-1 with no witness", [&] {
        auto a = fx.load("gf3-12vertex.alg");
        Qf1Verdict v = qf1_finite_test(a, cap);
        bool ok = v.gldim.finite_eq(3) && v.domdim.finite_eq(3) && v.is_qf1 &&
                  !v.condition2.witness;
        return std::make_pair(ok, "dim A = " + std::to_string(a->dim()));
    }));

    out.push_back(timed("Auslander algebras of A_1 and A_2 are QF-1 of gldim <= 2", [&] {
        auto a1 = fx.load("auslander-a1.alg");
        Qf1Verdict v1 = qf1_finite_test(a1, cap);
        auto a2 = fx.load("auslander-a2.alg");
        Qf1Verdict v2 = qf1_finite_test(a2, cap);
        bool ok = v1.is_qf1 && v1.gldim.finite_eq(0) && v2.is_qf1 && v2.gldim.finite_eq(2);
        return std::make_pair(ok, std::string("both QF-1"));
    }));

    out.push_back(timed("six-vertex algebra with ab-cd = 0 = be = df is QF-1 of gldim 2", [&] {
        auto c = fx.load("auslander-a3-nonlinear.alg");
        Qf1Verdict v = qf1_finite_test(c, cap);
        bool ok = v.is_qf1 && v.gldim.finite_eq(2) && v.domdim.finite_eq(2);
        return std::make_pair(ok, "dim C = " + std::to_string(c->dim()));
    }));

    out.push_back(timed("Auslander algebra of linearly oriented A_3 is not QF-1", [&] {
        auto a = fx.load("auslander-a3-linear.alg");
        Qf1Verdict v = qf1_finite_test(a, cap);
        return std::make_pair(!v.is_qf1 && v.gldim.finite_eq(2) && v.domdim.finite_eq(2),
                              "qf1 = " + yes_no(v.is_qf1));
    }));

    out.push_back(timed("Auslander algebra of K[x]/(x^2) is not QF-1 (Morita witness)", [&] {
        auto a = fx.load("auslander-dualnumbers.alg");
        HigherAuslanderInfo ha = is_higher_auslander(a, cap);
        if (!ha.is_higher_auslander || !ha.g || *ha.g != 2)
            return std::make_pair(false, std::string("should be higher Auslander of g = 2"));
        IndecFamily fam = enumerate_nakayama_indecomposables(a);
        MoritaReport m = morita_bruteforce(a, fam, cap);
        if (m.qf1 || !m.witness) return std::make_pair(false, std::string("Morita"));
        const QuiverModule& w = fam.modules[*m.witness];
        bool witness_ok = domdim(w, cap).finite_eq(0) && codomdim(w, cap).finite_eq(0);
        Qf1Verdict v = qf1_finite_test(a, cap);
        return std::make_pair(witness_ok && !v.is_qf1, std::string("witness has dom = codom = 0"));
    }));

    out.push_back(timed("is_higher_auslander on the named fixtures", [&] {
        auto h1 = is_higher_auslander(fx.load("kupisch-3334.alg"), cap);
        auto h2 = is_higher_auslander(fx.load("kupisch-23333221.alg"), cap);
        auto h3 = is_higher_auslander(fx.load("gorenstein-domdim1.alg"), cap);
        bool ok = h1.is_higher_auslander && h1.g == 5 && h2.is_higher_auslander && h2.g == 4 &&
                  !h3.is_higher_auslander;
        return std::make_pair(ok, std::string("(true,5), (true,4), false"));
    }));

    out.push_back(timed("Nakayama fast path matches the finite test on the Kupisch fixtures", [&] {
        bool ok = nakayama_qf1_criterion(fx.load("kupisch-23333221.alg")) &&
                  !nakayama_qf1_criterion(fx.load("kupisch-3334.alg")) &&
                  nakayama_qf1_criterion(fx.load("auslander-a2.alg")) &&
                  !nakayama_qf1_criterion(fx.load("auslander-dualnumbers.alg"));
        return std::make_pair(ok, std::string("four fixtures"));
    }));

    out.push_back(timed("hom between projectives equals the path-count table", [&] {
        for (auto a : standard_fixtures(fx))
            for (int i = 0; i < a->vertex_count(); ++i)
                for (int j = 0; j < a->vertex_count(); ++j) {
                    int by_paths = a->hom_between_projectives_dim(i, j);
                    int by_solve = hom_dim(projective(a, i), projective(a, j));
                    if (by_paths != by_solve)
                        return std::make_pair(false, "mismatch at (" + std::to_string(i) + "," +
                                                         std::to_string(j) + ")");
                }
        return std::make_pair(true, std::string("all fixtures, all pairs"));
    }));

    out.push_back(timed("mini conjecture scan: cyclic n <= 4 flags [3,3,3,4] at odd g", [&] {
        ScanConfig cfg;
        cfg.kind = ScanConfig::Kind::Cyclic;
        cfg.max_simples = 4;
        cfg.parity = ScanConfig::Parity::All;
        cfg.workers = 2;
        ScanReport r = conjecture_scan(cfg);
        bool found = false;
        for (const ScanRecord& rec : r.odd_g_violations)
            if (rec.series.entries == std::vector<int>{3, 3, 3, 4}) found = true;
        return std::make_pair(found && r.counterexamples.empty(),
                              std::to_string(r.algebras_scanned) + " series scanned");
    }));

    out.push_back(timed("mini conjecture scan: linear n <= 6 has no even-g counterexamples", [&] {
        ScanConfig cfg;
        cfg.kind = ScanConfig::Kind::Linear;
        cfg.max_simples = 6;
        cfg.parity = ScanConfig::Parity::EvenOnly;
        cfg.workers = 2;
        ScanReport r = conjecture_scan(cfg);
        return std::make_pair(r.counterexamples.empty(),
                              std::to_string(r.algebras_scanned) + " series scanned");
    }));

    out.push_back(timed("Kupisch enumeration: linear n = 3 cap 3 is {[2,2,1],[3,2,1]}", [&] {
        auto all = enumerate_kupisch(KupischSeries::Kind::Linear, 3, 3);
        bool ok = all.size() == 2 && all[0].entries == std::vector<int>{2, 2, 1} &&
                  all[1].entries == std::vector<int>{3, 2, 1};
        return std::make_pair(ok, std::string("[2,3,1] correctly excluded"));
    }));

    out.push_back(timed("interval dimension-class identities on the higher Auslander Kupisch fixtures", [&] {
        for (const char* f : {"kupisch-3334.alg", "kupisch-23333221.alg", "kupisch-5555576.alg"}) {
            auto a = fx.load(f);
            IntervalClassCensus r = interval_class_census(a, enumerate_nakayama_indecomposables(a), cap);
            if (!r.sets_match) return std::make_pair(false, std::string(f));
        }
        return std::make_pair(true, std::string("pdim-g and domdim-0 classes coincide"));
    }));

    out.push_back(timed("tau_g(stable) = costable and add tau_g^{-1}(A) = add stable", [&] {
        for (const char* f : {"kupisch-3334.alg", "kupisch-23333221.alg"}) {
            auto a = fx.load(f);
            HigherAuslanderInfo ha = is_higher_auslander(a, cap);
            if (!ha.g) return std::make_pair(false, std::string(f));
            if (!is_isomorphic(tau_n(stable_module(a, cap), *ha.g), costable_module(a, cap), 5))
                return std::make_pair(false, std::string(f) + ": translate");
            auto lparts = decompose(tau_n_inverse(regular(a), *ha.g), 5);
            auto rparts = decompose(stable_module(a, cap), 5);
            for (const auto& lp : lparts) {
                bool found = false;
                for (const auto& rp : rparts)
                    if (is_isomorphic(lp.summand, rp.summand, 5)) found = true;
                if (!found) return std::make_pair(false, std::string(f) + ": add closure");
            }
            for (const auto& rp : rparts) {
                bool found = false;
                for (const auto& lp : lparts)
                    if (is_isomorphic(lp.summand, rp.summand, 5)) found = true;
                if (!found) return std::make_pair(false, std::string(f) + ": add closure");
            }
        }
        return std::make_pair(true, std::string("both fixtures"));
    }));

    out.push_back(timed("Ext dimension formulas on the [2,3,3,3,3,2,2,1] intervals", [&] {
        auto a = fx.load("kupisch-23333221.alg");
        for (const QuiverModule& m : enumerate_nakayama_indecomposables(a).modules) {
            if (is_projective(m) && is_injective(m)) continue;
            DimensionFormulaReport rep = dimension_formulas_verify(a, m, 12);
            if (!rep.domdim_agrees || !rep.pdim_agrees || !rep.duality_holds)
                return std::make_pair(false, std::string("formula mismatch"));
        }
        return std::make_pair(true, std::string("all non-projective-injective intervals"));
    }));

    out.push_back(timed("g-quasi-tilted and trace-condition routes agree with the finite test", [&] {
        for (const char* f : {"kupisch-3334.alg", "kupisch-23333221.alg", "auslander-dualnumbers.alg"}) {
            auto a = fx.load(f);
            IndecFamily fam = enumerate_nakayama_indecomposables(a);
            bool expect = qf1_finite_test(a, cap).is_qf1;
            if (g_quasi_tilted_check(a, fam, cap) != expect)
                return std::make_pair(false, std::string(f) + ": g-quasi-tilted");
            if (trace_condition_check(a, fam, cap) != expect)
                return std::make_pair(false, std::string(f) + ": prop 3.11");
        }
        return std::make_pair(true, std::string("three fixtures"));
    }));

    out.push_back(timed("simple-Ext necessary condition on the QF-1 fixtures", [&] {
        for (const char* f : {"kupisch-23333221.alg", "auslander-a2.alg", "gf3-12vertex.alg"}) {
            if (!simple_ext_necessary_condition(fx.load(f), cap))
                return std::make_pair(false, std::string(f));
        }
        return std::make_pair(true, std::string("three QF-1 fixtures"));
    }));

    out.push_back(timed("Ext-vanishing Ext^i(A+DA, A+DA) = 0 for 1 <= i <= n-2 on A_n", [&] {
        for (int n = 3; n <= 6; ++n) {
            auto a = zero_relation_an(n);
            QuiverModule m = direct_sum({regular(a), coregular(a)});
            for (int i = 1; i <= n - 2; ++i)
                if (ext_dim(m, m, i) != 0)
                    return std::make_pair(false, "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        return std::make_pair(true, std::string("n = 3..6"));
    }));

    out.push_back(timed("fixture files round-trip through the text format", [&] {
        for (const char* f :
             {"kupisch-3334.alg", "kupisch-23333221.alg", "kupisch-5555576.alg",
              "gorenstein-domdim1.alg", "gf3-12vertex.alg", "semisimple.alg", "auslander-a1.alg",
              "auslander-a2.alg", "auslander-a3-nonlinear.alg", "auslander-a3-linear.alg",
              "auslander-dualnumbers.alg", "zero-relation-a4.alg"}) {
            auto a = fx.load(f);
            auto b = parse_algebra_text(serialize_algebra(*a)).algebra;
            if (a->dim() != b->dim() || !(a->field() == b->field()))
                return std::make_pair(false, std::string(f));
            std::multiset<std::tuple<int, int, int>> ba, bb;
            for (const BasisPath& p : a->basis()) ba.insert({p.src, p.tgt, p.length()});
            for (const BasisPath& p : b->basis()) bb.insert({p.src, p.tgt, p.length()});
            if (ba != bb) return std::make_pair(false, std::string(f) + ": basis multiset");
        }
        return std::make_pair(true, std::string("12 fixtures"));
    }));

    return out;
}

CheckResult prop_yoneda_identities(const FixtureSet& fx, int cases, std::uint64_t seed) {
    return timed("Yoneda dimension identities", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        auto fixtures = standard_fixtures(fx);
        for (int it = 0; it < cases; ++it) {
            const AlgebraPtr& a = fixtures[rng() % fixtures.size()];
            int i = int(rng() % a->vertex_count());
            // random interval-ish test module: quotient of a random projective
            int v = int(rng() % a->vertex_count());
            QuiverModule p = projective(a, v);
            Submodule rad = radical(p);
            QuiverModule m = (rng() & 1) ? p : cokernel(trace(rad.module, p).inclusion).module;
            if (hom_dim(projective(a, i), m) != m.dim(i)) return {false, "Hom(P(i), M)"};
            if (hom_dim(m, injective(a, i)) != m.dim(i)) return {false, "Hom(M, I(i))"};
        }
        return {true, std::to_string(cases) + " cases"};
    });
}

CheckResult prop_duality_involution(const FixtureSet& fx, int cases, std::uint64_t seed) {
    return timed("duality involution and Hom swap", [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        auto fixtures = standard_fixtures(fx);
        for (int it = 0; it < cases; ++it) {
            const AlgebraPtr& a = fixtures[rng() % fixtures.size()];
            int i = int(rng() % a->vertex_count());
            int j = int(rng() % a->vertex_count());
            QuiverModule m = (rng() & 1) ? projective(a, i) : injective(a, i);
            QuiverModule n = (rng() & 1) ? simple(a, j) : projective(a, j);
            if (!(dual(dual(m)) == m)) return {false, "involution"};
            if (hom_dim(m, n) != hom_dim(dual(n), dual(m))) return {false, "Hom swap"};
        }
        return {true, std::to_string(cases) + " cases"};
    });
}

CheckResult prop_nakayama_on_projectives(const FixtureSet& fx) {
    return timed("nu P(i) = I(i) and nu^{-1} nu P(i) = P(i)", [&]() -> std::pair<bool, std::string> {
        for (auto a : standard_fixtures(fx))
            for (int i = 0; i < a->vertex_count(); ++i) {
                QuiverModule nu_p = nakayama_functor(projective(a, i));
                if (!is_isomorphic(nu_p, injective(a, i), 3)) return {false, "nu P(i)"};
                if (!is_isomorphic(nakayama_functor_inverse(nu_p), projective(a, i), 3))
                    return {false, "nu^{-1}"};
            }
        return {true, "all fixtures, all vertices"};
    });
}

CheckResult prop_dimension_formulas_random_quotients(const FixtureSet& fx, int cases, std::uint64_t seed,
                                            int cap) {
    return timed("dimension formulas on random quotients of projectives",
                 [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        auto fixtures = standard_fixtures(fx);
        int used = 0;
        for (int it = 0; it < cases; ++it) {
            const AlgebraPtr& a = fixtures[rng() % fixtures.size()];
            int v = int(rng() % a->vertex_count());
            QuiverModule p = projective(a, v);
            // random submodule of the radical -> random quotient of P
            Submodule rad = radical(p);
            std::vector<std::vector<RowVec>> gens(a->vertex_count());
            const Field& f = a->field();
            for (int w = 0; w < a->vertex_count(); ++w) {
                if (rad.module.dim(w) == 0) continue;
                if (rng() % 3 == 0) continue;
                RowVec g(p.dim(w), f.zero());
                for (int r = 0; r < rad.module.dim(w); ++r) {
                    long long c = (long long)(rng() % 3);
                    RowVec row = rad.spans[w].basis().row(r);
                    for (int x = 0; x < p.dim(w); ++x)
                        g[x] = f.add(g[x], f.mul(f.from_int(c), row[x]));
                }
                gens[w].push_back(std::move(g));
            }
            QuiverModule m = cokernel(submodule_generated(p, gens).inclusion).module;
            if (m.is_zero()) continue;
            if (is_projective(m) && is_injective(m)) continue;
            DimensionFormulaReport rep = dimension_formulas_verify(a, m, cap);
            if (!rep.domdim_agrees) return {false, "domdim formula"};
            if (pdim(m, cap).is_finite && !rep.pdim_agrees) return {false, "pdim formula"};
            ++used;
        }
        return {true, std::to_string(used) + " modules checked"};
    });
}

CheckResult prop_duality_and_sum_formula_on_intervals(int cap) {
    return timed("Ext duality and the dimension sum formula on fixture intervals",
                 [&]() -> std::pair<bool, std::string> {
        std::vector<AlgebraPtr> algebras = {
            BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Cyclic, {3, 3, 3, 4}},
                                         Field::rationals()),
            BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Linear, {2, 3, 3, 3, 3, 2, 2, 1}},
                                         Field::rationals()),
            BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Cyclic, {5, 5, 5, 5, 5, 7, 6}},
                                         Field::rationals()),
        };
        for (int n = 2; n <= 8; ++n) algebras.push_back(zero_relation_an(n));
        int checked = 0;
        for (const AlgebraPtr& a : algebras) {
            HigherAuslanderInfo ha = is_higher_auslander(a, cap);
            if (!ha.g) return {false, "fixture not higher Auslander"};
            int g = *ha.g;
            if (g < 1) continue;
            QuiverModule stable = stable_module(a, cap);
            QuiverModule costable = costable_module(a, cap);
            for (const QuiverModule& m : enumerate_nakayama_indecomposables(a).modules) {
                if (is_projective(m) && is_injective(m)) continue;
                ExtendedNat pd = pdim(m, cap), dd = domdim(m, cap);
                ExtendedNat id = idim(m, cap), cd = codomdim(m, cap);
                if (!pd.is_finite || !dd.is_finite || !id.is_finite || !cd.is_finite)
                    return {false, "interval dimensions not finite"};
                if (pd.v + dd.v != g) return {false, "pdim + domdim != g"};
                if (id.v + cd.v != g) return {false, "idim + codomdim != g"};
                std::vector<int> lhs = ext_dims_upto(stable, m, g);
                std::vector<int> rhs = ext_dims_upto(m, costable, g);
                for (int k = 0; k <= g; ++k)
                    if (lhs[k] != rhs[g - k]) return {false, "Ext duality"};
                ++checked;
            }
        }
        return {true, std::to_string(checked) + " intervals"};
    });
}

CheckResult prop_strict_inequalities_on_intervals(int cap) {
    return timed("strict inequalities idim > domdim tau^{-1}, pdim > codomdim tau",
                 [&]() -> std::pair<bool, std::string> {
        std::vector<AlgebraPtr> algebras = {
            BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Cyclic, {3, 3, 3, 4}},
                                         Field::rationals()),
            BoundQuiverAlgebra::nakayama({KupischSeries::Kind::Linear, {2, 3, 3, 3, 3, 2, 2, 1}},
                                         Field::rationals()),
        };
        for (int n = 2; n <= 6; ++n) algebras.push_back(zero_relation_an(n));
        int checked = 0;
        for (const AlgebraPtr& a : algebras) {
            for (const QuiverModule& m : enumerate_nakayama_indecomposables(a).modules) {
                if (!is_injective(m)) {
                    ExtendedNat i = idim(m, cap);
                    ExtendedNat d = domdim(tau_inverse(m), cap);
                    if (i.is_finite && d.is_finite && !(i.v > d.v)) return {false, "idim"};
                    if (!i.is_finite && !d.is_finite) return {false, "both infinite"};
                    ++checked;
                }
                if (!is_projective(m)) {
                    ExtendedNat p = pdim(m, cap);
                    ExtendedNat c = codomdim(tau(m), cap);
                    if (p.is_finite && c.is_finite && !(p.v > c.v)) return {false, "pdim"};
                    ++checked;
                }
            }
        }
        return {true, std::to_string(checked) + " inequalities"};
    });
}

CheckResult prop_left_right_symmetry(const FixtureSet& fx, int cap) {
    return timed("left-right symmetry qf1(A) = qf1(A^op)", [&]() -> std::pair<bool, std::string> {
        std::vector<AlgebraPtr> algebras = {
            fx.load("kupisch-3334.alg"),       fx.load("kupisch-23333221.alg"),
            fx.load("auslander-a2.alg"),       fx.load("auslander-dualnumbers.alg"),
            fx.load("auslander-a3-linear.alg"), fx.load("auslander-a3-nonlinear.alg"),
            fx.load("gf3-12vertex.alg"),       zero_relation_an(5),
        };
        for (const AlgebraPtr& a : algebras)
            if (qf1_finite_test(a, cap).is_qf1 != qf1_finite_test(a->opposite(), cap).is_qf1)
                return {false, "asymmetry found"};
        return {true, std::to_string(algebras.size()) + " fixtures"};
    });
}

CheckResult prop_fast_path_agreement(int max_simples, int cap) {
    return timed("Kupisch fast path = finite test on every small higher Auslander series",
                 [&]() -> std::pair<bool, std::string> {
        int checked = 0;
        for (auto kind : {KupischSeries::Kind::Linear, KupischSeries::Kind::Cyclic}) {
            for (int n = 1; n <= max_simples; ++n) {
                for (const KupischSeries& s : enumerate_kupisch(kind, n, 2 * max_simples)) {
                    KupischCombinatorics k(s);
                    auto g = k.equal_gldim_domdim(cap);
                    if (!g || *g < 2) continue;
                    AlgebraPtr a = BoundQuiverAlgebra::nakayama(s, Field::prime(2));
                    if (qf1_finite_test(a, cap).is_qf1 != k.qf1_local_condition())
                        return {false, s.to_string()};
                    ++checked;
                }
            }
        }
        return {true, std::to_string(checked) + " higher Auslander series"};
    });
}

std::vector<CheckResult> run_property_suites(const FixtureSet& fx, int cap, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(prop_yoneda_identities(fx, 200, seed));
    out.push_back(prop_duality_involution(fx, 200, seed + 1));
    out.push_back(prop_nakayama_on_projectives(fx));
    out.push_back(prop_dimension_formulas_random_quotients(fx, 200, seed + 2, 16));
    out.push_back(prop_duality_and_sum_formula_on_intervals(cap));
    out.push_back(prop_strict_inequalities_on_intervals(cap));
    out.push_back(prop_left_right_symmetry(fx, cap));
    out.push_back(prop_fast_path_agreement(5, cap));
    return out;
}

} // namespace quiverhom
