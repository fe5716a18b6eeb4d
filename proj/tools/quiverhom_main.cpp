#include "quiverhom/module_expr.hpp"
#include "quiverhom/worked_examples.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace quiverhom;

namespace {

int default_cap() {
    if (const char* env = std::getenv("QUIVERHOM_CAP")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 33;
}

AlgebraPtr load_algebra(const std::string& path, int length_cap) {
    ParsedAlgebra p = parse_algebra_file(path, length_cap);
    for (const std::string& w : p.warnings) std::cerr << "warning: " << w << "\n";
    return p.algebra;
}

std::string copies_to_string(const BoundQuiverAlgebra& a, const std::vector<int>& copies,
                             char letter) {
    if (copies.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < copies.size(); ++i) {
        if (i) s += " + ";
        s += letter;
        s += "(" + a.quiver().vertex_labels[copies[i]] + ")";
    }
    return s;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw QhError("cannot write '" + path + "'");
    out << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological invariants and QF-1 tests for bound quiver algebras"};
    app.require_subcommand(1);
    int cap = default_cap();
    app.add_option("--cap", cap, "resolution depth cap (default 33, env QUIVERHOM_CAP)")
        ->check(CLI::PositiveNumber);

    std::string file, out_path, module_expr, from_expr, to_expr;
    unsigned long long seed = 0;
    int length_cap = 64;

    auto* analyze = app.add_subcommand("analyze", "dimensions and higher-Auslander status");
    analyze->add_option("file", file)->required();
    analyze->add_option("--length-cap", length_cap, "path length cap for the builder");

    auto* qf1cmd = app.add_subcommand("qf1", "QF-1 verdict as JSON");
    qf1cmd->add_option("file", file)->required();
    qf1cmd->add_option("--out", out_path, "write the JSON here instead of stdout");
    qf1cmd->add_option("--length-cap", length_cap);

    auto* resolve = app.add_subcommand("resolve", "minimal (co)resolution of a module");
    resolve->add_option("file", file)->required();
    resolve->add_option("--module", module_expr, "module expression")->required();
    std::string res_kind = "proj";
    resolve->add_option("--kind", res_kind)->check(CLI::IsMember({"proj", "inj"}));

    auto* ext = app.add_subcommand("ext", "dim Ext^k between module expressions");
    ext->add_option("file", file)->required();
    ext->add_option("--from", from_expr)->required();
    ext->add_option("--to", to_expr)->required();
    int ext_max = -1, ext_k = -1;
    ext->add_option("--degree", ext_k, "single degree k");
    ext->add_option("--max", ext_max, "print all degrees 0..max");

    auto* taucmd = app.add_subcommand("tau", "higher Auslander-Reiten translate");
    taucmd->add_option("file", file)->required();
    taucmd->add_option("--module", module_expr)->required();
    int tau_k = 1;
    bool tau_inv = false, tau_decompose = false;
    taucmd->add_option("-n,--n", tau_k, "translate index (default 1)");
    taucmd->add_flag("--inverse", tau_inv, "apply the inverse translate");
    taucmd->add_flag("--decompose", tau_decompose, "decompose the result (seeded)");
    taucmd->add_option("--seed", seed);

    auto* scan = app.add_subcommand("scan", "Kupisch-series conjecture scan");
    std::string scan_kind = "both", scan_parity = "even", scan_field = "GF(2)", census_path;
    int scan_max = 10, scan_entry = 0, scan_workers = 8;
    bool scan_full = false;
    scan->add_option("--kind", scan_kind)->check(CLI::IsMember({"linear", "cyclic", "both"}));
    scan->add_option("--max-simples", scan_max);
    scan->add_option("--max-entry", scan_entry, "default 2*max-simples");
    scan->add_option("--parity", scan_parity)->check(CLI::IsMember({"even", "all"}));
    scan->add_option("--workers", scan_workers);
    scan->add_option("--seed", seed);
    scan->add_flag("--full", scan_full, "paper-scale bounds: linear 14, cyclic 12");
    scan->add_option("--out", out_path, "write the report JSON here");
    scan->add_option("--census", census_path, "also write the Shen census JSON");

    auto* verify = app.add_subcommand("verify-paper", "run the worked-example fixture suite");
    std::string fixtures_dir = "fixtures";
    verify->add_option("--fixtures", fixtures_dir, "fixture directory (default ./fixtures)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            AlgebraPtr a = load_algebra(file, length_cap);
            HigherAuslanderInfo ha = is_higher_auslander(a, cap);
            std::cout << "field            " << a->field().name() << "\n";
            std::cout << "vertices         " << a->vertex_count() << "\n";
            std::cout << "dim              " << a->dim() << "\n";
            std::cout << "nilpotency       J^" << a->nilpotency() << " = 0\n";
            std::cout << "gldim            " << ha.gldim.to_string() << "\n";
            std::cout << "domdim           " << ha.domdim.to_string() << "\n";
            std::cout << "higher_auslander " << (ha.is_higher_auslander ? "true" : "false");
            if (ha.g) std::cout << " (g = " << *ha.g << ")";
            std::cout << "\n";
            if (auto chain = a->nakayama_chain()) {
                std::cout << "nakayama         " << KupischSeries{chain->kind, chain->c}.to_string()
                          << "\n";
            }
        } else if (*qf1cmd) {
            AlgebraPtr a = load_algebra(file, length_cap);
            Qf1Verdict v = qf1_finite_test(a, cap);
            write_out(qf1_verdict_json(v, a), out_path);
        } else if (*resolve) {
            AlgebraPtr a = load_algebra(file, length_cap);
            QuiverModule m = parse_module_expr(a, module_expr, cap);
            if (res_kind == "proj") {
                ProjectiveResolution r = min_projective_resolution(m, cap);
                for (size_t k = 0; k < r.terms.size(); ++k)
                    std::cout << "P_" << k << " = " << copies_to_string(*a, r.terms[k].copies, 'P')
                              << "\n";
                std::cout << (r.complete ? "complete" : "truncated at the cap") << "\n";
                std::cout << "pdim     " << pdim(m, cap).to_string() << "\n";
                std::cout << "codomdim " << codomdim(m, cap).to_string() << "\n";
            } else {
                InjectiveCoresolution r = min_injective_coresolution(m, cap);
                for (size_t k = 0; k < r.copies.size(); ++k)
                    std::cout << "I^" << k << " = " << copies_to_string(*a, r.copies[k], 'I')
                              << "\n";
                std::cout << (r.complete ? "complete" : "truncated at the cap") << "\n";
                std::cout << "idim   " << idim(m, cap).to_string() << "\n";
                std::cout << "domdim " << domdim(m, cap).to_string() << "\n";
            }
        } else if (*ext) {
            AlgebraPtr a = load_algebra(file, length_cap);
            QuiverModule m = parse_module_expr(a, from_expr, cap);
            QuiverModule n = parse_module_expr(a, to_expr, cap);
            if (ext_k < 0 && ext_max < 0) ext_max = cap;
            if (ext_k >= 0) {
                std::cout << "Ext^" << ext_k << " = " << ext_dim(m, n, ext_k) << "\n";
            } else {
                std::vector<int> dims = ext_dims_upto(m, n, ext_max);
                for (int k = 0; k <= ext_max; ++k)
                    if (dims[k] || k == 0) std::cout << "Ext^" << k << " = " << dims[k] << "\n";
            }
        } else if (*taucmd) {
            AlgebraPtr a = load_algebra(file, length_cap);
            QuiverModule m = parse_module_expr(a, module_expr, cap);
            QuiverModule t = tau_inv ? tau_n_inverse(m, tau_k) : tau_n(m, tau_k);
            std::cout << "tau_" << tau_k << (tau_inv ? "^{-1}" : "") << " dimension vector:";
            for (int v = 0; v < a->vertex_count(); ++v) std::cout << " " << t.dim(v);
            std::cout << "\n";
            if (tau_decompose) {
                for (const auto& p : decompose(t, seed)) {
                    std::cout << "summand x" << p.multiplicity << " dims:";
                    for (int v = 0; v < a->vertex_count(); ++v) std::cout << " " << p.summand.dim(v);
                    std::cout << "\n";
                }
            }
        } else if (*scan) {
            ScanConfig cfg;
            cfg.kind = scan_kind == "linear"   ? ScanConfig::Kind::Linear
                       : scan_kind == "cyclic" ? ScanConfig::Kind::Cyclic
                                               : ScanConfig::Kind::Both;
            cfg.max_simples = scan_max;
            cfg.max_entry = scan_entry;
            cfg.parity = scan_parity == "all" ? ScanConfig::Parity::All
                                              : ScanConfig::Parity::EvenOnly;
            cfg.workers = scan_workers;
            cfg.seed = seed;
            cfg.cap = cap;
            cfg.field = Field::parse(scan_field);
            if (scan_full) {
                std::cerr << "warning: --full scans linear series up to 14 and cyclic up to 12 "
                             "simples; expect a long run\n";
                cfg.max_simples = 14;
                cfg.cross_check_shift = 12; // sparser sampling at paper scale
                if (cfg.kind != ScanConfig::Kind::Linear) {
                    // run the two kinds at their own bounds
                    ScanConfig lin = cfg;
                    lin.kind = ScanConfig::Kind::Linear;
                    lin.max_simples = 14;
                    ScanConfig cyc = cfg;
                    cyc.kind = ScanConfig::Kind::Cyclic;
                    cyc.max_simples = 12;
                    ScanReport r1 = conjecture_scan(lin, !census_path.empty());
                    ScanReport r2 = conjecture_scan(cyc, !census_path.empty());
                    std::string combined = "{\n\"linear\": " + scan_report_json(r1) +
                                           ",\n\"cyclic\": " + scan_report_json(r2) + "\n}";
                    write_out(combined, out_path);
                    std::cerr << "linear: " << r1.algebras_scanned << " scanned, "
                              << r1.counterexamples.size() << " counterexamples; cyclic: "
                              << r2.algebras_scanned << " scanned, "
                              << r2.counterexamples.size() << " counterexamples\n";
                    return int(!r1.counterexamples.empty() || !r2.counterexamples.empty());
                }
            }
            ScanReport r = conjecture_scan(cfg, !census_path.empty());
            std::cout << "scanned " << r.algebras_scanned << " series, "
                      << r.higher_auslander_found << " higher Auslander, "
                      << r.conjecture_instances << " conjecture instances, "
                      << r.counterexamples.size() << " counterexamples, "
                      << r.odd_g_violations.size() << " odd-g violations ("
                      << r.wall_time << " s)\n";
            if (!out_path.empty()) write_out(scan_report_json(r), out_path);
            if (!census_path.empty()) write_out(scan_report_json(r), census_path);
            return int(!r.counterexamples.empty());
        } else if (*verify) {
            FixtureSet fx{fixtures_dir};
            std::vector<CheckResult> results = run_worked_example_checks(fx, cap);
            std::vector<CheckResult> props = run_property_suites(fx, cap, 20240808);
            results.insert(results.end(), props.begin(), props.end());
            size_t passed = 0;
            for (const CheckResult& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
                if (!r.detail.empty()) std::cout << " -- " << r.detail;
                std::cout << " (" << int(r.ms) << " ms)\n";
                passed += r.pass;
            }
            std::cout << passed << "/" << results.size() << " checks passed\n";
            return passed == results.size() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotHigherAuslanderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IsoInconclusiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DecompositionInconclusiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
