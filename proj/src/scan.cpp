#include "quiverhom/scan.hpp"

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <thread>

namespace quiverhom {

namespace {

// DFS in lexicographic order; `first` pins c_1 when positive. Linear series
// fix c_n = 1 and force c_{n-1} = 2; every other entry ranges over
// [max(2, prev-1), max_entry].
void enumerate_kupisch_stream(KupischSeries::Kind kind, int n, int max_entry, int first,
                              const std::function<void(const KupischSeries&)>& sink) {
    if (n < 1) return;
    const bool cyclic = kind == KupischSeries::Kind::Cyclic;
    if (!cyclic && n == 1) {
        if (first <= 1) sink({kind, {1}});
        return;
    }
    if (cyclic && n == 1) {
        for (int v = 2; v <= max_entry; ++v)
            if (first <= 0 || v == first) sink({kind, {v}});
        return;
    }
    KupischSeries scratch{kind, std::vector<int>(n, 0)};
    std::vector<int>& c = scratch.entries;
    const int body = cyclic ? n : n - 1;
    std::function<void(int)> rec = [&](int i) {
        if (i == body) {
            if (!cyclic) {
                c[n - 1] = 1;
                if (c[n - 2] != 2) return;
            } else {
                if (c[0] < c[n - 1] - 1) return; // wrap constraint
            }
            sink(scratch);
            return;
        }
        int lo = i == 0 ? 2 : std::max(2, c[i - 1] - 1);
        int hi = max_entry;
        if (i == 0 && first > 0) lo = hi = first;
        for (int v = lo; v <= hi; ++v) {
            c[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace

std::vector<KupischSeries> enumerate_kupisch(KupischSeries::Kind kind, int n, int max_entry) {
    std::vector<KupischSeries> out;
    enumerate_kupisch_stream(kind, n, max_entry, 0,
                             [&](const KupischSeries& s) { out.push_back(s); });
    return out;
}

std::uint64_t series_seed(std::uint64_t cfg_seed, const KupischSeries& s) {
    std::uint64_t h = cfg_seed ^ 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    };
    mix(s.kind == KupischSeries::Kind::Cyclic ? 2 : 1);
    for (int v : s.entries) mix(std::uint64_t(v));
    return h;
}

namespace {

struct SeriesOutcome {
    bool higher_auslander = false;
    bool hypothesis = false; // pdim tau_g(DA) <= g-1 (any parity)
    int g = 0;
    bool qf1 = false;
    ExtendedNat pdim_tau;
    std::optional<CensusRow> census;
};

// Full generic-engine evaluation of one Nakayama series; cross-checks the
// Kupisch combinatorics along the way and throws OracleDisagreementError on
// any mismatch.
SeriesOutcome evaluate_series_full(const KupischSeries& s, const ScanConfig& cfg,
                                   const KupischCombinatorics& k, bool with_census) {
    SeriesOutcome out;
    const int cap = cfg.cap;
    AlgebraPtr a = BoundQuiverAlgebra::nakayama(s, cfg.field);

    ExtendedNat g_generic = gldim(a, cap);
    ExtendedNat d_generic = algebra_domdim(a, cap);
    ExtendedNat g_comb = k.gldim(cap);
    ExtendedNat d_comb = k.algebra_domdim(cap);
    if (!(g_generic == g_comb) || !(d_generic == d_comb))
        throw OracleDisagreementError(
            s, "gldim/domdim generic (" + g_generic.to_string() + "," + d_generic.to_string() +
                   ") vs combinatorial (" + g_comb.to_string() + "," + d_comb.to_string() + ")");

    bool semisimple = g_generic.finite_eq(0);
    bool ha = semisimple || (g_generic.is_finite && d_generic.is_finite &&
                             g_generic.v == d_generic.v && g_generic.v >= 2);
    out.higher_auslander = ha;
    if (!ha || semisimple) return out;
    out.g = int(g_generic.v);

    QuiverModule tau_g_da = tau_n(coregular(a), out.g);
    out.pdim_tau = pdim(tau_g_da, cap);
    ExtendedNat pdim_tau_comb = k.pdim_tau_g_of_coregular(out.g, cap);
    if (!(out.pdim_tau == pdim_tau_comb))
        throw OracleDisagreementError(s, "pdim tau_g(DA) generic " + out.pdim_tau.to_string() +
                                             " vs combinatorial " + pdim_tau_comb.to_string());
    out.hypothesis = out.pdim_tau.leq(out.g - 1);

    bool need_verdict = out.hypothesis || with_census;
    if (need_verdict) {
        Qf1Verdict v = qf1_finite_test(a, cap);
        IndecFamily fam = enumerate_nakayama_indecomposables(a);
        MoritaReport mor = morita_bruteforce(a, fam, cap);
        bool fast = k.qf1_local_condition();
        if (v.is_qf1 != mor.qf1)
            throw OracleDisagreementError(s, std::string("finite-test verdict ") +
                                                 (v.is_qf1 ? "true" : "false") +
                                                 " vs Morita brute force " +
                                                 (mor.qf1 ? "true" : "false"));
        if (v.is_qf1 != fast)
            throw OracleDisagreementError(s, std::string("finite-test verdict ") +
                                                 (v.is_qf1 ? "true" : "false") +
                                                 " vs Kupisch local condition " +
                                                 (fast ? "true" : "false"));
        out.qf1 = v.is_qf1;
        if (with_census) {
            IntervalClassCensus sr = interval_class_census(a, fam, cap);
            if (!sr.sets_match)
                throw OracleDisagreementError(s, "interval class identities failed");
            out.census = CensusRow{s, out.g, sr.pdim_g_count, sr.domdim_zero_count,
                                       sr.idim_g_count, sr.codomdim_zero_count};
        }
    }
    return out;
}

struct ChunkResult {
    std::uint64_t scanned = 0;
    std::uint64_t ha = 0;
    std::uint64_t instances = 0;
    std::vector<ScanRecord> counterexamples;
    std::vector<ScanRecord> odd_violations;
    std::vector<CensusRow> census;
};

} // namespace

ScanReport conjecture_scan(const ScanConfig& cfg, bool with_census) {
    auto t0 = std::chrono::steady_clock::now();
    ScanReport report;
    report.config = cfg;
    const int max_entry = cfg.effective_max_entry();

    // Work units: (kind, n, first entry) for large n, (kind, n) otherwise.
    // Series are enumerated inside the unit in lexicographic order, so
    // aggregation is a deterministic fold over unit index regardless of the
    // worker count.
    struct Unit {
        KupischSeries::Kind kind;
        int n;
        int first; // 0: all first entries
    };
    std::vector<Unit> units;
    auto add_units = [&](KupischSeries::Kind kind) {
        for (int n = 1; n <= cfg.max_simples; ++n) {
            if (n >= 8) {
                for (int c1 = 2; c1 <= max_entry; ++c1) units.push_back({kind, n, c1});
            } else {
                units.push_back({kind, n, 0});
            }
        }
    };
    if (cfg.kind != ScanConfig::Kind::Cyclic) add_units(KupischSeries::Kind::Linear);
    if (cfg.kind != ScanConfig::Kind::Linear) add_units(KupischSeries::Kind::Cyclic);

    std::vector<ChunkResult> results(units.size());
    std::atomic<size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (!failed.load()) {
            size_t u = cursor.fetch_add(1);
            if (u >= units.size()) return;
            auto [kind, n, first] = units[u];
            ChunkResult& res = results[u];
            try {
                std::uint64_t idx = 0;
                enumerate_kupisch_stream(kind, n, max_entry, first, [&](const KupischSeries& s) {
                    ++res.scanned;
                    KupischCombinatorics k(s);
                    auto g = k.equal_gldim_domdim(cfg.cap);
                    bool ha_fast = g.has_value() && (*g == 0 || *g >= 2);
                    // Sampled full cross-check of fast-path rejections.
                    bool sample = ((idx++ & ((1ULL << cfg.cross_check_shift) - 1)) == 0);
                    if (!ha_fast && sample) {
                        AlgebraPtr a = BoundQuiverAlgebra::nakayama(s, cfg.field);
                        HigherAuslanderInfo info = is_higher_auslander(a, cfg.cap);
                        if (info.is_higher_auslander)
                            throw OracleDisagreementError(
                                s, "fast path rejected a higher Auslander algebra");
                    }
                    if (!ha_fast) return;
                    SeriesOutcome o = evaluate_series_full(s, cfg, k, with_census);
                    if (!o.higher_auslander)
                        throw OracleDisagreementError(
                            s, "fast path accepted a non higher Auslander algebra");
                    ++res.ha;
                    if (o.g < 2) return; // semisimple: no conjecture content
                    bool even = o.g % 2 == 0;
                    if (cfg.parity == ScanConfig::Parity::EvenOnly && !even) {
                        if (o.census) res.census.push_back(*o.census);
                        return;
                    }
                    if (o.hypothesis) {
                        if (even) ++res.instances;
                        if (!o.qf1) {
                            ScanRecord rec{s, o.g, o.qf1, o.pdim_tau};
                            (even ? res.counterexamples : res.odd_violations)
                                .push_back(std::move(rec));
                        }
                    }
                    if (o.census) res.census.push_back(*o.census);
                });
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failed.exchange(true)) failure = e.what();
                return;
            }
        }
    };

    int workers = std::max(1, cfg.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed.load()) throw QhError("scan aborted: " + failure);

    for (const ChunkResult& res : results) {
        report.algebras_scanned += res.scanned;
        report.higher_auslander_found += res.ha;
        report.conjecture_instances += res.instances;
        for (const ScanRecord& r : res.counterexamples) report.counterexamples.push_back(r);
        for (const ScanRecord& r : res.odd_violations) report.odd_g_violations.push_back(r);
        for (const CensusRow& r : res.census) report.census.push_back(r);
    }

    // Re-validate every recorded violation on a fresh rebuild.
    for (const ScanRecord& r : report.counterexamples) {
        KupischCombinatorics k(r.series);
        SeriesOutcome o = evaluate_series_full(r.series, cfg, k, false);
        if (!o.hypothesis || o.qf1)
            throw OracleDisagreementError(r.series, "counterexample failed revalidation");
    }
    for (const ScanRecord& r : report.odd_g_violations) {
        KupischCombinatorics k(r.series);
        SeriesOutcome o = evaluate_series_full(r.series, cfg, k, false);
        if (!o.hypothesis || o.qf1)
            throw OracleDisagreementError(r.series, "odd-g violation failed revalidation");
    }

    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string scan_report_json(const ScanReport& r) {
    nlohmann::json j;
    j["algebras_scanned"] = r.algebras_scanned;
    j["higher_auslander_found"] = r.higher_auslander_found;
    j["conjecture_instances"] = r.conjecture_instances;
    auto series_json = [](const KupischSeries& s) {
        nlohmann::json sj;
        sj["kind"] = s.kind == KupischSeries::Kind::Cyclic ? "cyclic" : "linear";
        sj["entries"] = s.entries;
        return sj;
    };
    auto record_json = [&](const ScanRecord& rec) {
        nlohmann::json rj;
        rj["kupisch"] = series_json(rec.series);
        rj["g"] = rec.g;
        rj["qf1"] = rec.qf1;
        rj["pdim_tau_g_DA"] =
            rec.pdim_tau_g_da.is_finite
                ? nlohmann::json(rec.pdim_tau_g_da.v)
                : nlohmann::json(">=" + std::to_string(rec.pdim_tau_g_da.v));
        return rj;
    };
    j["counterexamples"] = nlohmann::json::array();
    for (const ScanRecord& rec : r.counterexamples) j["counterexamples"].push_back(record_json(rec));
    j["odd_g_violations"] = nlohmann::json::array();
    for (const ScanRecord& rec : r.odd_g_violations) j["odd_g_violations"].push_back(record_json(rec));
    j["wall_time"] = r.wall_time;
    j["config"] = {
        {"kind", r.config.kind == ScanConfig::Kind::Both
                     ? "both"
                     : (r.config.kind == ScanConfig::Kind::Linear ? "linear" : "cyclic")},
        {"max_simples", r.config.max_simples},
        {"max_entry", r.config.effective_max_entry()},
        {"parity", r.config.parity == ScanConfig::Parity::EvenOnly ? "even" : "all"},
        {"workers", r.config.workers},
        {"field", r.config.field.name()},
        {"seed", r.config.seed},
        {"cap", r.config.cap},
    };
    if (!r.census.empty()) {
        j["census"] = nlohmann::json::array();
        for (const CensusRow& row : r.census) {
            nlohmann::json cj;
            cj["kupisch"] = series_json(row.series);
            cj["g"] = row.g;
            cj["pdim_g_count"] = row.pdim_g_count;
            cj["domdim_zero_count"] = row.domdim_zero_count;
            cj["idim_g_count"] = row.idim_g_count;
            cj["codomdim_zero_count"] = row.codomdim_zero_count;
            j["census"].push_back(cj);
        }
    }
    return j.dump(2);
}

} // namespace quiverhom
