#pragma once

#include "quiverhom/qf1.hpp"

#include <cstdint>
#include <functional>

namespace quiverhom {

struct OracleDisagreementError : QhError {
    KupischSeries series;
    OracleDisagreementError(const KupischSeries& s, const std::string& detail)
        : QhError("oracle disagreement on " + s.to_string() + ": " + detail), series(s) {}
};

struct ScanConfig {
    enum class Kind { Linear, Cyclic, Both };
    enum class Parity { EvenOnly, All };
    Kind kind = Kind::Both;
    int max_simples = 10;
    int max_entry = 0; // 0: defaults to 2 * max_simples
    Parity parity = Parity::EvenOnly;
    int workers = 1;
    Field field = Field::prime(2);
    std::uint64_t seed = 0;
    int cap = 33;
    // Fraction of fast-path rejections re-checked with the generic engine:
    // every (1 << cross_check_shift)-th series.
    int cross_check_shift = 8;

    int effective_max_entry() const { return max_entry > 0 ? max_entry : 2 * max_simples; }
};

struct ScanRecord {
    KupischSeries series;
    int g = 0;
    bool qf1 = false;
    ExtendedNat pdim_tau_g_da;
};

struct CensusRow {
    KupischSeries series;
    int g = 0;
    int pdim_g_count = 0;
    int domdim_zero_count = 0;
    int idim_g_count = 0;
    int codomdim_zero_count = 0;
};

struct ScanReport {
    std::uint64_t algebras_scanned = 0;
    std::uint64_t higher_auslander_found = 0;
    std::uint64_t conjecture_instances = 0; // even-g hypothesis holders
    std::vector<ScanRecord> counterexamples;   // even g, hypothesis holds, not QF-1
    std::vector<ScanRecord> odd_g_violations;  // odd g, hypothesis holds, not QF-1
    double wall_time = 0; // seconds
    ScanConfig config;
    std::vector<CensusRow> census; // filled when census requested
};

// Every Kupisch series of the given kind and size with entries <= max_entry,
// in lexicographic order.
std::vector<KupischSeries> enumerate_kupisch(KupischSeries::Kind kind, int n, int max_entry);

ScanReport conjecture_scan(const ScanConfig& cfg, bool with_census = false);

std::string scan_report_json(const ScanReport& r);

// Deterministic per-series seed derived from the config seed.
std::uint64_t series_seed(std::uint64_t cfg_seed, const KupischSeries& s);

} // namespace quiverhom
