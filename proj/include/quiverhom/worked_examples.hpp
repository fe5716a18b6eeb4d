#pragma once

#include "quiverhom/algebra_io.hpp"
#include "quiverhom/scan.hpp"

#include <functional>

namespace quiverhom {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

// The fixture table: named worked examples, loaded from the fixtures
// directory (files shipped with the repository).
struct FixtureSet {
    std::string dir;
    AlgebraPtr load(const std::string& file, int length_cap = 64) const;
};

// Every worked-example check, one result per line of the verify-paper table.
std::vector<CheckResult> run_worked_example_checks(const FixtureSet& fixtures, int cap);

// Seeded property suites shared between the property test binary and the
// acceptance gate. `cases` counts randomized draws where randomization applies.
CheckResult prop_yoneda_identities(const FixtureSet& fixtures, int cases, std::uint64_t seed);
CheckResult prop_duality_involution(const FixtureSet& fixtures, int cases, std::uint64_t seed);
CheckResult prop_nakayama_on_projectives(const FixtureSet& fixtures);
CheckResult prop_dimension_formulas_random_quotients(const FixtureSet& fixtures, int cases,
                                            std::uint64_t seed, int cap);
CheckResult prop_duality_and_sum_formula_on_intervals(int cap);
CheckResult prop_strict_inequalities_on_intervals(int cap);
CheckResult prop_left_right_symmetry(const FixtureSet& fixtures, int cap);
CheckResult prop_fast_path_agreement(int max_simples, int cap);

std::vector<CheckResult> run_property_suites(const FixtureSet& fixtures, int cap,
                                             std::uint64_t seed);

} // namespace quiverhom
