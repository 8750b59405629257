#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cofin/report.hpp"
#include "cofin/upset.hpp"

namespace cofin::checks {

// Documented oracle window: 4 * lcm(periods) + max(thresholds). Large enough
// that eventual periodicity of every argument has stabilized.
std::uint64_t stabilization_window(std::initializer_list<UpSet> sets);

// The numbered verification suites. Each returns a per-item pass/fail report;
// parameters default to the sizes the acceptance gate runs with.
Report finite_universe_suite();                                        // 1
Report fin_adjunction(unsigned n);                                     //   `check clu1 n`
Report cofinite_characterization(std::uint64_t seed, int corpus = 200);  // 2 (acont)
Report coinfinite_ideal_suite(std::uint64_t seed);                     // 3 (ldn)
Report successor_ideal_suite(std::uint64_t seed);                      // 4 (sigma)
Report extent_suite(std::uint64_t seed);                               // 5 (extcof)
Report density_equivalence_suite(std::uint64_t seed);                  // 6 (fdn)
Report derived_rule_suite(std::uint64_t seed);                         // 7 (rules)
Report monoid_suite(std::uint64_t seed);                               // 8 (monoid)

std::vector<Report> run_all(std::uint64_t seed);

// Lookup by CLI suite name ("clu1", "acont", "ldn", "sigma", "extcof", "fdn",
// "rules", "monoid"); throws DomainError for unknown names.
Report run_suite(const std::string& name, std::uint64_t arg, std::uint64_t seed);

}  // namespace cofin::checks
