#pragma once

/**
 * @file verify.hpp
 * @brief Named property suites exercising every structural claim the
 * library makes, runnable from the CLI (`verify`) and from the acceptance
 * binary. Suites are deterministic: fixed seeds, ordered output.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jsub/series.hpp"

namespace jsub {

struct SuiteResult {
  std::string name;
  bool passed;
  std::size_t checks;  // individual assertions evaluated
  double millis;
  std::string detail;  // failure samples or informational notes
};

struct Suite {
  std::string name;
  int criterion;  // acceptance criterion number; 0 for extra suites
  std::string summary;
  SuiteResult (*run)();
};

/// All suites in acceptance order (criterion 1..14, then extras).
const std::vector<Suite>& all_suites();
/// nullptr when no suite has that name.
const Suite* find_suite(const std::string& name);

/// One line per suite: "PASS <name> ..." / "FAIL <name> ...".
std::string format_result_line(const SuiteResult& r, int criterion);

// Deterministic random generators shared with the test suites.
Value random_value(const Ring& ring, std::mt19937_64& rng);
Value random_nonzero_value(const Ring& ring, std::mt19937_64& rng);
/// zero_percent of the coefficients are forced to zero so composed
/// series keep a realistic mix of sparsity.
Series random_series(const Ring& ring, std::size_t precision,
                     std::mt19937_64& rng, unsigned zero_percent = 35);
/// Random element of depth >= n (first n coefficients zero).
Series random_series_deep(const Ring& ring, std::size_t precision,
                          std::size_t n, std::mt19937_64& rng);

}  // namespace jsub
