#ifndef TOLFAC_SUITE_HPP_
#define TOLFAC_SUITE_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tolfac/errors.hpp"

namespace tolfac::suite {

  struct Config {
    std::string fixture_dir;
    Budget      budget;
    // largest lattice size scanned by the witness search, both signatures
    std::size_t search_max_size = 8;
    double      search_seconds  = 600.0;
  };

  struct CriterionResult {
    int         id = 0;
    std::string title;
    bool        passed = false;
    std::string detail;
    double      seconds       = 0.0;  // whole criterion
    double      timed_seconds = 0.0;  // the part held to limit_seconds
    double      limit_seconds = 0.0;
  };

  inline constexpr int criterion_count = 12;

  // Runs one criterion. BudgetExceeded propagates; every other error is a
  // failed criterion with the message as detail.
  CriterionResult run_criterion(int id, Config const& config);

  // All criteria in order; `each` sees every result as it completes.
  std::vector<CriterionResult> run_all(Config const&                                 config,
                                       std::function<void(CriterionResult const&)> const& each = {});

  // "PASS [ 3] <title> (1.23 s, limit 60 s): detail"
  std::string format_line(CriterionResult const& r);

  // Configuration from the environment: TOLFAC_FIXTURES,
  // TOLFAC_SEARCH_MAX_SIZE, TOLFAC_SEARCH_SECONDS, over the given defaults.
  Config config_from_environment(Config defaults);

}  // namespace tolfac::suite

#endif  // TOLFAC_SUITE_HPP_
