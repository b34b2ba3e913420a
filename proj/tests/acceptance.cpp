#include <iostream>

#include "tolfac/suite.hpp"

int main() {
  using namespace tolfac::suite;
  Config defaults;
  defaults.fixture_dir = TOLFAC_FIXTURE_DIR;
  auto const config = config_from_environment(defaults);
  std::cout << "acceptance: fixtures " << config.fixture_dir << ", witness search up to size "
            << config.search_max_size << "\n";
  int failed = 0;
  try {
    run_all(config, [&](CriterionResult const& r) {
      std::cout << format_line(r) << std::endl;
      failed += r.passed ? 0 : 1;
    });
  } catch (tolfac::BudgetExceeded const& e) {
    std::cout << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
  std::cout << (criterion_count - failed) << "/" << criterion_count << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
