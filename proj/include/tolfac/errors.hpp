#ifndef TOLFAC_ERRORS_HPP_
#define TOLFAC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tolfac {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: unknown symbol, arity or size mismatch, out-of-range
  // element, signature mismatch.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // An enumeration would exceed its configured resource limit. Raised
  // instead of returning a truncated result.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // A construction failed one of its own postconditions. Never expected;
  // signals a bug in the library.
  class VerificationFailure : public Error {
   public:
    using Error::Error;
  };

  // Resource limits for exhaustive enumerations.
  struct Budget {
    // largest universe for which tolerances are enumerated
    std::size_t max_size = 128;
    // largest number of tolerances produced for a single algebra
    std::size_t max_tolerances = 2'000'000;

    static Budget unlimited() {
      return Budget{static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)};
    }
  };

}  // namespace tolfac

#endif  // TOLFAC_ERRORS_HPP_
