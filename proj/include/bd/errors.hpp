#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bd {

// Every recoverable failure in the library carries one of these codes.
// The CLI maps them onto process exit codes (see tools/bdx0.cpp).
enum class Errc {
  inadmissible_rule,
  bad_interval,
  unknown_gamma,
  bad_n,
  bad_k,
  non_successive_intervals,
  rank_mismatch,
  age_exhausted,
  bad_base_rank,
  budget_exceeded,
  bad_input,
  hypothesis_violated,
  not_skipped,
  not_normalized,
  config,
  parse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised when an enumeration would exceed its budget; carries the exact
// cardinality that was requested.
class BudgetError : public Error {
 public:
  BudgetError(const mpz_class& count, const std::string& what)
      : Error(Errc::budget_exceeded, what + " (exact count " + count.get_str() + ")"),
        count_(count) {}

  const mpz_class& count() const { return count_; }

 private:
  mpz_class count_;
};

}  // namespace bd
