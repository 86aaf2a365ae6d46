#ifndef LEDGER_ERRORS_HPP
#define LEDGER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ledger {

// Input that violates a table/config contract. CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  enum class Kind {
    missing_column,
    non_binary_group,
    single_group_only,
    out_of_range_score,
    non_binary_outcome,
    empty_table,
    empty_input,
    non_integral_counts,
    too_large,
    not_monotone,
    bad_config,
  };

  InvalidInput(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Input that is structurally valid but makes the requested quantity
// undefined (e.g. a single outcome class). CLI maps this to exit code 3.
class DegenerateInput : public std::runtime_error {
 public:
  enum class Kind {
    degenerate_outcome,
    degenerate_classifier,
    degenerate_target,
  };

  DegenerateInput(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Numerical failure inside an iterative routine.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ledger

#endif  // LEDGER_ERRORS_HPP
