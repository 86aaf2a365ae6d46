#ifndef LEDGER_TABLE_HPP
#define LEDGER_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ledger/errors.hpp"

namespace ledger {

enum class OutcomeKind { binary, continuous };

// One aligned empirical joint distribution of (Y, G, Z) plus optional
// predicted classes and features. Immutable after validation; every
// downstream quantity is a pure function of it.
//
// Conventions fixed here and used everywhere else:
//   - groups are {0,1}; all signed gaps are "group 1 minus group 0";
//   - binary mode requires y in {0,1} and z in [0,1];
//   - no missing values: rows with gaps are rejected upstream, never imputed.
struct AuditTable {
  std::vector<double> y;
  std::vector<int> g;
  std::vector<double> z;
  std::vector<int> yhat;                     // empty when absent
  std::vector<std::vector<double>> x;        // column-major; empty when absent
  std::vector<std::string> feature_names;    // aligned to x
  OutcomeKind outcome_kind = OutcomeKind::binary;

  std::size_t n() const { return y.size(); }
  bool has_yhat() const { return !yhat.empty(); }
  bool has_features() const { return !x.empty(); }
};

// Raw, unvalidated column data as produced by an ingestion layer.
struct RawTable {
  std::vector<double> y;
  std::vector<double> g;
  std::vector<double> z;
  std::vector<double> yhat;                  // optional
  std::vector<std::vector<double>> x;        // optional, column-major
  std::vector<std::string> feature_names;
};

// Checks every AuditTable invariant and returns the validated table with
// row order preserved. Throws InvalidInput on violations:
//   empty_table, non_binary_group, single_group_only,
//   out_of_range_score (binary z outside [0,1]),
//   non_binary_outcome (binary y outside {0,1}).
// Validation is idempotent: re-validating a valid table is the identity.
AuditTable validate_table(const RawTable& raw, OutcomeKind kind);

// The 4-row hand-checkable fixture: rows (z, y, g) =
// (0.0,0,0), (0.5,0,0), (0.5,1,1), (1.0,1,1).
// Exactly globally calibrated: within each distinct z, mean(y) = z.
AuditTable fixture_t4();

// The 10-row classifier fixture. Yhat=1 rows carry (y,g) =
// (1,1),(1,1),(1,0),(0,0); Yhat=0 rows (1,1),(0,0),(0,0),(0,0),(0,1),(0,0).
AuditTable fixture_c10();

}  // namespace ledger

#endif  // LEDGER_TABLE_HPP
