#ifndef LEDGER_BINNING_HPP
#define LEDGER_BINNING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ledger/errors.hpp"

namespace ledger {

enum class BinStrategy { equal_frequency, equal_width, distinct_values };

enum class BinTarget { score, outcome };

struct BinningSpec {
  BinStrategy strategy = BinStrategy::equal_frequency;
  std::size_t count = 20;
  BinTarget applied_to = BinTarget::score;

  static BinningSpec distinct(BinTarget target = BinTarget::score) {
    return BinningSpec{BinStrategy::distinct_values, 0, target};
  }
  static BinningSpec equal_freq(std::size_t count,
                                BinTarget target = BinTarget::score) {
    return BinningSpec{BinStrategy::equal_frequency, count, target};
  }
  static BinningSpec equal_width(std::size_t count,
                                 BinTarget target = BinTarget::score) {
    return BinningSpec{BinStrategy::equal_width, count, target};
  }
};

std::string to_string(BinStrategy s);
std::string to_string(const BinningSpec& spec);

// Result of assigning rows to conditioning cells. Cell ids are consecutive,
// 0-based, ordered by cell value: every nonempty cell appears.
struct CellAssignment {
  std::vector<std::size_t> cell_of_row;
  std::size_t n_cells = 0;
  // Lower edge of each cell (for distinct-values: the value itself).
  std::vector<double> lower_edges;
};

// Partitions `values` into conditioning cells.
//
// Guarantees:
//   - every row lands in exactly one cell; ids consecutive, no empty cells;
//   - rows with identical values always share a cell (ties never split);
//   - equal-frequency cells differ in size by at most 1 before tie merging:
//     quantile edges are computed first, cells whose edges coincide are
//     merged, so identical values never straddle a boundary;
//   - distinct-values makes one cell per unique value.
// Degenerate inputs collapse to fewer cells; count >= 1 is required.
CellAssignment bin_assign(const std::vector<double>& values,
                          const BinningSpec& spec);

}  // namespace ledger

#endif  // LEDGER_BINNING_HPP
