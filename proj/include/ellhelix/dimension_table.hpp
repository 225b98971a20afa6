#pragma once

#include <vector>

#include "ellhelix/rational.hpp"

namespace ellhelix {

// Graded dimensions of a positively graded Z-algebra over an index window:
// one natural number per pair lo <= i <= j <= hi with j - i <= maxdeg.
// Components with i > j do not exist (positive grading), and are not stored.
// An inverted window (lo > hi) is the empty table with no cells at all.
class DimensionTable {
 public:
  DimensionTable(long lo, long hi, long maxdeg);

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  long maxdeg() const { return maxdeg_; }

  bool in_domain(long i, long j) const {
    return lo_ <= i && i <= j && j <= hi_ && j - i <= maxdeg_;
  }
  // Throws std::out_of_range outside the domain.
  const Integer& dim(long i, long j) const;
  void set(long i, long j, Integer v);

 private:
  long lo_, hi_, maxdeg_;
  std::vector<std::vector<Integer>> rows_;  // rows_[i-lo][j-i]
  std::size_t row_len(long i) const;
};

// Graded dimension list, index = degree; entry 0 is 1 for the unital
// algebras produced here.
using GradedDims = std::vector<Integer>;

}  // namespace ellhelix
