#pragma once

#include <stdexcept>
#include <string>

namespace ellhelix {

// Power series expansion requested for a denominator with zero constant term.
struct InvalidSeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

// Mutation attempted on a pair whose pairing is below 2; the mutation
// formula is only meaningful when the pairing is at least 2.
struct MutationUndefinedError : std::domain_error {
  using std::domain_error::domain_error;
};

// A dimension table failed the 1-periodicity check dims(i,j) == dims(i+1,j+1).
// Carries the first offending cell (i,j).
struct PeriodicityError : std::runtime_error {
  long i, j;
  PeriodicityError(long i_, long j_)
      : std::runtime_error("dimension table is not 1-periodic at (" +
                           std::to_string(i_) + ", " + std::to_string(j_) +
                           ") vs (" + std::to_string(i_ + 1) + ", " +
                           std::to_string(j_ + 1) + ")"),
        i(i_), j(j_) {}
};

// The two modular rank computations disagreed, so no rank can be reported.
struct InconclusiveRankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ellhelix
