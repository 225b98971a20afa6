#pragma once

#include "ellhelix/dimension_table.hpp"
#include "ellhelix/report.hpp"

namespace ellhelix {

// Collapse a 1-periodic table to the single dimension sequence
// n -> dims(i, i+n); throws PeriodicityError at the first cell where
// dims(i, j) != dims(i+1, j+1).
GradedDims hat_dims(const DimensionTable& table);

// True iff every diagonal entry dims(i, i) equals 1.
bool connected_check(const DimensionTable& table);

// Dimension-level verification that the canonical map from the
// noncommutative symmetric algebra S on a d-dimensional space to the orbit
// algebra B of the helix is injective with an explicit rank-2 structure:
//   (a) degrees 0 and 1 agree (presentation engine vs orbit table),
//   (b) the degree-2 cokernel is exactly one-dimensional,
//   (c) b_n = s_n + s_{n-2} for 2 <= n <= maxdeg (series engine vs table),
//   (d) b_j <= b_1 b_{j-1} + b_2 b_{j-2} for 3 <= j <= maxdeg,
//   (e) b_j <= d b_{j-1} for 3 <= j <= maxdeg.
// Requires d >= 2, maxdeg >= 3.
VerificationReport verify_canonical_map(long d, long maxdeg);

}  // namespace ellhelix
