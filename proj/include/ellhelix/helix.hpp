#pragma once

#include <vector>

#include "ellhelix/chern.hpp"
#include "ellhelix/dimension_table.hpp"

namespace ellhelix {

// Finite window of the helix through (1,0) at index -1 and (1,d) at index 0.
// Invariants, checked at construction: consecutive pairing is d everywhere,
// slopes strictly increase, and the seed values hold wherever the seed
// indices fall inside the window.
class HelixWindow {
 public:
  HelixWindow(long base_index, std::vector<ChernPair> members, long d);

  long d() const { return d_; }
  long min_index() const { return base_; }
  long max_index() const { return base_ + static_cast<long>(members_.size()) - 1; }
  bool contains(long m) const { return m >= min_index() && m <= max_index(); }
  std::size_t size() const { return members_.size(); }
  // Throws std::out_of_range when m is outside the window.
  const ChernPair& at(long m) const;

 private:
  long base_, d_;
  std::vector<ChernPair> members_;
};

// Window of the unique helix with consecutive pairing d seeded by
// pairs[-1] = (1,0), pairs[0] = (1,d), extended by mutation to cover
// [m_min, m_max]. Requires d >= 2, m_min <= -1, m_max >= 0.
HelixWindow generate_helix(long d, long m_min, long m_max);

// theta_d = -2d/(d-2+sqrt(d^2-4)), the limit of the slopes as the index goes
// to minus infinity, as a double together with the exact surd
// (p + q*sqrt(radicand))/r.
struct LimitSlope {
  long d;
  Integer p, q, r;
  Integer radicand;  // d^2 - 4
  double value;
};

// Requires d > 2; the limit formula is defined only there (d = 2 makes the
// surd degenerate).
LimitSlope limit_slope(long d);

// Dimension of Hom(E_{-j}, E_{-i}), the (i,j) component of the orbit algebra:
// 1 on the diagonal, 0 below it, and the Euler pairing chi(E_{-j}, E_{-i})
// above it (Ext^1 vanishes when slopes strictly increase, so chi = dim Hom).
// Requires -i and -j inside the window.
Integer hom_dim(const HelixWindow& window, long i, long j);

// Full orbit-algebra dimension table over the window's index reflection,
// cells (i,j) with j - i <= maxdeg. The table depends only on d, not on any
// choice of point on the curve. Requires the window to span at least
// maxdeg + 1 members.
DimensionTable orbit_dim_table(long d, const HelixWindow& window, long maxdeg);

}  // namespace ellhelix
