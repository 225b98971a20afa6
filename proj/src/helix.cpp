#include "ellhelix/helix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ellhelix {

HelixWindow::HelixWindow(long base_index, std::vector<ChernPair> members, long d)
    : base_(base_index), d_(d), members_(std::move(members)) {
  if (d_ < 2) throw std::domain_error("helix pairing d must be >= 2");
  if (members_.empty()) throw std::domain_error("helix window must be nonempty");
  for (std::size_t k = 0; k + 1 < members_.size(); ++k) {
    const ChernPair& a = members_[k];
    const ChernPair& b = members_[k + 1];
    if (euler_pairing(a, b) != d_)
      throw std::domain_error("consecutive pairing of " + a.str() + ", " + b.str() +
                              " is not " + std::to_string(d_));
    // slope(a) < slope(b) without leaving exact arithmetic
    if (a.degree * b.rank >= b.degree * a.rank)
      throw std::domain_error("slopes not strictly increasing at " + a.str());
  }
  if (contains(-1) && at(-1) != ChernPair(1, 0))
    throw std::domain_error("helix window member at -1 must be (1, 0)");
  if (contains(0) && at(0) != ChernPair(Integer(1), Integer(d_)))
    throw std::domain_error("helix window member at 0 must be (1, d)");
}

const ChernPair& HelixWindow::at(long m) const {
  if (!contains(m))
    throw std::out_of_range("helix index " + std::to_string(m) + " outside window [" +
                            std::to_string(min_index()) + ", " +
                            std::to_string(max_index()) + "]");
  return members_[m - base_];
}

HelixWindow generate_helix(long d, long m_min, long m_max) {
  if (d < 2) throw std::domain_error("generate_helix requires d >= 2");
  if (m_min > -1 || m_max < 0)
    throw std::domain_error("generate_helix window must contain the seed indices -1 and 0");
  std::vector<ChernPair> right = {ChernPair(1, 0), ChernPair(Integer(1), Integer(d))};
  for (long m = 0; m < m_max; ++m)
    right.push_back(mutate_right(right[right.size() - 2], right.back()));
  std::vector<ChernPair> left;  // indices -2 down to m_min
  {
    ChernPair a = right[0], b = right[1];  // members at -1, 0
    for (long m = -2; m >= m_min; --m) {
      ChernPair prev = mutate_left(a, b);
      left.push_back(prev);
      b = a;
      a = prev;
    }
  }
  std::vector<ChernPair> members(left.rbegin(), left.rend());
  members.insert(members.end(), right.begin(), right.end());
  return HelixWindow(m_min, std::move(members), d);
}

LimitSlope limit_slope(long d) {
  if (d <= 2)
    throw std::domain_error("limit slope is defined only for d > 2 (at d = " +
                            std::to_string(d) + " the surd d^2 - 4 degenerates)");
  LimitSlope out;
  out.d = d;
  // -2d/(d-2+sqrt(d^2-4)) rationalized: (d(d-2) - d sqrt(d^2-4)) / (2(d-2))
  out.p = Integer(d) * (d - 2);
  out.q = Integer(-d);
  out.r = Integer(2) * (d - 2);
  out.radicand = Integer(d) * d - 4;
  out.value = -2.0 * d / (d - 2 + std::sqrt(static_cast<double>(d) * d - 4));
  return out;
}

Integer hom_dim(const HelixWindow& window, long i, long j) {
  const ChernPair& ci = window.at(-i);
  const ChernPair& cj = window.at(-j);
  if (i == j) return 1;
  if (i > j) return 0;
  return euler_pairing(cj, ci);
}

DimensionTable orbit_dim_table(long d, const HelixWindow& window, long maxdeg) {
  if (d != window.d())
    throw std::domain_error("orbit_dim_table d does not match the window");
  long lo = -window.max_index();
  long hi = -window.min_index();
  if (hi - lo < maxdeg)
    throw std::out_of_range("window spans " + std::to_string(hi - lo + 1) +
                            " members, too few for maxdeg " + std::to_string(maxdeg));
  DimensionTable table(lo, hi, maxdeg);
  for (long i = lo; i <= hi; ++i)
    for (long j = i; j <= hi && j - i <= maxdeg; ++j) table.set(i, j, hom_dim(window, i, j));
  return table;
}

}  // namespace ellhelix
