#pragma once

#include <mutex>
#include <vector>

#include "ellhelix/poly.hpp"

namespace ellhelix {

// Formal power series given as numerator/denominator; coefficients are
// computed on demand from the linear recurrence the denominator imposes
// and memoized. Expansion requires a nonzero constant term in the
// denominator.
class RationalSeries {
 public:
  RationalSeries(Poly numerator, Poly denominator);
  RationalSeries(const RationalSeries& o);
  RationalSeries& operator=(const RationalSeries&) = delete;

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  // Coefficient of t^n; throws InvalidSeriesError when the denominator has
  // zero constant term.
  Rational coefficient(std::size_t n) const;

 private:
  Poly num_, den_;
  mutable std::mutex mu_;
  mutable std::vector<Rational> cache_;
  void ensure(std::size_t n) const;  // caller holds mu_
};

// First N+1 coefficients c_0..c_N. N < 0 is a domain error.
std::vector<Rational> expand(const RationalSeries& series, long N);

// a_0 = a0, a_1 = a1, a_{n+1} = d*a_n - a_{n-1}; returns a_0..a_N, N >= 1.
std::vector<Rational> recurrence_solve(long d, const Rational& a0,
                                       const Rational& a1, long N);

// Coefficients 0..N of 1/(1 - d t + t^2), the graded dimensions of the
// noncommutative symmetric algebra on a d-dimensional space. Requires d >= 2.
std::vector<Rational> snc_hilbert(long d, long N);

// Coefficients 0..N of (1 + t^2)/(1 - d t + t^2), the orbit algebra
// dimensions hat b_n. Requires d >= 2.
std::vector<Rational> orbit_hilbert(long d, long N);

}  // namespace ellhelix
