#include "ellhelix/series.hpp"

#include <stdexcept>

#include "ellhelix/errors.hpp"

namespace ellhelix {

RationalSeries::RationalSeries(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

RationalSeries::RationalSeries(const RationalSeries& o) : num_(o.num_), den_(o.den_) {
  std::lock_guard<std::mutex> lock(o.mu_);
  cache_ = o.cache_;
}

void RationalSeries::ensure(std::size_t n) const {
  if (den_.coeff(0).is_zero())
    throw InvalidSeriesError("series denominator has zero constant term: " + den_.str());
  const Rational& q0 = den_.coeff(0);
  while (cache_.size() <= n) {
    std::size_t k = cache_.size();
    // q0*c_k = p_k - sum_{j=1..deg den} q_j c_{k-j}
    Rational acc = num_.coeff(k);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(den_.degree()) && j <= k; ++j)
      acc -= den_.coeff(j) * cache_[k - j];
    cache_.push_back(acc / q0);
  }
}

Rational RationalSeries::coefficient(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(n);
  return cache_[n];
}

std::vector<Rational> expand(const RationalSeries& series, long N) {
  if (N < 0) throw std::domain_error("expansion order must be nonnegative");
  std::vector<Rational> out(static_cast<std::size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) out[n] = series.coefficient(n);
  return out;
}

std::vector<Rational> recurrence_solve(long d, const Rational& a0,
                                       const Rational& a1, long N) {
  if (N < 1) throw std::domain_error("recurrence needs N >= 1");
  std::vector<Rational> out;
  out.reserve(N + 1);
  out.push_back(a0);
  out.push_back(a1);
  for (long n = 1; n < N; ++n) out.push_back(Rational(d) * out[n] - out[n - 1]);
  return out;
}

namespace {
Poly helix_denominator(long d) {
  // 1 - d t + t^2
  return Poly({Rational(1), Rational(-d), Rational(1)});
}
}  // namespace

std::vector<Rational> snc_hilbert(long d, long N) {
  if (d < 2) throw std::domain_error("snc_hilbert requires d >= 2");
  return expand(RationalSeries(Poly::constant(1), helix_denominator(d)), N);
}

std::vector<Rational> orbit_hilbert(long d, long N) {
  if (d < 2) throw std::domain_error("orbit_hilbert requires d >= 2");
  Poly num({Rational(1), Rational(0), Rational(1)});
  return expand(RationalSeries(num, helix_denominator(d)), N);
}

}  // namespace ellhelix
