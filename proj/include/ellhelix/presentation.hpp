#pragma once

#include <vector>

#include "ellhelix/dimension_table.hpp"
#include "ellhelix/rational.hpp"

namespace ellhelix {

// Free algebra k<x_1..x_d> modulo the single quadratic relation
// b = sum_{i=1..d} x_i sigma(x_{d+1-i}), for an invertible change of
// generators sigma (sigma(x_j) = sum_k sigma[k][j] x_k). With sigma the
// identity the relation is x_1 x_d + x_2 x_{d-1} + ... + x_d x_1.
class QuadraticPresentation {
 public:
  explicit QuadraticPresentation(long d);  // sigma = identity
  QuadraticPresentation(long d, std::vector<std::vector<Rational>> sigma);

  long d() const { return d_; }
  const std::vector<std::vector<Rational>>& sigma() const { return sigma_; }
  // Coefficient of x_i x_k in the relation, 0-based indices.
  const Rational& relation_coeff(long i, long k) const { return rel_[i][k]; }

 private:
  long d_;
  std::vector<std::vector<Rational>> sigma_;
  std::vector<std::vector<Rational>> rel_;
};

enum class RankMode { Modular, Exact };

// Graded dimensions 0..N of the quotient algebra: entry n is d^n minus the
// rank of the span { m1 * b * m2 : |m1| + |m2| = n - 2 }. Modular mode (the
// default) computes the rank over the prime fields for 2147483647 and
// 2147483629 and requires agreement (InconclusiveRankError otherwise);
// exact mode runs fraction-free elimination over the integers.
GradedDims presentation_dims(const QuadraticPresentation& pres, long N,
                             RankMode mode = RankMode::Modular);

}  // namespace ellhelix
