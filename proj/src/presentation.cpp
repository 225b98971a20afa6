#include "ellhelix/presentation.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "ellhelix/errors.hpp"
#include "ellhelix/linalg.hpp"

namespace ellhelix {

namespace {
constexpr std::uint32_t kPrimes[2] = {2147483647u, 2147483629u};
constexpr std::size_t kMaxMatrixEntries = 250'000'000;
}  // namespace

QuadraticPresentation::QuadraticPresentation(long d)
    : QuadraticPresentation(d, [d] {
        std::vector<std::vector<Rational>> id(d, std::vector<Rational>(d));
        for (long k = 0; k < d; ++k) id[k][k] = Rational(1);
        return id;
      }()) {}

QuadraticPresentation::QuadraticPresentation(long d,
                                             std::vector<std::vector<Rational>> sigma)
    : d_(d), sigma_(std::move(sigma)) {
  if (d_ < 1) throw std::domain_error("presentation needs at least one generator");
  if (sigma_.size() != static_cast<std::size_t>(d_))
    throw std::domain_error("sigma must be a d x d matrix");
  for (const auto& row : sigma_)
    if (row.size() != static_cast<std::size_t>(d_))
      throw std::domain_error("sigma must be a d x d matrix");
  if (rank_exact(sigma_) != static_cast<std::size_t>(d_))
    throw std::domain_error("sigma must be invertible");
  // b = sum_i x_i sigma(x_{d+1-i}); coefficient of x_i x_k is sigma[k][d+1-i]
  rel_.assign(d_, std::vector<Rational>(d_));
  bool nonzero = false;
  for (long i = 0; i < d_; ++i)
    for (long k = 0; k < d_; ++k) {
      rel_[i][k] = sigma_[k][d_ - 1 - i];
      nonzero = nonzero || !rel_[i][k].is_zero();
    }
  if (!nonzero) throw std::domain_error("relation is zero");
}

namespace {

// Sparse row template for m1 * b * m2: at most d*d nonzero columns.
struct SparseRow {
  std::vector<std::pair<std::size_t, const Rational*>> entries;
};

// Rows spanning the degree-n piece of the two-sided ideal (b), in
// (deglex m1, deglex m2) order; columns index length-n words numerically
// (degree-lex with x_1 < ... < x_d).
std::vector<SparseRow> ideal_rows(const QuadraticPresentation& pres, long n) {
  const std::size_t d = static_cast<std::size_t>(pres.d());
  std::vector<SparseRow> rows;
  for (long a = 0; a + 2 <= n; ++a) {
    const long c = n - 2 - a;
    std::size_t m1_count = 1, m2_count = 1;
    for (long k = 0; k < a; ++k) m1_count *= d;
    for (long k = 0; k < c; ++k) m2_count *= d;
    for (std::size_t m1 = 0; m1 < m1_count; ++m1)
      for (std::size_t m2 = 0; m2 < m2_count; ++m2) {
        SparseRow row;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t k = 0; k < d; ++k) {
            const Rational& coeff = pres.relation_coeff(i, k);
            if (coeff.is_zero()) continue;
            std::size_t col = ((m1 * d + i) * d + k) * m2_count + m2;
            row.entries.emplace_back(col, &coeff);
          }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

std::size_t ideal_rank_modular(const std::vector<SparseRow>& sparse, std::size_t ncols) {
  std::size_t agreed = 0;
  for (int which = 0; which < 2; ++which) {
    const std::uint32_t p = kPrimes[which];
    std::vector<std::vector<std::uint32_t>> dense(
        sparse.size(), std::vector<std::uint32_t>(ncols, 0));
    for (std::size_t r = 0; r < sparse.size(); ++r)
      for (const auto& [col, coeff] : sparse[r].entries)
        dense[r][col] = static_cast<std::uint32_t>(
            (dense[r][col] + mod_p(*coeff, p)) % p);
    std::size_t rank = rank_mod_p(std::move(dense), p);
    if (which == 0)
      agreed = rank;
    else if (rank != agreed)
      throw InconclusiveRankError(
          "modular ranks disagree (" + std::to_string(agreed) + " vs " +
          std::to_string(rank) + "); rerun in exact mode");
  }
  return agreed;
}

std::size_t ideal_rank_exact(const std::vector<SparseRow>& sparse, std::size_t ncols) {
  Integer scale = 1;
  for (const auto& row : sparse)
    for (const auto& [col, coeff] : row.entries) scale = lcm(scale, coeff->den());
  std::vector<std::vector<Integer>> dense(sparse.size(), std::vector<Integer>(ncols, 0));
  for (std::size_t r = 0; r < sparse.size(); ++r)
    for (const auto& [col, coeff] : sparse[r].entries)
      dense[r][col] += coeff->num() * (scale / coeff->den());
  return rank_exact(std::move(dense));
}

}  // namespace

GradedDims presentation_dims(const QuadraticPresentation& pres, long N, RankMode mode) {
  if (N < 0) throw std::domain_error("presentation_dims needs N >= 0");
  const long d = pres.d();
  GradedDims dims;
  dims.reserve(N + 1);
  Integer full = 1;  // d^n
  for (long n = 0; n <= N; ++n, full *= d) {
    if (n < 2) {
      dims.push_back(full);
      continue;
    }
    if (!full.fits_ulong_p())
      throw std::length_error("free algebra degree " + std::to_string(n) + " too large");
    const std::size_t ncols = full.get_ui();
    std::size_t nrows = static_cast<std::size_t>(n - 1);  // (n-1) * d^(n-2)
    for (long k = 0; k + 2 < n; ++k) nrows *= d;
    if (ncols != 0 && nrows > kMaxMatrixEntries / ncols)
      throw std::length_error("presentation matrix for degree " + std::to_string(n) +
                              " exceeds the size limit");
    auto sparse = ideal_rows(pres, n);
    std::size_t rank = mode == RankMode::Modular ? ideal_rank_modular(sparse, ncols)
                                                 : ideal_rank_exact(sparse, ncols);
    dims.push_back(full - static_cast<unsigned long>(rank));
  }
  return dims;
}

}  // namespace ellhelix
