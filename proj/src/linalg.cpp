#include "ellhelix/linalg.hpp"

#include <stdexcept>

namespace ellhelix {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t v, std::uint64_t p) { return pow_mod(v, p - 2, p); }

}  // namespace

std::uint32_t mod_p(const Integer& v, std::uint32_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_p(const Rational& v, std::uint32_t p) {
  std::uint32_t den = mod_p(v.den(), p);
  if (den == 0)
    throw std::domain_error("denominator divisible by modulus " + std::to_string(p));
  std::uint64_t num = mod_p(v.num(), p);
  return static_cast<std::uint32_t>(num * inv_mod(den, p) % p);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = inv_mod(rows[rank][col], p);
    auto& prow = rows[rank];
    for (std::size_t c = col; c < ncols; ++c)
      prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      // row += (p - f) * prow == row - f * prow (mod p); the products stay
      // below 2^62 so a single reduction per entry suffices
      const std::uint64_t g = p - rows[i][col];
      auto& row = rows[i];
      for (std::size_t c = col; c < ncols; ++c)
        row[c] = static_cast<std::uint32_t>((row[c] + g * prow[c]) % p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    // pivot with smallest magnitude to curb entry growth
    std::size_t piv = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (piv == rows.size() ||
          mpz_cmpabs(rows[i][col].get_mpz_t(), rows[piv][col].get_mpz_t()) < 0)
        piv = i;
    }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto& prow = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& row = rows[i];
      if (row[col] == 0) {
        // still rescale so the Sylvester-identity division below stays exact
        for (std::size_t c = col + 1; c < ncols; ++c)
          if (row[c] != 0) row[c] = row[c] * prow[col] / prev;
        continue;
      }
      for (std::size_t c = col + 1; c < ncols; ++c)
        row[c] = (prow[col] * row[c] - row[col] * prow[c]) / prev;
      row[col] = 0;
    }
    prev = prow[col];
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Integer>> scaled(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer l = 1;
    for (const auto& v : rows[i]) l = lcm(l, v.den());
    scaled[i].reserve(rows[i].size());
    for (const auto& v : rows[i]) scaled[i].push_back(v.num() * (l / v.den()));
  }
  return rank_exact(std::move(scaled));
}

}  // namespace ellhelix
