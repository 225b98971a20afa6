#include "ellhelix/dimension_table.hpp"

#include <stdexcept>
#include <string>

namespace ellhelix {

namespace {
std::string cell_name(long i, long j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}
}  // namespace

DimensionTable::DimensionTable(long lo, long hi, long maxdeg)
    : lo_(lo), hi_(hi), maxdeg_(maxdeg) {
  if (maxdeg < 0) throw std::domain_error("dimension table maxdeg must be >= 0");
  if (lo > hi) return;  // empty window, no cells
  rows_.resize(hi - lo + 1);
  for (long i = lo_; i <= hi_; ++i) rows_[i - lo_].resize(row_len(i));
}

std::size_t DimensionTable::row_len(long i) const {
  return static_cast<std::size_t>(std::min(hi_ - i, maxdeg_) + 1);
}

const Integer& DimensionTable::dim(long i, long j) const {
  if (!in_domain(i, j))
    throw std::out_of_range("dimension table has no cell " + cell_name(i, j));
  return rows_[i - lo_][j - i];
}

void DimensionTable::set(long i, long j, Integer v) {
  if (!in_domain(i, j))
    throw std::out_of_range("dimension table has no cell " + cell_name(i, j));
  if (v < 0) throw std::domain_error("dimension must be >= 0");
  rows_[i - lo_][j - i] = std::move(v);
}

}  // namespace ellhelix
