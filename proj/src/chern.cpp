#include "ellhelix/chern.hpp"

#include <stdexcept>

#include "ellhelix/errors.hpp"

namespace ellhelix {

ChernPair::ChernPair(Integer rank_, Integer degree_)
    : rank(std::move(rank_)), degree(std::move(degree_)) {
  if (rank < 1)
    throw std::domain_error("ChernPair rank must be >= 1, got " + rank.get_str());
}

std::string ChernPair::str() const {
  return "(" + rank.get_str() + ", " + degree.get_str() + ")";
}

Integer euler_pairing(const ChernPair& c1, const ChernPair& c2) {
  return c1.rank * c2.degree - c2.rank * c1.degree;
}

Rational slope(const ChernPair& c) { return Rational(c.degree, c.rank); }

namespace {
Integer checked_pairing(const ChernPair& c_i, const ChernPair& c_next) {
  Integer n = euler_pairing(c_i, c_next);
  if (n <= 1)
    throw MutationUndefinedError("mutation undefined: pairing of " + c_i.str() +
                                 " and " + c_next.str() + " is " + n.get_str() +
                                 ", need >= 2");
  return n;
}
}  // namespace

ChernPair mutate_right(const ChernPair& c_i, const ChernPair& c_next) {
  Integer n = checked_pairing(c_i, c_next);
  return ChernPair(n * c_next.rank - c_i.rank, n * c_next.degree - c_i.degree);
}

ChernPair mutate_left(const ChernPair& c_i, const ChernPair& c_next) {
  Integer n = checked_pairing(c_i, c_next);
  return ChernPair(n * c_i.rank - c_next.rank, n * c_i.degree - c_next.degree);
}

}  // namespace ellhelix
