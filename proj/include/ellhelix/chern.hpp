#pragma once

#include <string>

#include "ellhelix/rational.hpp"

namespace ellhelix {

// (rank, degree) class of a vector bundle on an elliptic curve.
struct ChernPair {
  Integer rank;    // >= 1
  Integer degree;

  ChernPair(Integer rank_, Integer degree_);
  ChernPair(long rank_, long degree_) : ChernPair(Integer(rank_), Integer(degree_)) {}

  friend bool operator==(const ChernPair& a, const ChernPair& b) {
    return a.rank == b.rank && a.degree == b.degree;
  }
  friend bool operator!=(const ChernPair& a, const ChernPair& b) { return !(a == b); }

  std::string str() const;
};

// Antisymmetric Euler form chi(c1, c2) = rank(c1) degree(c2) - rank(c2) degree(c1).
// On an elliptic curve this is chi(Hom(E1, E2)).
Integer euler_pairing(const ChernPair& c1, const ChernPair& c2);

// degree/rank in lowest terms.
Rational slope(const ChernPair& c);

// K-theory shadow of the Euler sequence 0 -> E_i -> Hom(E_i,E_next)* (x) E_next
// -> E_{i+2} -> 0: returns n*c_next - c_i with n the pairing. Requires n >= 2;
// n <= 1 throws MutationUndefinedError (at n = 1 the formal result can have
// rank 0, e.g. for the classes of O(p) and O_p).
ChernPair mutate_right(const ChernPair& c_i, const ChernPair& c_next);

// Leftward counterpart: returns n*c_i - c_next with n the pairing, the class
// completing (result, c_i, c_next) to consecutive helix members.
ChernPair mutate_left(const ChernPair& c_i, const ChernPair& c_next);

}  // namespace ellhelix
