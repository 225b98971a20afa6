#pragma once

#include <cstdint>
#include <vector>

#include "ellhelix/rational.hpp"

namespace ellhelix {

// Rank of a dense matrix over the prime field F_p, p < 2^31. Entries must
// already be reduced mod p. Destroys its copy of the matrix.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

// Exact rank over the integers (equivalently over the rationals) by
// fraction-free Bareiss elimination with divisions that stay exact.
std::size_t rank_exact(std::vector<std::vector<Integer>> rows);

// Exact rank of a rational matrix: rows are scaled to integers first.
std::size_t rank_exact(const std::vector<std::vector<Rational>>& rows);

std::uint32_t mod_p(const Integer& v, std::uint32_t p);
// value = num/den mod p; throws std::domain_error when p divides den.
std::uint32_t mod_p(const Rational& v, std::uint32_t p);

}  // namespace ellhelix
