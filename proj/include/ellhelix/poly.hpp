#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellhelix/rational.hpp"

namespace ellhelix {

// Univariate polynomial over Rational, coefficients stored lowest degree
// first with no trailing zero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Coefficient of t^k; zero beyond the degree.
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  Rational eval(const Rational& x) const;
  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
  void normalize();
};

}  // namespace ellhelix
