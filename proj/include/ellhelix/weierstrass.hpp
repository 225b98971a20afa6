#pragma once

#include <array>
#include <vector>

#include "ellhelix/poly.hpp"
#include "ellhelix/report.hpp"

namespace ellhelix {

// Smooth curve y^2 = x^3 + ax + b; construction rejects singular parameters.
struct CurveParams {
  Rational a, b;
  CurveParams(Rational a_, Rational b_);
  // 4a^3 + 27b^2, nonzero by the invariant.
  Rational nonsingularity() const;
};

// Function f(x) + g(x) y on the curve, the canonical form after reducing
// y^2 to x^3 + ax + b. At the point at infinity x has a pole of order 2 and
// y of order 3, so the pole order is max(2 deg f, 3 + 2 deg g).
struct CurveFunction {
  Poly f, g;

  bool is_zero() const { return f.is_zero() && g.is_zero(); }
  // Throws std::domain_error on the zero function.
  long pole_order() const;

  static CurveFunction one() { return {Poly::constant(1), Poly()}; }
  static CurveFunction x_power(std::size_t i) { return {Poly::monomial(1, i), Poly()}; }
  static CurveFunction y_x_power(std::size_t j) { return {Poly(), Poly::monomial(1, j)}; }

  friend bool operator==(const CurveFunction& u, const CurveFunction& v) {
    return u.f == v.f && u.g == v.g;
  }
  friend bool operator!=(const CurveFunction& u, const CurveFunction& v) {
    return !(u == v);
  }
  std::string str() const;
};

CurveFunction add(const CurveFunction& u, const CurveFunction& v);
// Product in canonical form; pole orders add for nonzero inputs.
CurveFunction multiply(const CurveFunction& u, const CurveFunction& v,
                       const CurveParams& params);

// Basis of the sections with pole order at most 2n at infinity:
// {x^i : 0 <= i <= n} and {x^j y : 0 <= j <= n-2}, listed by pole order.
// Length 2n for n >= 1, length 1 for n = 0.
std::vector<CurveFunction> section_basis(long n);

// The section algebra B_n = H^0(O(2n p)) with precomputed bases up to maxdeg.
class GradedSectionAlgebra {
 public:
  GradedSectionAlgebra(CurveParams params, long maxdeg);
  const CurveParams& params() const { return params_; }
  long maxdeg() const { return maxdeg_; }
  const std::vector<CurveFunction>& basis(long n) const;

 private:
  CurveParams params_;
  long maxdeg_;
  std::vector<std::vector<CurveFunction>> bases_;
};

// Rank checks that degree 1 and 2 generate: B_1 B_{n-1} = B_n for
// 3 <= n <= maxdeg, and B_1 B_1 has codimension 1 in B_2 with complement
// spanned by y. Requires maxdeg >= 3.
VerificationReport verify_generation(const CurveParams& params, long maxdeg);

// Rank checks of the direct sum B_n = S_n (+) y S_{n-2} for 2 <= n <= maxdeg,
// where S_n is the span of the degree-n monomials in the degree-1 sections
// {1, x}. Requires maxdeg >= 2.
VerificationReport verify_decomposition(const CurveParams& params, long maxdeg);

// y^2 written in the basis {u^4, u^3 v, u^2 v^2, u v^3, v^4} of S_4 with
// u = 1 and v = x: a binary quartic with distinct roots on a smooth curve.
struct CoverRelation {
  // coeffs[k] multiplies u^{4-k} v^k
  std::array<Rational, 5> coeffs;
  Rational discriminant() const;
};

CoverRelation find_cover_relation(const CurveParams& params);

}  // namespace ellhelix
