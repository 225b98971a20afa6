#include "ellhelix/weierstrass.hpp"

#include <stdexcept>
#include <string>

#include "ellhelix/linalg.hpp"

namespace ellhelix {

CurveParams::CurveParams(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (nonsingularity().is_zero())
    throw std::domain_error("singular curve: 4a^3 + 27b^2 = 0 at a = " + a.str() +
                            ", b = " + b.str());
}

Rational CurveParams::nonsingularity() const {
  return Rational(4) * a * a * a + Rational(27) * b * b;
}

long CurveFunction::pole_order() const {
  if (is_zero()) throw std::domain_error("the zero function has no pole order");
  long order = -1;
  if (!f.is_zero()) order = 2 * f.degree();
  if (!g.is_zero()) order = std::max(order, 3 + 2 * g.degree());
  return order;
}

std::string CurveFunction::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!f.is_zero()) out += f.str("x");
  if (!g.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "(" + g.str("x") + ")*y";
  }
  return out;
}

CurveFunction add(const CurveFunction& u, const CurveFunction& v) {
  return {u.f + v.f, u.g + v.g};
}

CurveFunction multiply(const CurveFunction& u, const CurveFunction& v,
                       const CurveParams& params) {
  // (f1 + g1 y)(f2 + g2 y) = f1 f2 + g1 g2 (x^3 + ax + b) + (f1 g2 + g1 f2) y
  Poly w({params.b, params.a, Rational(0), Rational(1)});
  return {u.f * v.f + u.g * v.g * w, u.f * v.g + u.g * v.f};
}

std::vector<CurveFunction> section_basis(long n) {
  if (n < 0) throw std::domain_error("section_basis needs n >= 0");
  std::vector<CurveFunction> basis;
  for (long order = 0; order <= 2 * n; ++order) {
    if (order % 2 == 0)
      basis.push_back(CurveFunction::x_power(order / 2));
    else if (order >= 3)
      basis.push_back(CurveFunction::y_x_power((order - 3) / 2));
  }
  return basis;
}

GradedSectionAlgebra::GradedSectionAlgebra(CurveParams params, long maxdeg)
    : params_(std::move(params)), maxdeg_(maxdeg) {
  if (maxdeg_ < 0) throw std::domain_error("section algebra needs maxdeg >= 0");
  bases_.reserve(maxdeg_ + 1);
  for (long n = 0; n <= maxdeg_; ++n) bases_.push_back(section_basis(n));
}

const std::vector<CurveFunction>& GradedSectionAlgebra::basis(long n) const {
  if (n < 0 || n > maxdeg_)
    throw std::out_of_range("no basis stored for degree " + std::to_string(n));
  return bases_[n];
}

namespace {

// Coordinates in section_basis(n): pole orders fill 0,2,3,...,2n, so the
// basis position of pole order P is P-1 except at P=0.
std::vector<Rational> coords(const CurveFunction& u, long n) {
  if (u.f.degree() > n || (!u.g.is_zero() && u.g.degree() > n - 2))
    throw std::logic_error("function does not lie in degree " + std::to_string(n));
  std::vector<Rational> row(n >= 1 ? 2 * n : 1);
  auto pos = [](long order) { return order == 0 ? 0 : order - 1; };
  for (long i = 0; i <= u.f.degree(); ++i) row[pos(2 * i)] = u.f.coeff(i);
  for (long j = 0; j <= u.g.degree(); ++j) row[pos(2 * j + 3)] = u.g.coeff(j);
  return row;
}

}  // namespace

VerificationReport verify_generation(const CurveParams& params, long maxdeg) {
  if (maxdeg < 3) throw std::domain_error("verify_generation requires maxdeg >= 3");
  GradedSectionAlgebra alg(params, maxdeg);
  VerificationReport report;

  // degree 2: products of degree-1 sections miss exactly the line through y
  std::vector<std::vector<Rational>> rows;
  for (const auto& u : alg.basis(1))
    for (const auto& v : alg.basis(1)) rows.push_back(coords(multiply(u, v, params), 2));
  std::size_t r = rank_exact(rows);
  report.add("B1*B1 has codimension 1 in B2", r == 3, "3", std::to_string(r));
  rows.push_back(coords(CurveFunction::y_x_power(0), 2));
  r = rank_exact(rows);
  report.add("y spans the complement of B1*B1 in B2", r == 4, "4", std::to_string(r));

  for (long n = 3; n <= maxdeg; ++n) {
    rows.clear();
    for (const auto& u : alg.basis(1))
      for (const auto& v : alg.basis(n - 1))
        rows.push_back(coords(multiply(u, v, params), n));
    r = rank_exact(rows);
    report.add("B1*B" + std::to_string(n - 1) + " spans B" + std::to_string(n),
               static_cast<long>(r) == 2 * n, std::to_string(2 * n), std::to_string(r));
  }
  return report;
}

VerificationReport verify_decomposition(const CurveParams& params, long maxdeg) {
  if (maxdeg < 2) throw std::domain_error("verify_decomposition requires maxdeg >= 2");
  VerificationReport report;

  // x powers produced through the multiplication op, not assembled directly
  std::vector<CurveFunction> xp = {CurveFunction::one()};
  for (long k = 1; k <= maxdeg; ++k)
    xp.push_back(multiply(xp.back(), CurveFunction::x_power(1), params));
  CurveFunction y = CurveFunction::y_x_power(0);

  {
    std::vector<std::vector<Rational>> rows = {coords(xp[0], 1), coords(xp[1], 1)};
    std::size_t r = rank_exact(rows);
    report.add("S1 = B1", r == 2, "2", std::to_string(r));
  }
  for (long n = 2; n <= maxdeg; ++n) {
    std::vector<std::vector<Rational>> s_rows, y_rows, all;
    for (long k = 0; k <= n; ++k) s_rows.push_back(coords(xp[k], n));
    for (long j = 0; j + 2 <= n; ++j)
      y_rows.push_back(coords(multiply(y, xp[j], params), n));
    all = s_rows;
    all.insert(all.end(), y_rows.begin(), y_rows.end());
    std::size_t rs = rank_exact(s_rows);
    std::size_t ry = rank_exact(y_rows);
    std::size_t ru = rank_exact(all);
    bool spans = static_cast<long>(ru) == 2 * n;
    bool direct = rs + ry == ru;
    std::string tag = std::to_string(n);
    report.add("S" + tag + " + y*S" + std::to_string(n - 2) + " spans B" + tag, spans,
               std::to_string(2 * n), std::to_string(ru));
    report.add("S" + tag + " + y*S" + std::to_string(n - 2) + " is direct", direct,
               std::to_string(ru), std::to_string(rs) + " + " + std::to_string(ry));
  }
  return report;
}

Rational CoverRelation::discriminant() const {
  // standard binary quartic discriminant in the coefficients of
  // A v^4 + B v^3 + C v^2 + D v + E (u = 1 chart; the formula is the
  // invariant of the binary form, so the root at infinity is counted)
  const Rational &A = coeffs[4], &B = coeffs[3], &C = coeffs[2], &D = coeffs[1],
                 &E = coeffs[0];
  return Rational(256) * A * A * A * E * E * E - Rational(192) * A * A * B * D * E * E -
         Rational(128) * A * A * C * C * E * E + Rational(144) * A * A * C * D * D * E -
         Rational(27) * A * A * D * D * D * D + Rational(144) * A * B * B * C * E * E -
         Rational(6) * A * B * B * D * D * E - Rational(80) * A * B * C * C * D * E +
         Rational(18) * A * B * C * D * D * D + Rational(16) * A * C * C * C * C * E -
         Rational(4) * A * C * C * C * D * D - Rational(27) * B * B * B * B * E * E +
         Rational(18) * B * B * B * C * D * E - Rational(4) * B * B * B * D * D * D -
         Rational(4) * B * B * C * C * C * E + B * B * C * C * D * D;
}

CoverRelation find_cover_relation(const CurveParams& params) {
  CurveFunction y = CurveFunction::y_x_power(0);
  CurveFunction y2 = multiply(y, y, params);
  if (!y2.g.is_zero() || y2.f.degree() > 4)
    throw std::logic_error("y^2 left canonical form");
  CoverRelation rel;
  for (std::size_t k = 0; k < 5; ++k) rel.coeffs[k] = y2.f.coeff(k);
  return rel;
}

}  // namespace ellhelix
