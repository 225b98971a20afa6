#include "ellhelix/canonical.hpp"

#include <stdexcept>
#include <string>

#include "ellhelix/errors.hpp"
#include "ellhelix/helix.hpp"
#include "ellhelix/presentation.hpp"
#include "ellhelix/series.hpp"

namespace ellhelix {

GradedDims hat_dims(const DimensionTable& table) {
  for (long i = table.lo(); i < table.hi(); ++i)
    for (long j = i; j <= table.hi() - 1 && j - i <= table.maxdeg(); ++j)
      if (table.dim(i, j) != table.dim(i + 1, j + 1)) throw PeriodicityError(i, j);
  long len = std::min(table.maxdeg(), table.hi() - table.lo());
  GradedDims out;
  if (len < 0) return out;
  out.reserve(len + 1);
  for (long n = 0; n <= len; ++n) out.push_back(table.dim(table.lo(), table.lo() + n));
  return out;
}

bool connected_check(const DimensionTable& table) {
  for (long i = table.lo(); i <= table.hi(); ++i)
    if (table.dim(i, i) != 1) return false;
  return true;
}

namespace {
std::string seq_str(const GradedDims& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].get_str();
  }
  return out + "]";
}

GradedDims to_integers(const std::vector<Rational>& v) {
  GradedDims out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.to_integer());
  return out;
}
}  // namespace

VerificationReport verify_canonical_map(long d, long maxdeg) {
  if (d < 2) throw std::domain_error("verify_canonical_map requires d >= 2");
  if (maxdeg < 3) throw std::domain_error("verify_canonical_map requires maxdeg >= 3");

  // b_n from the helix engine, s_n from the series engine, degrees <= 2 of S
  // independently from the presentation engine.
  HelixWindow window = generate_helix(d, -maxdeg - 1, 0);
  GradedDims b = hat_dims(orbit_dim_table(d, window, maxdeg));
  GradedDims s = to_integers(snc_hilbert(d, maxdeg));
  GradedDims s_pres = presentation_dims(QuadraticPresentation(d), 2);

  VerificationReport report;
  report.add("degree-0 dims equal", s_pres[0] == b[0], b[0].get_str(), s_pres[0].get_str());
  report.add("degree-1 dims equal", s_pres[1] == b[1], b[1].get_str(), s_pres[1].get_str());

  Integer codim = b[2] - s_pres[2];
  report.add("degree-2 codimension is 1", codim == 1, "1", codim.get_str());

  {
    bool pass = true;
    GradedDims expected, actual;
    for (long n = 2; n <= maxdeg; ++n) {
      expected.push_back(s[n] + s[n - 2]);
      actual.push_back(b[n]);
      pass = pass && b[n] == s[n] + s[n - 2];
    }
    report.add("b_n = s_n + s_{n-2} for 2 <= n <= maxdeg", pass, seq_str(expected),
               seq_str(actual));
  }
  {
    bool pass = true;
    for (long j = 3; j <= maxdeg; ++j)
      pass = pass && b[j] <= b[1] * b[j - 1] + b[2] * b[j - 2];
    report.add("b_j <= b_1 b_{j-1} + b_2 b_{j-2} for 3 <= j <= maxdeg", pass,
               "bounded", pass ? "bounded" : "exceeded");
  }
  {
    bool pass = true;
    for (long j = 3; j <= maxdeg; ++j) pass = pass && b[j] <= d * b[j - 1];
    report.add("b_j <= d b_{j-1} for 3 <= j <= maxdeg", pass, "bounded",
               pass ? "bounded" : "exceeded");
  }
  return report;
}

}  // namespace ellhelix
