#include "ellhelix/p1.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellhelix {

long h0_p1(long m) { return m >= 0 ? m + 1 : 0; }

std::string SplitBundleCandidate::str() const {
  std::string out = "a = (";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(a[i]);
  }
  out += "), t = " + std::to_string(t);
  return out;
}

namespace {

// Extends the sorted visible prefix (entries >= n) one twist at a time.
void search(long n, long bound, long lo, std::vector<long>& visible,
            std::vector<SplitBundleCandidate>& found) {
  long k = static_cast<long>(visible.size());
  for (long t = 0; t <= 2 * n; ++t) {
    long eq_minus_n = t, eq_minus_n1 = t;
    for (long ai : visible) {
      eq_minus_n += h0_p1(ai - n);
      eq_minus_n1 += h0_p1(ai - (n + 1));
    }
    if (eq_minus_n != 2 * n || eq_minus_n1 != n || eq_minus_n != n + 1) continue;
    if (k < n)
      throw std::logic_error(
          "section-count equations hold with a twist below " + std::to_string(n) +
          " left unconstrained; no canonical candidate list exists");
    found.push_back({visible, t});
  }
  if (k == n) return;
  for (long ai = lo; ai <= bound; ++ai) {
    visible.push_back(ai);
    search(n, bound, ai, visible, found);
    visible.pop_back();
  }
}

bool simple(const SplitBundleCandidate& c) {
  return c.a.size() + (c.t > 0 ? 1 : 0) == 1;
}

}  // namespace

std::vector<SplitBundleCandidate> feasibility(long n, long bound) {
  if (n < 1) throw std::domain_error("feasibility needs n >= 1");
  if (bound < 2 * n)
    throw std::domain_error("bound " + std::to_string(bound) +
                            " is below 2n = " + std::to_string(2 * n) +
                            "; the search region could miss solutions");
  std::vector<SplitBundleCandidate> found;
  std::vector<long> visible;
  search(n, bound, n, visible, found);
  std::erase_if(found, [](const SplitBundleCandidate& c) { return !simple(c); });
  std::sort(found.begin(), found.end(),
            [](const SplitBundleCandidate& x, const SplitBundleCandidate& y) {
              return x.a != y.a ? x.a < y.a : x.t < y.t;
            });
  return found;
}

std::string ContradictionCertificate::str() const {
  std::string out = "n = " + std::to_string(n) + ": exactly " +
                    std::to_string(forced_twists_at_least_n) +
                    " twist reaches n, torsion sections forced to t = " +
                    std::to_string(forced_t) + "; twist-by-(-n) sections total " +
                    std::to_string(helix_total) + " but must equal " +
                    std::to_string(required_total);
  out += consistent ? " (consistent)" : " (impossible)";
  return out;
}

ContradictionCertificate contradiction_certificate(long n) {
  if (n < 2)
    throw std::domain_error(
        "the subtraction argument needs n >= 2; at n = 1 the totals agree");
  // Subtracting the -(n+1) equation from the helix equation gives
  //   sum_i [h0(a_i - n) - h0(a_i - (n+1))] = (n + 1) - n = 1,
  // and each bracket is 1 when a_i >= n, else 0: exactly one a_i >= n.
  // The helix equation then reads 1 + t = n + 1, so t = n, and the -n
  // equation would need 1 + t = 2n.
  ContradictionCertificate cert;
  cert.n = n;
  cert.forced_twists_at_least_n = 1;
  cert.forced_t = n;
  cert.helix_total = 1 + cert.forced_t;
  cert.required_total = 2 * n;
  cert.consistent = cert.helix_total == cert.required_total;
  return cert;
}

}  // namespace ellhelix
