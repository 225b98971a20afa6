#pragma once

#include <string>
#include <vector>

namespace ellhelix {

// h^0 of O(m) on the projective line.
long h0_p1(long m);

// Candidate shape sum_i O(a_i) + torsion of length t for the cokernel of the
// canonical map O -> Hom(O, O(n)) (x) O(n).  Twists are kept sorted.
struct SplitBundleCandidate {
  std::vector<long> a;
  long t = 0;

  bool operator==(const SplitBundleCandidate&) const = default;
  std::string str() const;
};

// All shapes with n twists a_i <= bound and 0 <= t <= 2n that satisfy the
// three section-count equations
//   sum h0(a_i - n)     + t = 2n      (twist by -n)
//   sum h0(a_i - (n+1)) + t = n       (twist by -(n+1))
//   sum h0(a_i - n)     + t = n + 1   (helix continuation)
// and that are simple (a single indecomposable summand), so the cokernel can
// serve as the next helix member.  Twists below n contribute nothing to any
// equation, so consistent systems leaving such a twist free would have no
// canonical finite answer; that case is provably empty and guarded.
//
// pre: n >= 1, bound >= 2n.
std::vector<SplitBundleCandidate> feasibility(long n, long bound);

// The symbolic impossibility argument for n >= 2, instantiated: subtracting
// the -(n+1) equation from the helix equation forces exactly one a_i >= n,
// the helix equation then forces t = n, and the -n equation cannot hold.
struct ContradictionCertificate {
  long n;
  long forced_twists_at_least_n;  // exactly this many a_i are >= n
  long forced_t;                  // sections of the torsion part
  long helix_total;               // what the forced shape gives: n + 1
  long required_total;            // what the -n equation demands: 2n
  bool consistent;                // helix_total == required_total

  std::string str() const;
};

// pre: n >= 2 (for n = 1 the two totals agree and nothing is contradicted).
ContradictionCertificate contradiction_certificate(long n);

}  // namespace ellhelix
