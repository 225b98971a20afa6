#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace ellhelix {

// One invocation of a subcommand.  Fields left unset fall back to the
// per-command defaults documented in the README; required fields missing at
// run time are reported as usage errors.
struct RunConfig {
  std::string command;         // helix | hilbert | snc-dims | verify-canonical
                               // | weierstrass | p1
  std::string format = "json"; // json | csv | text

  std::optional<long> d;       // helix, hilbert, snc-dims, verify-canonical
  std::optional<long> from;    // helix window bounds
  std::optional<long> to;
  bool limit = false;          // helix: report the d > 2 limit slope instead

  std::string which = "orbit"; // hilbert: orbit | snc
  std::optional<long> terms;   // hilbert: top degree of the table
  std::string engine = "series"; // hilbert: series | recurrence

  std::optional<long> N;       // snc-dims: top degree
  std::string mode = "modular"; // snc-dims: modular | exact
  std::string sigma;           // snc-dims: matrix "r00,r01;r10,r11", empty = identity

  std::optional<long> maxdeg;  // verify-canonical (default 8), weierstrass (default 8)

  std::string curve_a;         // weierstrass coefficients, rational literals
  std::string curve_b;

  std::optional<long> n;       // p1
  std::optional<long> bound;
};

// Executes one config, writing the report to out and diagnostics to err.
// Returns 0 when tables are produced and every verification check passes,
// 1 when some check fails or a computation is inconclusive, 2 on usage or
// precondition errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Runs every config in a JSON-array suite file and writes one aggregate JSON
// report in input order.  Returns 0 iff every entry returned 0; an unreadable
// or malformed file returns 2.
int run_suite(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace ellhelix
