#include "ellhelix/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "ellhelix/canonical.hpp"
#include "ellhelix/chern.hpp"
#include "ellhelix/errors.hpp"
#include "ellhelix/helix.hpp"
#include "ellhelix/p1.hpp"
#include "ellhelix/presentation.hpp"
#include "ellhelix/series.hpp"
#include "ellhelix/weierstrass.hpp"

namespace ellhelix {
namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

long require(const std::optional<long>& v, const std::string& what) {
  if (!v) throw std::domain_error("missing required option: " + what);
  return *v;
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("not an integer literal: '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  return Rational(parse_integer(s.substr(0, slash)),
                  parse_integer(s.substr(slash + 1)));
}

// "r00,r01;r10,r11" -> row-major matrix.
std::vector<std::vector<Rational>> parse_sigma(const std::string& s) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream row_stream(s);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<Rational> entries;
    std::stringstream entry_stream(row);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) entries.push_back(parse_rational(entry));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::domain_error("empty sigma matrix");
  return rows;
}

void check_format(const RunConfig& c, bool csv_ok) {
  if (c.format != "json" && c.format != "csv" && c.format != "text")
    throw std::domain_error("unknown format '" + c.format +
                            "' (choose json, csv, or text)");
  if (c.format == "csv" && !csv_ok)
    throw std::domain_error(
        "csv output is offered for the table commands (helix, hilbert, snc-dims); "
        "use json or text for " + c.command);
}

json checks_json(const VerificationReport& report) {
  json rows = json::array();
  for (const auto& c : report.checks)
    rows.push_back({{"check", c.check},
                    {"pass", c.pass},
                    {"expected", c.expected},
                    {"actual", c.actual}});
  return rows;
}

void checks_text(std::ostream& out, const VerificationReport& report) {
  for (const auto& c : report.checks)
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.check << ": expected " << c.expected
        << ", actual " << c.actual << "\n";
}

std::vector<Integer> to_integers(const std::vector<Rational>& values) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_integer());
  return out;
}

void emit_dims(const RunConfig& c, std::ostream& out, json header,
               const std::vector<Integer>& dims, const std::string& title) {
  if (c.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < dims.size(); ++k)
      rows.push_back({{"degree", k}, {"dim", dims[k].get_str()}});
    header["rows"] = std::move(rows);
    out << header.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (std::size_t k = 0; k < dims.size(); ++k)
      csv_row(out, {std::to_string(k), dims[k].get_str()});
  } else {
    out << title << "\n";
    for (std::size_t k = 0; k < dims.size(); ++k)
      out << "degree " << k << ": " << dims[k].get_str() << "\n";
  }
}

int cmd_helix(const RunConfig& c, std::ostream& out) {
  check_format(c, true);
  long d = require(c.d, "--d");
  if (c.limit) {
    LimitSlope ls = limit_slope(d);
    if (c.format == "json") {
      json doc = {{"command", "helix"},
                  {"d", d},
                  {"limit",
                   {{"p", ls.p.get_str()},
                    {"q", ls.q.get_str()},
                    {"r", ls.r.get_str()},
                    {"radicand", ls.radicand.get_str()},
                    {"value", fmt_double(ls.value)}}}};
      out << doc.dump(2) << "\n";
    } else if (c.format == "csv") {
      csv_row(out, {std::to_string(d), ls.p.get_str(), ls.q.get_str(), ls.r.get_str(),
                    ls.radicand.get_str(), fmt_double(ls.value)});
    } else {
      out << "limit slope for d = " << d << ": (" << ls.p.get_str() << " + "
          << ls.q.get_str() << "*sqrt(" << ls.radicand.get_str() << "))/"
          << ls.r.get_str() << " = " << fmt_double(ls.value) << "\n";
    }
    return 0;
  }
  long from = require(c.from, "--from");
  long to = require(c.to, "--to");
  HelixWindow window = generate_helix(d, from, to);
  if (c.format == "json") {
    json rows = json::array();
    for (long m = from; m <= to; ++m) {
      const ChernPair& e = window.at(m);
      Rational mu = slope(e);
      rows.push_back({{"index", m},
                      {"rank", e.rank.get_str()},
                      {"degree", e.degree.get_str()},
                      {"slope_num", mu.num().get_str()},
                      {"slope_den", mu.den().get_str()}});
    }
    json doc = {{"command", "helix"}, {"d", d}, {"from", from}, {"to", to},
                {"rows", std::move(rows)}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (long m = from; m <= to; ++m) {
      const ChernPair& e = window.at(m);
      Rational mu = slope(e);
      csv_row(out, {std::to_string(m), e.rank.get_str(), e.degree.get_str(),
                    mu.num().get_str(), mu.den().get_str()});
    }
  } else {
    out << "helix window for d = " << d << ", indices " << from << ".." << to << "\n";
    for (long m = from; m <= to; ++m) {
      const ChernPair& e = window.at(m);
      Rational mu = slope(e);
      out << "L[" << m << "]: rank " << e.rank.get_str() << ", degree "
          << e.degree.get_str() << ", slope " << mu.str() << "\n";
    }
  }
  return 0;
}

int cmd_hilbert(const RunConfig& c, std::ostream& out) {
  check_format(c, true);
  long d = require(c.d, "--d");
  long terms = require(c.terms, "--terms");
  if (c.which != "orbit" && c.which != "snc")
    throw std::domain_error("unknown table '" + c.which + "' (choose orbit or snc)");
  if (c.engine != "series" && c.engine != "recurrence")
    throw std::domain_error("unknown engine '" + c.engine +
                            "' (choose series or recurrence)");
  if (terms < 0) throw std::domain_error("--terms must be >= 0");
  if (d < 2) throw std::domain_error("dimension tables need d >= 2");

  std::vector<Integer> dims;
  if (c.engine == "series") {
    dims = to_integers(c.which == "orbit" ? orbit_hilbert(d, terms)
                                          : snc_hilbert(d, terms));
  } else {
    // a_{n+1} = d a_n - a_{n-1} from (1, d); the orbit table adds the
    // two-step shift.
    std::vector<Rational> s =
        recurrence_solve(d, Rational(1), Rational(d), std::max(terms, 1L));
    std::vector<Rational> values;
    for (long k = 0; k <= terms; ++k) {
      Rational v = s[k];
      if (c.which == "orbit" && k >= 2) v = v + s[k - 2];
      values.push_back(v);
    }
    dims = to_integers(values);
  }
  json header = {{"command", "hilbert"}, {"d", d}, {"which", c.which},
                 {"engine", c.engine},   {"terms", terms}};
  emit_dims(c, out, std::move(header), dims,
            (c.which == "orbit" ? std::string("orbit algebra dims for d = ")
                                : std::string("symmetric algebra dims for d = ")) +
                std::to_string(d) + " (" + c.engine + " engine)");
  return 0;
}

int cmd_snc_dims(const RunConfig& c, std::ostream& out) {
  check_format(c, true);
  long d = require(c.d, "--d");
  long N = require(c.N, "--N");
  RankMode mode;
  if (c.mode == "modular")
    mode = RankMode::Modular;
  else if (c.mode == "exact")
    mode = RankMode::Exact;
  else
    throw std::domain_error("unknown mode '" + c.mode + "' (choose modular or exact)");
  QuadraticPresentation pres =
      c.sigma.empty() ? QuadraticPresentation(d)
                      : QuadraticPresentation(d, parse_sigma(c.sigma));
  GradedDims dims = presentation_dims(pres, N, mode);
  json header = {{"command", "snc-dims"},
                 {"d", d},
                 {"N", N},
                 {"mode", c.mode},
                 {"sigma", c.sigma.empty() ? "identity" : c.sigma}};
  emit_dims(c, out, std::move(header), dims,
            "presentation dims for d = " + std::to_string(d) + " (" + c.mode +
                " rank)");
  return 0;
}

int cmd_verify_canonical(const RunConfig& c, std::ostream& out) {
  check_format(c, false);
  long d = require(c.d, "--d");
  long maxdeg = c.maxdeg.value_or(8);
  VerificationReport report = verify_canonical_map(d, maxdeg);
  HelixWindow window = generate_helix(d, -maxdeg - 1, 0);
  bool connected = connected_check(orbit_dim_table(d, window, maxdeg));
  report.add("every diagonal component is one-dimensional", connected, "true",
             connected ? "true" : "false");
  if (c.format == "json") {
    json doc = {{"command", "verify-canonical"},
                {"d", d},
                {"maxdeg", maxdeg},
                {"checks", checks_json(report)},
                {"all_pass", report.all_pass()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "canonical map checks for d = " << d << ", maxdeg = " << maxdeg << "\n";
    checks_text(out, report);
    out << (report.all_pass() ? "ALL CHECKS PASS" : "CHECKS FAILED") << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_weierstrass(const RunConfig& c, std::ostream& out) {
  check_format(c, false);
  if (c.curve_a.empty() || c.curve_b.empty())
    throw std::domain_error("missing required option: --a and --b");
  CurveParams params(parse_rational(c.curve_a), parse_rational(c.curve_b));
  long maxdeg = c.maxdeg.value_or(8);
  VerificationReport generation = verify_generation(params, maxdeg);
  VerificationReport decomposition = verify_decomposition(params, maxdeg);
  CoverRelation cover = find_cover_relation(params);
  Rational disc = cover.discriminant();
  VerificationReport cover_report;
  cover_report.add("cover relation has nonzero discriminant", !disc.is_zero(),
                   "nonzero", disc.str());
  bool all =
      generation.all_pass() && decomposition.all_pass() && cover_report.all_pass();
  if (c.format == "json") {
    json cover_doc;
    for (std::size_t k = 0; k < cover.coeffs.size(); ++k)
      cover_doc["v" + std::to_string(k)] = cover.coeffs[k].str();
    cover_doc["discriminant"] = disc.str();
    json dims = json::array();
    for (long n = 0; n <= maxdeg; ++n)
      dims.push_back({{"degree", n}, {"dim", section_basis(n).size()}});
    json doc = {{"command", "weierstrass"},
                {"a", params.a.str()},
                {"b", params.b.str()},
                {"maxdeg", maxdeg},
                {"generation", checks_json(generation)},
                {"decomposition", checks_json(decomposition)},
                {"cover", std::move(cover_doc)},
                {"section_dims", std::move(dims)},
                {"all_pass", all}};
    out << doc.dump(2) << "\n";
  } else {
    out << "section algebra of y^2 = x^3 + (" << params.a.str() << ")x + ("
        << params.b.str() << "), maxdeg = " << maxdeg << "\n";
    out << "generation checks:\n";
    checks_text(out, generation);
    out << "decomposition checks:\n";
    checks_text(out, decomposition);
    out << "cover relation y^2 = q(u, v), coefficients of u^(4-k) v^k:\n";
    for (std::size_t k = 0; k < cover.coeffs.size(); ++k)
      out << "  v^" << k << ": " << cover.coeffs[k].str() << "\n";
    checks_text(out, cover_report);
    out << (all ? "ALL CHECKS PASS" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_p1(const RunConfig& c, std::ostream& out) {
  check_format(c, false);
  long n = require(c.n, "--n");
  long bound = require(c.bound, "--bound");
  std::vector<SplitBundleCandidate> solutions = feasibility(n, bound);
  bool has_cert = n >= 2;
  ContradictionCertificate cert{};
  bool agrees = true;
  if (has_cert) {
    cert = contradiction_certificate(n);
    agrees = solutions.empty() && !cert.consistent;
  }
  if (c.format == "json") {
    json sols = json::array();
    for (const auto& s : solutions) sols.push_back({{"a", s.a}, {"t", s.t}});
    json doc = {{"command", "p1"}, {"n", n}, {"bound", bound},
                {"solutions", std::move(sols)}};
    if (has_cert) {
      doc["certificate"] = {{"n", cert.n},
                            {"forced_twists_at_least_n", cert.forced_twists_at_least_n},
                            {"forced_t", cert.forced_t},
                            {"helix_total", cert.helix_total},
                            {"required_total", cert.required_total},
                            {"consistent", cert.consistent}};
      doc["agrees"] = agrees;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "split-bundle solutions for n = " << n << ", bound = " << bound << ":\n";
    if (solutions.empty()) out << "  (none)\n";
    for (const auto& s : solutions) out << "  " << s.str() << "\n";
    if (has_cert) {
      out << "certificate: " << cert.str() << "\n";
      out << (agrees ? "enumeration agrees with the certificate"
                     : "enumeration DISAGREES with the certificate")
          << "\n";
    }
  }
  return agrees ? 0 : 1;
}

RunConfig config_from_json(const json& entry) {
  if (!entry.is_object())
    throw std::domain_error("each suite entry must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : entry.items()) {
    if (key == "command")
      c.command = value.get<std::string>();
    else if (key == "format")
      c.format = value.get<std::string>();
    else if (key == "d")
      c.d = value.get<long>();
    else if (key == "from")
      c.from = value.get<long>();
    else if (key == "to")
      c.to = value.get<long>();
    else if (key == "limit")
      c.limit = value.get<bool>();
    else if (key == "which")
      c.which = value.get<std::string>();
    else if (key == "terms")
      c.terms = value.get<long>();
    else if (key == "engine")
      c.engine = value.get<std::string>();
    else if (key == "N")
      c.N = value.get<long>();
    else if (key == "mode")
      c.mode = value.get<std::string>();
    else if (key == "sigma")
      c.sigma = value.get<std::string>();
    else if (key == "maxdeg")
      c.maxdeg = value.get<long>();
    else if (key == "a")
      c.curve_a = value.get<std::string>();
    else if (key == "b")
      c.curve_b = value.get<std::string>();
    else if (key == "n")
      c.n = value.get<long>();
    else if (key == "bound")
      c.bound = value.get<long>();
    else
      throw std::domain_error("unknown suite config key: '" + key + "'");
  }
  if (c.command.empty()) throw std::domain_error("suite entry lacks a command");
  return c;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "helix") return cmd_helix(config, out);
    if (config.command == "hilbert") return cmd_hilbert(config, out);
    if (config.command == "snc-dims") return cmd_snc_dims(config, out);
    if (config.command == "verify-canonical") return cmd_verify_canonical(config, out);
    if (config.command == "weierstrass") return cmd_weierstrass(config, out);
    if (config.command == "p1") return cmd_p1(config, out);
    throw std::domain_error("unknown command '" + config.command + "'");
  } catch (const PeriodicityError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const InconclusiveRankError& e) {
    err << "verification inconclusive: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_suite(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read suite file '" << path << "'\n";
    return 2;
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    err << "error: suite file is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  if (!doc.is_array()) {
    err << "error: suite file must hold a JSON array of run configs\n";
    return 2;
  }
  json results = json::array();
  int worst = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    RunConfig config;
    try {
      config = config_from_json(doc[i]);
    } catch (const std::exception& e) {
      err << "error: suite entry " << i << ": " << e.what() << "\n";
      return 2;
    }
    std::ostringstream entry_out, entry_err;
    int code = run(config, entry_out, entry_err);
    worst = std::max(worst, code);
    json r = {{"entry", i}, {"config", doc[i]}, {"exit", code}, {"pass", code == 0}};
    if (config.format == "json" && !entry_out.str().empty())
      r["output"] = json::parse(entry_out.str());
    else
      r["output"] = entry_out.str();
    if (!entry_err.str().empty()) r["diagnostics"] = entry_err.str();
    results.push_back(std::move(r));
  }
  json report = {{"suite", path},
                 {"entries", doc.size()},
                 {"results", std::move(results)},
                 {"all_pass", worst == 0}};
  out << report.dump(2) << "\n";
  return worst;
}

}  // namespace ellhelix
