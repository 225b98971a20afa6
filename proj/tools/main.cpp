#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ellhelix/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"helix and graded-algebra toolkit for elliptic curves"};
  app.require_subcommand(1);

  ellhelix::RunConfig config;
  std::string suite_path;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "output format: json, csv, or text");
  };

  CLI::App* helix = app.add_subcommand(
      "helix", "window of the helix seeded by (1,0), (1,d), or its limit slope");
  helix->add_option("--d", config.d, "consecutive Euler pairing, d >= 2");
  helix->add_option("--from", config.from, "first index (<= -1)");
  helix->add_option("--to", config.to, "last index (>= 0)");
  helix->add_flag("--limit", config.limit, "report the limit slope surd (d > 2)");
  add_format(helix);

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "graded dimension table from the rational Hilbert series");
  hilbert->add_option("--d", config.d, "dimension of the generating space, d >= 2");
  hilbert->add_option("--which", config.which, "orbit or snc");
  hilbert->add_option("--terms", config.terms, "top degree of the table");
  hilbert->add_option("--engine", config.engine, "series or recurrence");
  add_format(hilbert);

  CLI::App* snc = app.add_subcommand(
      "snc-dims", "graded dimensions from the quadratic presentation by elimination");
  snc->add_option("--d", config.d, "number of generators");
  snc->add_option("--N", config.N, "top degree of the table");
  snc->add_option("--mode", config.mode, "modular or exact rank computation");
  snc->add_option("--sigma", config.sigma,
                  "change of generators, rows ';'-separated, entries ','-separated");
  add_format(snc);

  CLI::App* canonical = app.add_subcommand(
      "verify-canonical",
      "check the symmetric algebra against the helix orbit algebra");
  canonical->add_option("--d", config.d, "consecutive Euler pairing, d >= 2");
  canonical->add_option("--maxdeg", config.maxdeg, "top degree checked (default 8)");
  add_format(canonical);

  CLI::App* weier = app.add_subcommand(
      "weierstrass", "section-algebra checks on y^2 = x^3 + ax + b");
  weier->add_option("--a", config.curve_a, "coefficient a, a rational literal");
  weier->add_option("--b", config.curve_b, "coefficient b, a rational literal");
  weier->add_option("--maxdeg", config.maxdeg, "top degree checked (default 8)");
  add_format(weier);

  CLI::App* p1 = app.add_subcommand(
      "p1", "split-bundle feasibility for the pair (O, O(n)) on the projective line");
  p1->add_option("--n", config.n, "twist of the second pair member, n >= 1");
  p1->add_option("--bound", config.bound, "largest twist searched, >= 2n");
  add_format(p1);

  CLI::App* suite =
      app.add_subcommand("suite", "run every config in a JSON suite file");
  suite->add_option("file", suite_path, "path to a JSON array of run configs")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (suite->parsed()) return ellhelix::run_suite(suite_path, std::cout, std::cerr);
  config.command = app.get_subcommands().front()->get_name();
  return ellhelix::run(config, std::cout, std::cerr);
}
