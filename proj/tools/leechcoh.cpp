// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// leechcoh <validate|leech|square|total|fs|h> --input FILE [options]

#include <fstream>   // for ifstream
#include <iostream>  // for cout, cerr
#include <sstream>   // for stringstream
#include <string>    // for string

#include "CLI11.hpp"
#include "leechcoh/interface.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Leech cohomology of finite monoids and monoid sequences"};
  app.set_version_flag("--version", "leechcoh 1.0");

  std::string        command;
  std::string        input;
  leechcoh::Options  opts;
  size_t             pmax = 0;
  std::string        grid, monoid, coeff, name, moves, rule, group;

  app.add_option("command", command, "validate, leech, square, total, fs or h")
      ->required()
      ->check(CLI::IsMember({"validate", "leech", "square", "total", "fs", "h"}));
  app.add_option("--input", input, "JSON document")->required();
  auto* pmax_opt = app.add_option("--pmax", pmax, "highest cohomology degree reported");
  app.add_option("--format", opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* grid_opt   = app.add_option("--grid", grid, "grid to use (square, total)");
  auto* monoid_opt = app.add_option("--monoid", monoid, "monoid to use (leech)");
  auto* coeff_opt  = app.add_option("--coeff", coeff, "coefficient system (leech)");
  auto* name_opt   = app.add_option("--name", name, "descriptor list (fs) or set system (h)");
  auto* moves_opt  = app.add_option("--moves", moves, "path moves, overriding the document");
  auto* rule_opt   = app.add_option("--rule", rule, "column rule: prime, prime>N, even, odd, always, never");
  auto* group_opt  = app.add_option("--group", group, "constant coefficient group (fs, h)");
  app.add_flag("--verbose", opts.verbose, "also print the literal degree labels");
  moves_opt->excludes(rule_opt);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (pmax_opt->count() > 0) opts.pmax = pmax;
  if (grid_opt->count() > 0) opts.grid = grid;
  if (monoid_opt->count() > 0) opts.monoid = monoid;
  if (coeff_opt->count() > 0) opts.coeff = coeff;
  if (name_opt->count() > 0) opts.name = name;
  if (moves_opt->count() > 0) opts.moves = moves;
  if (rule_opt->count() > 0) opts.rule = rule;
  if (group_opt->count() > 0) opts.group = group;

  std::ifstream file(input);
  if (!file) {
    std::cerr << "InputError: cannot read " << input << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  try {
    auto const doc    = leechcoh::parse_document(buffer.str());
    auto const result = leechcoh::run_command(command, doc, opts);
    (result.exit_code == 2 ? std::cerr : std::cout) << result.output;
    return result.exit_code;
  } catch (leechcoh::Error const& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == leechcoh::ErrorKind::input ? 2 : 1;
  }
}
