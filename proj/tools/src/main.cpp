// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "equisolid/cli.hpp"

namespace cli = equisolid::cli;

int main(int argc, char** argv) {
  CLI::App app{"Decide G-solidity of rational surfaces with a finite group action."};
  std::string command, spec_file, entry, cache_dir;
  cli::Options opt;
  bool no_cache = false;
  std::vector<std::string> choices = cli::commands();
  choices.push_back("spec");
  app.add_option("command", command, "classify, orbits, fixed-points, links, identify, goursat, catalog, "
                                     "or spec (print the canonical spec)")
      ->required()
      ->check(CLI::IsMember(choices));
  auto* file = app.add_option("--spec", spec_file, "group spec file ('-' for stdin)");
  app.add_option("--catalog", entry, "use a catalog entry as the spec")->excludes(file);
  app.add_option("--max-length", opt.max_length, "orbit length bound for 'orbits'")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", opt.timing, "add wall-clock timing to the report");
  app.add_flag("--no-cache", no_cache, "ignore the report cache");
  app.add_option("--cache-dir", cache_dir, "report cache directory (default: $EQUISOLID_CACHE_DIR)");
  CLI11_PARSE(app, argc, argv);
  opt.use_cache = !no_cache;
  if (!cache_dir.empty()) opt.cache_dir = cache_dir;

  std::optional<cli::GroupSpec> spec;
  try {
    if (!entry.empty()) {
      spec = cli::catalog_spec(entry);
    } else if (!spec_file.empty()) {
      std::string text;
      if (spec_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(spec_file);
        if (!in) throw equisolid::Error("cannot read " + spec_file);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      spec = cli::parse_spec(text);
    }
    if (command == "spec") {
      if (!spec) throw equisolid::Error("spec needs --spec or --catalog");
      std::cout << cli::render(*spec);
      return 0;
    }
  } catch (const equisolid::Error& e) {
    cli::Json r;
    r["schema"] = cli::kSchema;
    r["command"] = command;
    r["error"] = e.what();
    std::cout << cli::dump(r);
    std::cerr << "equisolid: " << e.what() << "\n";
    return 1;
  }
  const cli::Outcome out = cli::run_command(command, spec, opt);
  std::cout << cli::dump(out.report);
  if (out.report.contains("error")) std::cerr << "equisolid: " << out.report["error"].get<std::string>() << "\n";
  return out.exit_code;
}
