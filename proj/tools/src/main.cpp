#include "commands.hpp"
#include "document.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"gres: relative homological algebra over Z, Z/m, F_p and Q"};
  std::string input, json_out;
  gres::cli::Settings settings;
  std::uint64_t seed = 0;
  app.add_option("input", input, "Input document (JSON)")->required();
  app.add_option("--json-out", json_out, "Write machine-readable results to this path");
  app.add_option("--max-generators", settings.max_generators, "Size guard for codensity triples")->check(CLI::PositiveNumber);
  app.add_option("--truncation", settings.truncation, "Default resolution depth")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Reserved; no command is randomized");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using gres::cli::Json;
  try {
    std::ifstream in(input);
    if (!in) throw gres::cli::ParseError("cannot read '" + input + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw gres::cli::ParseError(input + ": " + e.what());
    }
    gres::cli::Document d = gres::cli::parse_document(doc, settings);
    Json results = gres::cli::run_commands(d, settings);
    std::cout << gres::cli::render(results);
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      out << Json{{"format", 1}, {"results", results}}.dump(2) << "\n";
      if (!out) throw gres::cli::CommandError("cannot write '" + json_out + "'");
    }
    return 0;
  } catch (const gres::cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gres::cli::DeclarationError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const gres::cli::CommandError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 4;
  }
}
