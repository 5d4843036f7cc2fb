#include "berkp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Potential theory and dynamics on the Berkovich projective line over Q_p"};
  berkp::Invocation inv;
  std::string in_path, out_path;
  app.add_option("subcommand", inv.subcommand, "One of: kernel rho hull cE capacity equilibrium green transdiam lcd "
                                               "pommerenke holder map-image map-reduce-check julia-cylinders "
                                               "up-experiment selftest")
      ->required();
  app.add_option("--p", inv.p, "Residue characteristic")->capture_default_str();
  app.add_option("--precision", inv.precision, "p-adic digits for inexact values")->capture_default_str();
  app.add_option("--seed", inv.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--in", in_path, "Input JSON file (default stdin)");
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--format", inv.format, "json or csv")->capture_default_str();
  app.add_flag("--natural", inv.natural, "Print log quantities in natural-log units");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) {
      std::cerr << "cannot open " << in_path << "\n";
      return 1;
    }
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else if (inv.subcommand != "selftest") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  if (!text.empty()) {
    try {
      inv.input = berkp::Json::parse(text);
    } catch (const berkp::Json::parse_error& e) {
      std::cout << berkp::Json{{"error", "ParseError"}, {"context", e.what()}}.dump() << "\n";
      return 1;
    }
  }
  berkp::Outcome out = berkp::run(inv);
  if (out_path.empty()) {
    std::cout << out.output;
  } else {
    std::ofstream f(out_path);
    f << out.output;
  }
  return out.status;
}
