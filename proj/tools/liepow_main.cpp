#include <iostream>

#include <CLI11.hpp>

#include "liepow/commands.hpp"

int main(int argc, char** argv) {
  using namespace liepow;

  CLI::App app{"Composition factors of Lie powers and p-groups from modules of Lie type"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  app.add_option("--seed", config.seed, "Seed for all randomized steps")->capture_default_str();
  app.add_option("--retries", config.retry_bound, "MeatAxe retry bound")->capture_default_str();
  app.add_option("--samples", config.samples, "Random samples per check")->capture_default_str();
  app.add_option("--triples", config.triples, "Random triples for associativity")->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir, "Directory for the Freudenthal cache");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  FactorsArgs fa;
  std::string type = "G";
  auto* factors = app.add_subcommand("factors", "Composition factors of A^2 V or L^3 V from weights");
  factors->add_option("--type", type, "Root system type A-G")->required();
  factors->add_option("--rank", fa.rank, "Rank")->required();
  factors->add_option("--weight", fa.weight, "Highest weight: '1,0' or 'λ1+λ2'")->required();
  factors->add_option("--prime-mode", fa.prime_mode, "'generic' or 'p=N'")->capture_default_str();
  factors->add_option("--power", fa.power, "a2 or l3")->check(CLI::IsMember({"a2", "l3"}))->capture_default_str();
  factors->add_option("--modular-data", fa.modular_data, "Modular decomposition file (default: bundled)");

  ModuleArgs ma;
  auto* module = app.add_subcommand("module", "Matrix-level analysis of a module given by generators");
  module->add_option("--gens", ma.gens, "Generator file")->required();
  module->add_option("--task", ma.task, "factors, lattice or forms")
      ->check(CLI::IsMember({"factors", "lattice", "forms"}))
      ->capture_default_str();
  module->add_option("--on", ma.on, "v, a2 or l3")->check(CLI::IsMember({"v", "a2", "l3"}))->capture_default_str();
  module->add_flag("--expect-g2", ma.expect_g2, "Run the G2 validation battery on V");

  PGroupArgs pa;
  auto* pgroup = app.add_subcommand("pgroup", "Build a p-group and run its verification battery");
  pgroup->add_option("--d", pa.d, "Rank d")->capture_default_str();
  pgroup->add_option("--p", pa.p, "Odd prime p")->capture_default_str();
  pgroup->add_option("--build", pa.build, "gamma2, gamma3, estar, optimal-g2-normalizer or optimal-g2-self")
      ->check(CLI::IsMember({"gamma2", "gamma3", "estar", "optimal-g2-normalizer", "optimal-g2-self"}))
      ->capture_default_str();
  pgroup->add_option("--subspace", pa.subspace, "Kernel subspace file");
  pgroup->add_option("--gens", pa.gens, "G2 generator file (default: bundled)");

  std::string tables_data;
  auto* tables = app.add_subcommand("tables", "All known weight-level decompositions");
  tables->add_option("--modular-data", tables_data, "Modular decomposition file (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    config.format = parse_output_format(format);
    Report report;
    if (*factors) {
      if (type.size() != 1) throw UsageError("--type must be a single letter");
      fa.type = type[0];
      report = cmd_factors(fa, config);
    } else if (*module) {
      report = cmd_module(ma, config);
    } else if (*pgroup) {
      report = cmd_pgroup(pa, config);
    } else {
      report = cmd_tables(tables_data, config);
    }
    std::cout << render(report);
    return report.all_passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "liepow: " << e.what() << '\n';
    return 2;
  }
}
