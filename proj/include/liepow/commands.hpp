#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "liepow/prime_field.hpp"
#include "liepow/report.hpp"
#include "liepow/subspace.hpp"

namespace liepow {

// Bad arguments or unreadable input; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FactorsArgs {
  char type = 'G';
  std::size_t rank = 2;
  std::string weight = "1,0";
  std::string prime_mode = "generic";  // "generic" or "p=N"
  std::string power = "a2";            // "a2" or "l3"
  std::string modular_data;            // empty: bundled file
};

struct ModuleArgs {
  std::string gens;
  std::string task = "factors";  // factors | lattice | forms
  std::string on = "v";          // v | a2 | l3
  bool expect_g2 = false;
};

struct PGroupArgs {
  std::size_t d = 3;
  std::uint32_t p = 5;
  std::string build = "gamma2";  // gamma2 | gamma3 | estar | optimal-g2-normalizer | optimal-g2-self
  std::string subspace;          // optional kernel subspace file
  std::string gens;              // generator file for the optimal-g2 builds; empty: bundled
};

std::string bundled_modular_data();

Report cmd_factors(const FactorsArgs& args, const RunConfig& config);
Report cmd_module(const ModuleArgs& args, const RunConfig& config);
Report cmd_pgroup(const PGroupArgs& args, const RunConfig& config);
// Every known weight-level target in every prime regime.
Report cmd_tables(const std::string& modular_data, const RunConfig& config);

// Subspace file: "ambient k" then k rows of ambient residues; '#' comments.
Subspace load_subspace(const std::string& path, const PrimeField& field, std::size_t ambient);
Subspace parse_subspace(std::istream& in, const std::string& source_name, const PrimeField& field,
                        std::size_t ambient);

}  // namespace liepow
