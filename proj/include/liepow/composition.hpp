#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "liepow/root_system.hpp"
#include "liepow/weight_multiset.hpp"

namespace liepow {

// Composition factors of Weyl modules V(lambda) at particular primes, read from
// the text format
//   TYPE RANK p : c1,...,cl -> c1,...,cl * mult ; c1,...,cl * mult ...
// with '#' starting a comment.
class ModularTable {
 public:
  using Factors = std::vector<std::pair<Weight, std::uint64_t>>;

  static ModularTable load(const std::string& path);
  // Parses and validates; errors name the source and line.
  static ModularTable parse(std::istream& in, const std::string& source_name);

  // nullptr when the table has no row for lambda.
  const Factors* row(char type, std::size_t rank, std::uint32_t p, const Weight& lambda) const;
  bool covers(char type, std::size_t rank, std::uint32_t p) const;
  std::size_t row_count() const;

 private:
  using Key = std::tuple<char, std::size_t, std::uint32_t>;
  std::map<Key, std::map<Weight, Factors>> rows_;
};

class MultiplicityOracle {
 public:
  static MultiplicityOracle freudenthal(RootSystemPtr rs, const FreudenthalCache* cache = nullptr);
  static MultiplicityOracle modular(RootSystemPtr rs, std::uint32_t p,
                                    std::shared_ptr<const ModularTable> table,
                                    const FreudenthalCache* cache = nullptr);

  const RootSystemPtr& root_system() const { return rs_; }
  bool is_modular() const { return prime_.has_value(); }
  std::optional<std::uint32_t> prime() const { return prime_; }
  std::string describe() const;

  // Weights of the Weyl module V(lambda).
  WeightMultiset weyl_module(const Weight& lambda) const;
  // Weights of the irreducible L(lambda); throws std::runtime_error when
  // modular data is missing.
  WeightMultiset irreducible(const Weight& lambda) const;
  std::uint64_t irreducible_dim(const Weight& lambda) const;

 private:
  MultiplicityOracle(RootSystemPtr rs, std::optional<std::uint32_t> p,
                     std::shared_ptr<const ModularTable> table, const FreudenthalCache* cache);

  WeightMultiset weyl_locked(const Weight& lambda) const;
  WeightMultiset irreducible_locked(const Weight& lambda, std::vector<Weight>& stack) const;

  RootSystemPtr rs_;
  std::optional<std::uint32_t> prime_;
  std::shared_ptr<const ModularTable> table_;
  const FreudenthalCache* cache_;

  struct Memo {
    std::mutex mutex;
    std::unordered_map<Weight, WeightMultiset, WeightHash> weyl;
    std::unordered_map<Weight, WeightMultiset, WeightHash> irreducible;
  };
  std::shared_ptr<Memo> memo_;
};

WeightMultiset irreducible_multiset(const MultiplicityOracle& oracle, const Weight& lambda);

struct FactorEntry {
  Weight lambda;
  std::uint64_t dim = 0;
  std::uint64_t multiplicity = 0;
  bool operator==(const FactorEntry&) const = default;
};

struct CompositionFactors {
  std::vector<FactorEntry> entries;

  std::uint64_t total_dim() const;
  bool multiplicity_free() const;
  bool operator==(const CompositionFactors&) const = default;
};

enum class TieBreak { LexLargest, LexSmallest };

// Repeatedly removes the weights of L(lambda) for a dominance-maximal lambda.
// Throws std::domain_error when the target is not closed under the Weyl group
// or the oracle's multisets do not fit, and std::logic_error if the factors
// fail to reconstruct the target.
CompositionFactors peel(const WeightMultiset& target, const MultiplicityOracle& oracle,
                        TieBreak tie_break = TieBreak::LexLargest);

enum class LiePower { A2, L3 };
std::string to_string(LiePower power);

// Lambda(A^2 V) or Lambda(L^3 V) for V = L(lambda) under the oracle.
WeightMultiset lie_power_weights(const MultiplicityOracle& oracle, const Weight& lambda,
                                 LiePower power);

struct PrimeRegime {
  std::string label;                 // e.g. "p=3", "p>5"
  std::optional<std::uint32_t> prime;  // nullopt: large primes, Weyl modules are irreducible
};

struct TableTarget {
  std::string id;
  char type;
  std::size_t rank;
  Weight module_weight;
  LiePower power;
  std::vector<PrimeRegime> regimes;
};

struct TableRow {
  std::string target_id;
  PrimeRegime regime;
  std::optional<CompositionFactors> factors;
  std::string diagnostic;  // set when the row was skipped
};

// The exterior-square and third-Lie-power decompositions of minimal modules
// that the library reproduces, each with its prime regimes.
std::vector<TableTarget> known_targets();

std::vector<TableRow> table_suite(const TableTarget& target,
                                  std::shared_ptr<const ModularTable> table,
                                  const FreudenthalCache* cache = nullptr,
                                  TieBreak tie_break = TieBreak::LexLargest);

}  // namespace liepow
