#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liepow/root_system.hpp"

namespace liepow {

class WeightMultiset {
 public:
  using Counts = std::unordered_map<Weight, std::uint64_t, WeightHash>;

  explicit WeightMultiset(RootSystemPtr rs) : rs_(std::move(rs)) {}

  const RootSystemPtr& root_system() const { return rs_; }
  const Counts& counts() const { return counts_; }
  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::uint64_t count(const Weight& w) const;

  void add(const Weight& w, std::uint64_t k = 1);
  // Throws std::domain_error naming the weight when fewer than k copies exist.
  void remove(const Weight& w, std::uint64_t k = 1);

  // Lexicographically sorted entries, for deterministic output.
  std::vector<std::pair<Weight, std::uint64_t>> sorted() const;
  // Each weight repeated by its multiplicity, in sorted order.
  std::vector<Weight> expanded() const;

  bool operator==(const WeightMultiset& o) const;

 private:
  RootSystemPtr rs_;
  Counts counts_;
  std::uint64_t size_ = 0;
};

// Expands dominant multiplicities over full Weyl orbits.
WeightMultiset expand_orbits(RootSystemPtr rs, const DominantMultiplicities& dominant);

WeightMultiset tensor(const WeightMultiset& u, const WeightMultiset& v);
// n must be 2 or 3.
WeightMultiset exterior_power(const WeightMultiset& v, int n);
WeightMultiset frobenius_twist(const WeightMultiset& v, std::uint32_t p, unsigned n);
// Throws std::domain_error naming the offending weight when u is not contained in v.
WeightMultiset subtract(const WeightMultiset& v, const WeightMultiset& u);
// Weights of the third Lie power: A^2 V (x) V minus A^3 V.
WeightMultiset lie3_multiset(const WeightMultiset& v);
WeightMultiset union_of(const WeightMultiset& u, const WeightMultiset& v);

}  // namespace liepow
