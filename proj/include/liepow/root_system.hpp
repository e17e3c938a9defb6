#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liepow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight scaled(int k) const;

  auto operator<=>(const Weight&) const = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// "1,0,2" style rendering and the "λ1+2λ3" shorthand.
std::string to_string(const Weight& w);
std::string to_shorthand(const Weight& w);

class RootSystem {
 public:
  char type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  // (alpha_i, alpha_i) / 2 with short roots of squared length 2.
  const std::vector<int>& root_length_factors() const { return d_; }
  Weight rho() const { return Weight(std::vector<int>(rank_, 1)); }
  // Symmetric form on weights in the fundamental-weight basis.
  const std::vector<std::vector<Rational>>& form() const { return form_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inv_cartan_; }

  // Positive roots as weights, aligned with positive_roots().
  const std::vector<Weight>& positive_root_weights() const { return positive_root_weights_; }
  // Simple root alpha_i (0-based) in fundamental-weight coordinates: row i of the Cartan matrix.
  Weight simple_root(std::size_t i) const;
  // Root given in simple-root coordinates, as a weight.
  Weight root_weight(const std::vector<int>& root) const;
  // (mu, alpha) for alpha given in simple-root coordinates.
  std::int64_t pairing(const Weight& mu, const std::vector<int>& root) const;
  // Root-basis coordinates of a weight, by exact rational solve.
  std::vector<Rational> root_coordinates(const Weight& w) const;

  bool operator==(const RootSystem& o) const { return type_ == o.type_ && rank_ == o.rank_; }

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(char type, std::size_t rank);
  RootSystem() = default;

  char type_ = 'A';
  std::size_t rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_roots_;
  std::vector<Weight> positive_root_weights_;
  std::vector<int> d_;
  std::vector<std::vector<Rational>> form_;
  std::vector<std::vector<Rational>> inv_cartan_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Node labelling follows Bourbaki: for E the branch node 2 hangs off node 4,
// for B_n the last node is short, for C_n it is long, for F4 nodes 1,2 are
// long, for G2 node 1 is short. Throws std::invalid_argument on bad input.
RootSystemPtr build_root_system(char type, std::size_t rank);

// 1-based index i as in the usual notation.
Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& w);
// The dominant weight in the orbit of w.
Weight dominant_representative(const RootSystem& rs, const Weight& w);
// Sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);
std::uint64_t orbit_size(const RootSystem& rs, const Weight& w);
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);
BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

using DominantMultiplicities = std::map<Weight, std::uint64_t>;

// Optional memoization hook for freudenthal: lookup returns true and fills
// the result on a hit; store records a fresh result.
struct FreudenthalCache {
  std::function<bool(const RootSystem&, const Weight&, DominantMultiplicities&)> lookup;
  std::function<void(const RootSystem&, const Weight&, const DominantMultiplicities&)> store;
};

// Dominant weight multiplicities of the Weyl module V(lambda).
DominantMultiplicities freudenthal(const RootSystem& rs, const Weight& lambda,
                                   const FreudenthalCache* cache = nullptr);

void require_rank(const RootSystem& rs, const Weight& w);

}  // namespace liepow
