#include <doctest.h>

#include "liepow/root_system.hpp"
#include "liepow/weight_multiset.hpp"
#include "liepow/weight_syntax.hpp"

using namespace liepow;

namespace {

WeightMultiset module(const RootSystemPtr& rs, const std::string& weight) {
  return expand_orbits(rs, freudenthal(*rs, parse_weight(weight, rs->rank())));
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("weight-multiset") {

TEST_CASE("sizes of tensor and exterior powers") {
  for (auto [type, rank, weight] : std::vector<std::tuple<char, std::size_t, std::string>>{
           {'G', 2, "λ1"}, {'G', 2, "λ2"}, {'F', 4, "λ4"}, {'E', 6, "λ1"}, {'B', 3, "λ3"}}) {
    const auto rs = build_root_system(type, rank);
    const auto v = module(rs, weight);
    const auto n = v.size();
    CHECK(tensor(v, v).size() == n * n);
    CHECK(exterior_power(v, 2).size() == binom(n, 2));
    CHECK(exterior_power(v, 3).size() == binom(n, 3));
    CHECK(lie3_multiset(v).size() == (n * n * n - n) / 3);
    CHECK(frobenius_twist(v, 5, 1).size() == n);
    CHECK(union_of(v, v).size() == 2 * n);
    CHECK(subtract(union_of(v, v), v) == v);
  }
}

TEST_CASE("weights of A^2 V are pairwise sums of distinct positions") {
  const auto rs = build_root_system('G', 2);
  const auto v = module(rs, "λ1");
  const auto ex = v.expanded();
  WeightMultiset brute(rs);
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = i + 1; j < ex.size(); ++j) brute.add(ex[i] + ex[j]);
  CHECK(exterior_power(v, 2) == brute);

  WeightMultiset cube(rs);
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = i + 1; j < ex.size(); ++j)
      for (std::size_t k = j + 1; k < ex.size(); ++k) cube.add(ex[i] + ex[j] + ex[k]);
  CHECK(exterior_power(v, 3) == cube);
  CHECK(lie3_multiset(v) == subtract(tensor(brute, v), cube));
}

TEST_CASE("multiset bookkeeping") {
  const auto rs = build_root_system('A', 2);
  WeightMultiset m(rs);
  const Weight a(std::vector<int>{1, 0}), b(std::vector<int>{0, 1});
  m.add(a, 3);
  m.add(b);
  CHECK(m.size() == 4);
  CHECK(m.count(a) == 3);
  m.remove(a, 2);
  CHECK(m.count(a) == 1);
  CHECK_THROWS_AS(m.remove(b, 2), std::domain_error);
  CHECK_THROWS_AS(subtract(m, union_of(m, m)), std::domain_error);
  WeightMultiset twisted = frobenius_twist(m, 3, 1);
  CHECK(twisted.count(Weight(std::vector<int>{3, 0})) == 1);
  CHECK(twisted.count(Weight(std::vector<int>{0, 3})) == 1);
  const auto sorted = m.sorted();
  CHECK(sorted.size() == 2);
}

TEST_CASE("lie3 needs at least two weights") {
  const auto rs = build_root_system('A', 1);
  WeightMultiset one(rs);
  one.add(Weight(std::vector<int>{1}));
  CHECK_THROWS(lie3_multiset(one));
  WeightMultiset two = union_of(one, one);
  CHECK(lie3_multiset(two).size() == 2);
}

}
