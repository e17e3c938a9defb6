#include <doctest.h>

#include <sstream>

#include "liepow/commands.hpp"
#include "liepow/composition.hpp"
#include "liepow/weight_syntax.hpp"

using namespace liepow;

namespace {

ModularTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return ModularTable::parse(in, "inline");
}

std::shared_ptr<const ModularTable> bundled() {
  static auto table = std::make_shared<const ModularTable>(ModularTable::load(bundled_modular_data()));
  return table;
}

// Sum of the irreducible weight multisets, each counted with its multiplicity.
WeightMultiset recompose(const MultiplicityOracle& oracle, const CompositionFactors& cf) {
  WeightMultiset total(oracle.root_system());
  for (const auto& e : cf.entries) {
    const WeightMultiset irr = oracle.irreducible(e.lambda);
    for (std::uint64_t k = 0; k < e.multiplicity; ++k) total = union_of(total, irr);
  }
  return total;
}

}  // namespace

TEST_SUITE("comp-factors") {

TEST_CASE("G2 exterior square at generic primes") {
  const auto rs = build_root_system('G', 2);
  const auto oracle = MultiplicityOracle::freudenthal(rs);
  const auto target = lie_power_weights(oracle, parse_weight("1,0", 2), LiePower::A2);
  CHECK(target.size() == 21);
  const auto cf = peel(target, oracle);
  REQUIRE(cf.entries.size() == 2);
  CHECK(cf.entries[0] == FactorEntry{parse_weight("λ2", 2), 14, 1});
  CHECK(cf.entries[1] == FactorEntry{parse_weight("λ1", 2), 7, 1});
  CHECK(cf.multiplicity_free());
  CHECK(cf.total_dim() == 21);
}

TEST_CASE("G2 exterior square at p = 3") {
  const auto rs = build_root_system('G', 2);
  const auto oracle = MultiplicityOracle::modular(rs, 3, bundled());
  CHECK(oracle.irreducible_dim(parse_weight("λ2", 2)) == 7);
  const auto cf = peel(lie_power_weights(oracle, parse_weight("λ1", 2), LiePower::A2), oracle);
  REQUIRE(cf.entries.size() == 2);
  CHECK(cf.entries[1] == FactorEntry{parse_weight("λ1", 2), 7, 2});
  CHECK_FALSE(cf.multiplicity_free());
}

TEST_CASE("every known target reconstructs and is independent of the tie-break") {
  for (const auto& target : known_targets()) {
    CAPTURE(target.id);
    const auto rs = build_root_system(target.type, target.rank);
    const auto a = table_suite(target, bundled(), nullptr, TieBreak::LexLargest);
    const auto b = table_suite(target, bundled(), nullptr, TieBreak::LexSmallest);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CAPTURE(a[i].regime.label);
      REQUIRE(a[i].factors.has_value());
      CHECK(a[i].factors == b[i].factors);
      const auto oracle = a[i].regime.prime ? MultiplicityOracle::modular(rs, *a[i].regime.prime, bundled())
                                            : MultiplicityOracle::freudenthal(rs);
      const auto target_weights = lie_power_weights(oracle, target.module_weight, target.power);
      CHECK(recompose(oracle, *a[i].factors) == target_weights);
      // Factors are listed in descending dominance-compatible order.
      for (std::size_t j = 1; j < a[i].factors->entries.size(); ++j)
        CHECK_FALSE(dominance_leq(*rs, a[i].factors->entries[j - 1].lambda, a[i].factors->entries[j].lambda));
    }
  }
}

TEST_CASE("modular oracle requires coverage") {
  const auto rs = build_root_system('E', 7);
  CHECK_THROWS_AS(MultiplicityOracle::modular(rs, 13, bundled()), std::runtime_error);
  CHECK_THROWS_AS(MultiplicityOracle::modular(rs, 7, nullptr), std::runtime_error);
  const auto oracle = MultiplicityOracle::modular(rs, 7, bundled());
  CHECK_THROWS_AS(oracle.irreducible(parse_weight("λ3+λ4", 7)), std::runtime_error);
}

TEST_CASE("peel rejects multisets that are not Weyl-closed") {
  const auto rs = build_root_system('G', 2);
  const auto oracle = MultiplicityOracle::freudenthal(rs);
  WeightMultiset m = oracle.weyl_module(parse_weight("λ1", 2));
  m.remove(parse_weight("λ1", 2));
  m.add(Weight(std::vector<int>{2, -1}));
  CHECK_THROWS_AS(peel(m, oracle), std::domain_error);
}

TEST_CASE("modular table validation") {
  SUBCASE("well-formed rows load") {
    const auto t = parse_table("# comment\nG 2 3 : 1,0 -> 1,0 * 1\nG 2 3 : 0,1 -> 0,1 * 1 ; 1,0 * 1  # trailing\n");
    CHECK(t.row_count() == 2);
    CHECK(t.covers('G', 2, 3));
    CHECK_FALSE(t.covers('G', 2, 5));
    REQUIRE(t.row('G', 2, 3, parse_weight("0,1", 2)) != nullptr);
    CHECK(t.row('G', 2, 3, parse_weight("2,0", 2)) == nullptr);
  }
  SUBCASE("top factor must appear once") {
    CHECK_THROWS(parse_table("G 2 3 : 1,0 -> 1,0 * 2\n"));
    CHECK_THROWS(parse_table("G 2 3 : 0,1 -> 1,0 * 1\nG 2 3 : 1,0 -> 1,0 * 1\n"));
  }
  SUBCASE("co-factors must lie strictly below") {
    CHECK_THROWS(parse_table("G 2 3 : 1,0 -> 1,0 * 1 ; 0,1 * 1\nG 2 3 : 0,1 -> 0,1 * 1\n"));
  }
  SUBCASE("co-factors need their own rows") {
    CHECK_THROWS(parse_table("G 2 3 : 0,1 -> 0,1 * 1 ; 1,0 * 1\n"));
  }
  SUBCASE("factor dimensions must fit") {
    // V(lambda2) has dimension 14, so removing two copies of the 7 leaves nothing for the top.
    CHECK_THROWS(parse_table("G 2 3 : 1,0 -> 1,0 * 1\nG 2 3 : 0,1 -> 0,1 * 1 ; 1,0 * 2\n"));
  }
  SUBCASE("syntax errors name the line") {
    try {
      parse_table("G 2 3 : 1,0 -> 1,0 * 1\nG 2 3 1,0 -> 1,0\n");
      FAIL("expected an error");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("inline") != std::string::npos);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS(parse_table("G 2 2 : 1,0 -> 1,0 * 1\n"));
    CHECK_THROWS(parse_table("G 2 3 : 1,0,0 -> 1,0,0 * 1\n"));
    CHECK_THROWS(parse_table("Q 2 3 : 1,0 -> 1,0 * 1\n"));
  }
  SUBCASE("bundled data loads") { CHECK(bundled()->row_count() > 40); }
}

}
