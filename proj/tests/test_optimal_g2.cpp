#include <doctest.h>

#include "liepow/lie_basis.hpp"
#include "liepow/optimal_g2.hpp"
#include "support.hpp"

using namespace liepow;
using namespace testing;

namespace {

MatModule g2(std::uint32_t p) { return load_generators(g2_generator_path(p)); }

}  // namespace

TEST_SUITE("p-group-forge") {

TEST_CASE("bundled generators pass validation") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CAPTURE(p);
    const auto checks = validate_g2_module(g2(p));
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(all_passed(checks));
  }
}

TEST_CASE("validation rejects other groups") {
  std::mt19937_64 rng(51);
  PrimeField f(5);
  const MatModule gl(f, 7, {random_invertible(f, 7, rng), random_invertible(f, 7, rng)});
  CHECK_FALSE(all_passed(validate_g2_module(gl)));
  CHECK_THROWS_AS(build_optimal_g2(gl, G2Variant::Normalizer), std::runtime_error);
}

TEST_CASE("normalizer construction") {
  for (std::uint32_t p : {5u, 7u}) {
    CAPTURE(p);
    const auto built = build_optimal_g2(p, G2Variant::Normalizer);
    const auto s = structure_report(built.group);
    CHECK(s.order_exponent == 14);
    CHECK(s.rank == 7);
    CHECK(s.nilpotency_class == 2);
    CHECK(s.exponent_p_class == 2);
    CHECK(s.exponent == p);
    CHECK(built.submodule14.dim() == 14);
    CHECK(kernel(built.theta) == built.submodule14);
    for (const auto& g : built.v.gens()) CHECK(stabilizes(g, built.submodule14, InducedAction::ExteriorSquare));
    // scalars act on A^2 V by mu^2 and stabilize every subspace
    CHECK(stabilizes(FMatrix::scalar(built.v.field(), 7, 2), built.submodule14, InducedAction::ExteriorSquare));
  }
}

TEST_CASE("a random matrix does not stabilize the 14-dimensional submodule") {
  std::mt19937_64 rng(52);
  const auto built = build_optimal_g2(5, G2Variant::Normalizer);
  const auto g = random_invertible(built.v.field(), 7, rng);
  CHECK_FALSE(stabilizes(g, built.submodule14, InducedAction::ExteriorSquare));
  CHECK_THROWS_AS(is_automorphism_sample(g, built.group, 5, 1), NotStabilized);
}

TEST_CASE("group-itself construction") {
  for (std::uint32_t p : {5u, 7u}) {
    CAPTURE(p);
    const auto built = build_optimal_g2(p, G2Variant::GroupItself);
    const auto& e = std::get<EStarGroup>(built.group);
    const auto s = structure_report(built.group);
    CHECK(s.order_exponent == 14);
    CHECK(s.rank == 7);
    CHECK(s.nilpotency_class == 2);
    CHECK(s.exponent == std::uint64_t(p) * p);
    CHECK(built.graph.dim() == 21);
    const auto f = built.v.field();
    // M meets neither summand in a way that forces abelian or exponent p
    std::vector<FVector> v_rows, l2_rows;
    for (std::size_t i = 0; i < 7; ++i) v_rows.push_back(unit(28, i));
    for (std::size_t i = 7; i < 28; ++i) l2_rows.push_back(unit(28, i));
    const auto v_part = Subspace::span(f, 28, v_rows), l2_part = Subspace::span(f, 28, l2_rows);
    CHECK(intersect(built.graph, v_part).dim() == 0);
    CHECK(intersect(built.graph, l2_part).dim() == 14);
    for (const auto& g : built.v.gens()) CHECK(stabilizes(e.frattini_action(g), built.graph, InducedAction::Natural));
    for (Residue mu = 2; mu < p; ++mu)
      CHECK_FALSE(stabilizes(e.frattini_action(FMatrix::scalar(f, 7, mu)), built.graph, InducedAction::Natural));
    CHECK(stabilizes(e.frattini_action(FMatrix::scalar(f, 7, 1)), built.graph, InducedAction::Natural));
    for (std::size_t i = 0; i < built.v.gens().size(); ++i)
      CHECK(is_automorphism_sample(built.v.gens()[i], built.group, 30, 10 + i));
  }
}

TEST_CASE("p = 3 builds on the uniserial lattice") {
  const auto built = build_optimal_g2(3, G2Variant::Normalizer);
  CHECK(built.a2_lattice.shape == LatticeShape::Uniserial);
  const auto s = structure_report(built.group);
  CHECK(s.order_exponent == 14);
  CHECK(s.exponent == 3);
}

}
