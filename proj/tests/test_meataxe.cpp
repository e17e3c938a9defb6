#include <doctest.h>

#include <set>

#include "liepow/meataxe.hpp"
#include "liepow/optimal_g2.hpp"
#include "support.hpp"

using namespace liepow;
using namespace testing;

namespace {

MatModule g2(std::uint32_t p) { return load_generators(g2_generator_path(p)); }

// Irreducibility of a 3-dimensional module by enumerating all lines of the
// module and of its dual.
bool brute_irreducible_dim3(const MatModule& m) {
  const auto& f = m.field();
  auto has_fixed_line = [&](const std::vector<FMatrix>& gens) {
    for (const auto& v : all_vectors(f, 3)) {
      if (is_zero(v)) continue;
      const auto line = Subspace::span(f, 3, {v});
      bool fixed = true;
      for (const auto& g : gens) fixed &= line.contains(vecmat(v, g));
      if (fixed) return true;
    }
    return false;
  };
  std::vector<FMatrix> dual;
  for (const auto& g : m.gens()) dual.push_back(g.transpose());
  return !has_fixed_line(m.gens()) && !has_fixed_line(dual);
}

// Dimension of Hom(m, n) by enumerating all matrices (tiny cases only).
std::size_t brute_hom_dim(const MatModule& m, const MatModule& n) {
  const auto& f = m.field();
  std::size_t count = 0;
  for (const auto& entries : all_vectors(f, m.dim() * n.dim())) {
    FMatrix t(f, m.dim(), n.dim());
    for (std::size_t i = 0; i < entries.size(); ++i) t(i / n.dim(), i % n.dim()) = entries[i];
    bool ok = true;
    for (std::size_t g = 0; g < m.gens().size() && ok; ++g) ok = m.gens()[g] * t == t * n.gens()[g];
    count += ok;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= f.prime();
    ++dim;
  }
  return dim;
}

}  // namespace

TEST_SUITE("mat-module") {

TEST_CASE("Norton test agrees with enumeration on small modules") {
  std::mt19937_64 rng(31);
  PrimeField f(3);
  int irreducible = 0, reducible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FMatrix> gens;
    const std::size_t ngens = 1 + rng() % 2;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_invertible(f, 3, rng));
    const MatModule m(f, 3, gens);
    const auto result = is_irreducible(m);
    REQUIRE(result.verdict != Verdict::Inconclusive);
    const bool brute = brute_irreducible_dim3(m);
    CHECK((result.verdict == Verdict::Irreducible) == brute);
    if (result.verdict == Verdict::Reducible) {
      REQUIRE(result.witness.has_value());
      CHECK(result.witness->dim() > 0);
      CHECK(result.witness->dim() < 3);
      CHECK(is_invariant(m, *result.witness));
    }
    (brute ? irreducible : reducible)++;
  }
  CHECK(irreducible > 5);
  CHECK(reducible > 5);
}

TEST_CASE("G2 modules") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto v = g2(p);
    CHECK(is_irreducible(v).verdict == Verdict::Irreducible);
    const auto vv = direct_sum(v, v);
    const auto r = is_irreducible(vv);
    CHECK(r.verdict == Verdict::Reducible);
    REQUIRE(r.witness.has_value());
    CHECK(is_invariant(vv, *r.witness));
  }
}

TEST_CASE("hom spaces against enumeration") {
  std::mt19937_64 rng(32);
  PrimeField f(3);
  for (int trial = 0; trial < 15; ++trial) {
    const MatModule m(f, 2, {random_invertible(f, 2, rng)});
    const MatModule n(f, 2, {trial % 3 == 0 ? m.gens()[0] : random_invertible(f, 2, rng)});
    const auto homs = hom_space(m, n);
    CHECK(homs.size() == brute_hom_dim(m, n));
    for (const auto& t : homs) CHECK(m.gens()[0] * t == t * n.gens()[0]);
  }
  const auto v = g2(5);
  CHECK(hom_space(v, v).size() == 1);
  CHECK(hom_space(direct_sum(v, v), v).size() == 2);
}

TEST_CASE("isomorphisms are found between conjugate modules") {
  std::mt19937_64 rng(33);
  const auto v = g2(7);
  const auto c = random_invertible(v.field(), 7, rng);
  const auto ci = *inverse(c);
  std::vector<FMatrix> conj;
  for (const auto& g : v.gens()) conj.push_back(ci * g * c);
  const MatModule w(v.field(), 7, conj);
  const auto iso = find_isomorphism(v, w, rng);
  REQUIRE(iso.has_value());
  CHECK(determinant(*iso) != 0);
  for (std::size_t i = 0; i < conj.size(); ++i) CHECK(v.gens()[i] * *iso == *iso * w.gens()[i]);
  CHECK_FALSE(find_isomorphism(v, exterior_square(v), rng).has_value());
}

TEST_CASE("composition factors of A^2 V for G2") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CAPTURE(p);
    const auto v = g2(p);
    const auto cf = composition_factors_matrix(exterior_square(v));
    auto dims = cf.dims();
    std::sort(dims.begin(), dims.end());
    std::mt19937_64 rng(34);
    std::size_t copies_of_v = 0;
    for (const auto& f : cf.factors) copies_of_v += f.module.dim() == 7 && find_isomorphism(f.module, v, rng).has_value();
    if (p == 3) {
      CHECK(dims == std::vector<std::size_t>{7, 7, 7});
      CHECK(copies_of_v == 2);
      CHECK(cf.class_reps.size() == 2);
    } else {
      CHECK(dims == std::vector<std::size_t>{7, 14});
      CHECK(copies_of_v == 1);
    }
  }
}

TEST_CASE("submodule lattices") {
  SUBCASE("multiplicity-free for p = 5, 7") {
    for (std::uint32_t p : {5u, 7u}) {
      const auto lattice = socle_and_lattice(exterior_square(g2(p)));
      CHECK(lattice.shape == LatticeShape::MultiplicityFree);
      std::vector<std::size_t> dims;
      for (const auto& n : lattice.nodes) dims.push_back(n.dim());
      CHECK(dims == std::vector<std::size_t>{0, 7, 14, 21});
      using E = std::pair<std::size_t, std::size_t>;
      CHECK(lattice.edges == std::vector<E>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
      CHECK(lattice.largest_maximal().dim() == 14);
    }
  }
  SUBCASE("uniserial for p = 3") {
    const auto lattice = socle_and_lattice(exterior_square(g2(3)));
    CHECK(lattice.shape == LatticeShape::Uniserial);
    std::vector<std::size_t> dims;
    for (const auto& n : lattice.nodes) dims.push_back(n.dim());
    CHECK(dims == std::vector<std::size_t>{0, 7, 14, 21});
    for (std::size_t i = 1; i < lattice.nodes.size(); ++i) CHECK(contains(lattice.nodes[i], lattice.nodes[i - 1]));
    CHECK(lattice.largest_maximal().dim() == 14);
  }
  SUBCASE("V + V is neither multiplicity free nor uniserial") {
    const auto v = g2(5);
    CHECK_THROWS_AS(socle_and_lattice(direct_sum(v, v)), UnsupportedShape);
  }
  SUBCASE("every node is a submodule") {
    const auto a2 = exterior_square(g2(7));
    for (const auto& n : socle_and_lattice(a2).nodes) CHECK(is_invariant(a2, n));
  }
}

TEST_CASE("socle of a uniserial module is its bottom") {
  const auto v = g2(3);
  const auto a2 = exterior_square(v);
  const auto lattice = socle_and_lattice(a2);
  CHECK(socle(a2, lattice.factors.class_reps) == lattice.nodes[1]);
}

TEST_CASE("retry bound zero is inconclusive") {
  MeatAxeConfig config;
  config.retry_bound = 0;
  CHECK(is_irreducible(g2(5), config).verdict == Verdict::Inconclusive);
}

}
