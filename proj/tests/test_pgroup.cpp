#include <doctest.h>

#include "liepow/lie_basis.hpp"
#include "liepow/mat_module.hpp"
#include "liepow/pgroup.hpp"
#include "support.hpp"

using namespace liepow;
using namespace testing;

namespace {

// [a, f] in the wedge basis: coefficient of [e_i, e_j] is a_i f_j - a_j f_i.
FVector wedge(const PrimeField& f, const FVector& a, const FVector& g) {
  const std::size_t d = a.size();
  FVector out(d * (d - 1) / 2, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      out[wedge_index(d, i, j)] = f.sub(f.mul(a[i], g[j]), f.mul(a[j], g[i]));
  return out;
}

// [[e_i, e_j], e_k] as a tensor, straight from [u, v] = u (x) v - v (x) u.
void add_bracket3(const PrimeField& f, std::size_t d, std::size_t i, std::size_t j, std::size_t k, Residue s,
                  FVector& t) {
  auto put = [&](std::size_t a, std::size_t b, std::size_t c, Residue v) {
    auto& x = t[(a * d + b) * d + c];
    x = f.add(x, f.mul(s, v));
  };
  put(i, j, k, 1);
  put(j, i, k, f.neg(1));
  put(k, i, j, f.neg(1));
  put(k, j, i, 1);
}

// Third component of the class-3 law, computed in V (x) V (x) V.
FVector gamma3_c_tensor(const PrimeField& f, std::size_t d, const Gamma3Element& x, const Gamma3Element& y,
                        const LiePowerBasis& lie) {
  FVector t = lie.l3_tensor(x.c);
  const auto th = lie.l3_tensor(y.c);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f.add(t[i], th[i]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto w = wedge_index(d, i, j);
        // 3([b, f] - [g, a])
        const Residue s = f.mul(3, f.sub(f.mul(x.b[w], y.a[k]), f.mul(y.b[w], x.a[k])));
        add_bracket3(f, d, i, j, k, s, t);
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // [a, f, f - a]
        const Residue s = f.mul(f.mul(x.a[i], y.a[j]), f.sub(y.a[k], x.a[k]));
        add_bracket3(f, d, i, j, k, s, t);
      }
  return t;
}

FVector scaled(const PrimeField& f, FVector v, Residue c) {
  for (auto& x : v) x = f.mul(x, c);
  return v;
}

}  // namespace

TEST_SUITE("p-group-forge") {

TEST_CASE("class-2 law against a direct wedge computation") {
  std::mt19937_64 rng(41);
  PrimeField f(5);
  const Gamma2Group g(f, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = g.random(rng), y = g.random(rng);
    const auto z = g.multiply(x, y);
    FVector a(4), b = wedge(f, x.a, y.a);
    for (std::size_t i = 0; i < 4; ++i) a[i] = f.add(x.a[i], y.a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = f.add(b[i], f.add(x.b[i], y.b[i]));
    CHECK(z.a == a);
    CHECK(z.b == b);
  }
}

TEST_CASE("class-3 law against a tensor computation") {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField f(p);
    const Gamma3Group g(f, 3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = g.random(rng), y = g.random(rng);
      const auto z = g.multiply(x, y);
      CHECK(g.lie().l3_tensor(z.c) == gamma3_c_tensor(f, 3, x, y, g.lie()));
    }
  }
}

TEST_CASE("associativity on 1000 random triples") {
  for (std::uint32_t p : {5u, 7u}) {
    std::mt19937_64 rng(43 + p);
    PrimeField f(p);
    const Gamma3Group g3(f, 3);
    const Gamma2Group g2(f, 3);
    const EStarGroup e(f, 3);
    bool ok3 = true, ok2 = true, oke = true;
    for (int i = 0; i < 1000; ++i) {
      const auto x = g3.random(rng), y = g3.random(rng), z = g3.random(rng);
      ok3 &= g3.multiply(g3.multiply(x, y), z) == g3.multiply(x, g3.multiply(y, z));
      const auto u = g2.random(rng), v = g2.random(rng), w = g2.random(rng);
      ok2 &= g2.multiply(g2.multiply(u, v), w) == g2.multiply(u, g2.multiply(v, w));
      const auto r = e.random(rng), s = e.random(rng), t = e.random(rng);
      oke &= e.multiply(e.multiply(r, s), t) == e.multiply(r, e.multiply(s, t));
    }
    CHECK(ok3);
    CHECK(ok2);
    CHECK(oke);
  }
}

TEST_CASE("commutator formulas on all basis tuples and random elements") {
  std::mt19937_64 rng(44);
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField f(p);
    const std::size_t d = 3;
    const Gamma2Group g2(f, d);
    const Gamma3Group g3(f, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(commutator2(g2, g2.generator(i), g2.generator(j)) ==
              g2.make(FVector(d, 0), scaled(f, wedge(f, unit(d, i), unit(d, j)), 2)));
        for (std::size_t k = 0; k < d; ++k) {
          FVector t(d * d * d, 0);
          add_bracket3(f, d, i, j, k, 12, t);
          const auto c = commutator3(g3, g3.generator(i), g3.generator(j), g3.generator(k));
          CHECK(is_zero(c.a));
          CHECK(is_zero(c.b));
          CHECK(g3.lie().l3_tensor(c.c) == t);
        }
      }
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = g2.random(rng), y = g2.random(rng);
      CHECK(commutator2(g2, x, y) == g2.make(FVector(d, 0), scaled(f, wedge(f, x.a, y.a), 2)));
      const auto u = g3.random(rng), v = g3.random(rng), w = g3.random(rng);
      CHECK(commutator3(g3, u, v, w) ==
            g3.make(FVector(d, 0), FVector(3, 0), scaled(f, g3.lie().bracket_vvv(u.a, v.a, w.a), 12)));
    }
  }
}

TEST_CASE("exponent-p laws") {
  std::mt19937_64 rng(45);
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField f(p);
    const Gamma2Group g2(f, 4);
    const Gamma3Group g3(f, 3);
    const EStarGroup e(f, 3);
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(g2.is_identity(power(g2, g2.random(rng), p)));
      CHECK(g3.is_identity(power(g3, g3.random(rng), p)));
      const auto x = e.random(rng);
      CHECK(e.is_identity(power(e, x, std::uint64_t(p) * p)));
      // x^p = (p m, 0) lies in the V-part of the Frattini subgroup
      const auto xp = power(e, x, p);
      const auto coords = e.frattini_coords(xp);
      for (std::size_t i = 0; i < 3; ++i) CHECK(coords[i] == x.m[i] % p);
      for (std::size_t i = 3; i < coords.size(); ++i) CHECK(coords[i] == 0);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK_FALSE(e.is_identity(power(e, e.generator(i), p)));
      CHECK(e.is_identity(power(e, e.generator(i), std::uint64_t(p) * p)));
    }
  }
}

TEST_CASE("universal groups") {
  PrimeField f(5);
  SUBCASE("orders") {
    for (std::size_t d = 2; d <= 5; ++d) {
      CHECK(Gamma2Group(f, d).order_exponent() == d + d * (d - 1) / 2);
      CHECK(Gamma3Group(f, d).order_exponent() == d + d * (d - 1) / 2 + (d * d * d - d) / 3);
      CHECK(EStarGroup(f, d).order_exponent() == 2 * d + d * (d - 1) / 2);
    }
  }
  SUBCASE("structure of the class-3 group") {
    const auto s = structure_report(QuotientPGroup(Gamma3Group(f, 3)));
    CHECK(s.order_exponent == 14);
    CHECK(s.rank == 3);
    CHECK(s.nilpotency_class == 3);
    CHECK(s.exponent_p_class == 3);
    CHECK(s.exponent == 5);
    CHECK(s.derived_dim == s.frattini_dim);
    CHECK(s.gamma3_dim == 8);
  }
  SUBCASE("p-covering group") {
    const auto s = structure_report(QuotientPGroup(EStarGroup(f, 3)));
    CHECK(s.order_exponent == 9);
    CHECK(s.rank == 3);
    CHECK(s.exponent == 25);
    CHECK(s.nilpotency_class == 2);
    CHECK(s.exponent_p_class == 2);
    CHECK(s.power_dim == 3);
    CHECK(s.derived_dim == 3);
    CHECK(s.frattini_dim == 6);
  }
  SUBCASE("class-3 law needs p > 3") { CHECK_THROWS_AS(Gamma3Group(PrimeField(3), 3), std::invalid_argument); }
}

TEST_CASE("dimension identities for quotients") {
  std::mt19937_64 rng(46);
  PrimeField f(7);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = 3 + trial % 2;
    const auto lie = LiePowerBasis::get(f, d);
    const auto u = random_subspace(f, lie->l2_dim(), rng() % lie->l2_dim(), rng);
    const auto s2 = structure_report(QuotientPGroup(Gamma2Group(f, d, u)));
    CHECK(s2.derived_dim == lie->l2_dim() - u.dim());
    CHECK(s2.frattini_dim == s2.derived_dim);
    CHECK(s2.order_exponent == d + lie->l2_dim() - u.dim());
    CHECK(s2.exponent == 7);
    CHECK(s2.nilpotency_class == 2);

    const auto w = random_subspace(f, lie->l3_dim(), rng() % lie->l3_dim(), rng);
    const auto s3 = structure_report(QuotientPGroup(Gamma3Group(f, d, w)));
    CHECK(s3.gamma3_dim == lie->l3_dim() - w.dim());
    CHECK(s3.derived_dim == s3.frattini_dim);
    CHECK(s3.frattini_dim == lie->l2_dim() + lie->l3_dim() - w.dim());
    CHECK(s3.nilpotency_class == 3);
  }
}

TEST_CASE("E* quotients on both sides of the exponent and abelian boundaries") {
  std::mt19937_64 rng(47);
  PrimeField f(5);
  const std::size_t d = 3, l2 = 3, n = d + l2;
  auto summand = [&](std::size_t from, std::size_t count) {
    std::vector<FVector> rows;
    for (std::size_t i = 0; i < count; ++i) rows.push_back(unit(n, from + i));
    return Subspace::span(f, n, rows);
  };
  const auto v_part = summand(0, d), l2_part = summand(d, l2);
  auto random_in = [&](const Subspace& part, std::size_t k) {
    std::vector<FVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
      FVector x(n, 0);
      for (std::size_t j = 0; j < part.dim(); ++j) axpy(f, x, static_cast<Residue>(rng() % 5), part.basis().row(j));
      rows.push_back(x);
    }
    return Subspace::span(f, n, rows);
  };
  auto is_abelian = [](const EStarGroup& g) {
    for (std::size_t i = 0; i < g.d(); ++i)
      for (std::size_t j = 0; j < g.d(); ++j)
        if (!g.is_identity(commutator2(g, g.generator(i), g.generator(j)))) return false;
    return true;
  };

  int containing_l2 = 0, missing_l2 = 0, containing_v = 0, missing_v = 0;
  while (containing_l2 < 20 || missing_l2 < 20 || containing_v < 20 || missing_v < 20) {
    // X = (random part of V) + L^2 V, proper
    auto x1 = sum(l2_part, random_in(v_part, rng() % d));
    if (x1.dim() < n && containing_l2 < 20) {
      const EStarGroup g(f, d, x1);
      CHECK(is_abelian(g));
      const auto s = structure_report(QuotientPGroup(g));
      CHECK(s.exponent == 25);
      CHECK(s.derived_dim == 0);
      ++containing_l2;
    }
    // X = V + (random part of L^2 V), proper
    auto x2 = sum(v_part, random_in(l2_part, rng() % l2));
    if (x2.dim() < n && containing_v < 20) {
      const EStarGroup g(f, d, x2);
      const auto s = structure_report(QuotientPGroup(g));
      CHECK(s.exponent == 5);
      CHECK(s.nilpotency_class <= 2);
      // isomorphic to P_{X cap L^2 V}: same invariants
      const auto meet = intersect(x2, l2_part);
      std::vector<FVector> rows;
      for (std::size_t i = 0; i < meet.dim(); ++i) {
        const auto r = meet.basis_vector(i);
        rows.emplace_back(r.begin() + d, r.end());
      }
      const auto t = structure_report(QuotientPGroup(Gamma2Group(f, d, Subspace::span(f, l2, rows))));
      CHECK(s.order_exponent == t.order_exponent);
      CHECK(s.nilpotency_class == t.nilpotency_class);
      CHECK(s.derived_dim == t.derived_dim);
      CHECK(s.frattini_dim == t.frattini_dim);
      ++containing_v;
    }
    // random proper X, classified by which summand it contains
    const auto x = random_subspace(f, n, 1 + rng() % (n - 1), rng);
    if (x.dim() == n) continue;
    const EStarGroup g(f, d, x);
    const bool has_l2 = contains(x, l2_part), has_v = contains(x, v_part);
    if (!has_l2 && missing_l2 < 20) {
      CHECK_FALSE(is_abelian(g));
      ++missing_l2;
    }
    if (!has_v && missing_v < 20) {
      CHECK(structure_report(QuotientPGroup(g)).exponent == 25);
      ++missing_v;
    }
    const auto s = structure_report(QuotientPGroup(g));
    CHECK(s.order_exponent == 2 * d + l2 - x.dim());
    CHECK(s.exponent_p_class == 2);
    CHECK(s.rank == d);
  }
}

TEST_CASE("automorphisms from GL(d, p)") {
  std::mt19937_64 rng(48);
  PrimeField f(5);
  const auto g = random_invertible(f, 3, rng);
  CHECK(is_automorphism_sample(g, QuotientPGroup(Gamma2Group(f, 3)), 50, 1));
  CHECK(is_automorphism_sample(g, QuotientPGroup(Gamma3Group(f, 3)), 50, 2));
  CHECK(is_automorphism_sample(g, QuotientPGroup(EStarGroup(f, 3)), 50, 3));
  // a subspace not stabilized by g
  const auto lie = LiePowerBasis::get(f, 3);
  Subspace u = Subspace::span(f, 3, {unit(3, 0)});
  while (stabilizes(g, u, InducedAction::ExteriorSquare)) u = random_subspace(f, 3, 1, rng);
  const Gamma2Group q(f, 3, u);
  CHECK_THROWS_AS(q.act(g, q.generator(0)), NotStabilized);
  CHECK_THROWS_AS(is_automorphism_sample(g, QuotientPGroup(q), 10, 4), NotStabilized);
}

TEST_CASE("element validation") {
  PrimeField f(5);
  const Gamma2Group g(f, 3);
  CHECK_THROWS_AS(g.make(FVector(2, 0), FVector(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(g.frattini_coords(g.generator(0)), std::invalid_argument);
}

}
