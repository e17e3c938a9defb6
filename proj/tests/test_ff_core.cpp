#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "liepow/linalg.hpp"
#include "liepow/prime_field.hpp"
#include "liepow/subspace.hpp"
#include "support.hpp"

using namespace liepow;
using namespace testing;

namespace {

// Leibniz expansion.
Residue leibniz_det(const FMatrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Residue total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Residue term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_SUITE("ff-core") {

TEST_CASE("field construction rejects non-odd-primes") {
  for (std::uint32_t p : {0u, 1u, 2u, 9u, 15u, 1u << 30}) CHECK_THROWS_AS(PrimeField{p}, std::invalid_argument);
  CHECK_NOTHROW(PrimeField{3});
  CHECK_NOTHROW(PrimeField{1'000'003});
}

TEST_CASE("field arithmetic against brute force") {
  for (std::uint32_t p : {3u, 7u, 19u}) {
    PrimeField f(p);
    for (Residue a = 1; a < p; ++a) {
      Residue brute = 0;
      for (Residue b = 1; b < p; ++b)
        if ((a * b) % p == 1) brute = b;
      CHECK(f.inv(a) == brute);
      CHECK(f.pow(a, p - 1) == 1);
    }
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.reduce(-static_cast<std::int64_t>(p) * 5 - 2) == p - 2);
    CHECK_THROWS(f.inv(0));
  }
}

TEST_CASE("rref is canonical under row operations") {
  std::mt19937_64 rng(11);
  PrimeField f(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    auto m = random_matrix(f, r, c, rng);
    if (trial % 3 == 0) m = random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng);
    const auto e = rref(m);
    CHECK(rref(random_invertible(f, r, rng) * m).matrix == e.matrix);
    CHECK(rref(e.matrix).matrix == e.matrix);
    CHECK(e.rank == e.pivots.size());
    for (std::size_t i = 0; i < e.rank; ++i) {
      CHECK(e.matrix(i, e.pivots[i]) == 1);
      for (std::size_t k = 0; k < r; ++k)
        if (k != i) CHECK(e.matrix(k, e.pivots[i]) == 0);
    }
  }
}

TEST_CASE("rank-nullity and kernel against enumeration") {
  std::mt19937_64 rng(12);
  PrimeField f(3);
  const auto vectors4 = all_vectors(f, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t c = 1 + rng() % 5;
    auto m = random_matrix(f, 4, c, rng);
    if (trial % 2) m = random_matrix(f, 4, 1, rng) * random_matrix(f, 1, c, rng);
    const auto k = kernel(m);
    CHECK(rank(m) + k.dim() == m.rows());
    std::size_t zeros = 0;
    for (const auto& v : vectors4) {
      const bool in_kernel = is_zero(vecmat(v, m));
      zeros += in_kernel;
      CHECK(k.contains(v) == in_kernel);
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k.dim(); ++i) expected *= 3;
    CHECK(zeros == expected);
  }
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(13);
  PrimeField f(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
    CHECK(determinant(a) == leibniz_det(a));
    CHECK(determinant(a * b) == f.mul(determinant(a), determinant(b)));
    const auto inv = inverse(a);
    CHECK(inv.has_value() == (determinant(a) != 0));
    if (inv) {
      CHECK(a * *inv == FMatrix::identity(f, n));
      CHECK(*inv * a == FMatrix::identity(f, n));
    }
  }
  FMatrix singular(f, 3, 3);
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("kronecker product is multiplicative") {
  std::mt19937_64 rng(14);
  PrimeField f(5);
  const auto a = random_matrix(f, 2, 2, rng), b = random_matrix(f, 3, 3, rng);
  const auto c = random_matrix(f, 2, 2, rng), d = random_matrix(f, 3, 3, rng);
  CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
}

TEST_CASE("subspace canonical form and membership") {
  std::mt19937_64 rng(15);
  PrimeField f(3);
  const auto vectors = all_vectors(f, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FVector> gens;
    for (std::size_t i = 0; i < 1 + rng() % 3; ++i) gens.push_back(random_vector(f, 4, rng));
    const auto s = Subspace::span(f, 4, gens);
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    shuffled.push_back(gens[0]);
    CHECK(Subspace::span(f, 4, shuffled) == s);

    // membership by enumerating all combinations of the generators
    std::vector<FVector> members;
    for (const auto& coeffs : all_vectors(f, gens.size())) {
      FVector v(4, 0);
      for (std::size_t i = 0; i < gens.size(); ++i) axpy(f, v, coeffs[i], gens[i]);
      members.push_back(v);
    }
    for (const auto& v : vectors)
      CHECK(s.contains(v) == (std::find(members.begin(), members.end(), v) != members.end()));
  }
}

TEST_CASE("coset_reduce picks one representative per coset") {
  std::mt19937_64 rng(16);
  PrimeField f(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_subspace(f, 6, rng() % 5, rng);
    const auto v = random_vector(f, 6, rng);
    const auto r = s.coset_reduce(v);
    FVector diff(6);
    for (std::size_t i = 0; i < 6; ++i) diff[i] = f.sub(v[i], r[i]);
    CHECK(s.contains(diff));
    CHECK(s.coset_reduce(r) == r);
    for (auto piv : s.pivots()) CHECK(r[piv] == 0);
    FVector w = v;
    for (std::size_t i = 0; i < s.dim(); ++i) axpy(f, w, static_cast<Residue>(rng() % 5), s.basis().row(i));
    CHECK(s.coset_reduce(w) == r);
    const auto c = s.coordinates(diff);
    FVector back(6, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) axpy(f, back, c[i], s.basis().row(i));
    CHECK(back == diff);
    CHECK(s.non_pivots().size() + s.dim() == 6);
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(17);
  PrimeField f(3);
  const auto vectors = all_vectors(f, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_subspace(f, 4, rng() % 4, rng), b = random_subspace(f, 4, rng() % 4, rng);
    const auto s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(contains(s, a));
    CHECK(contains(s, b));
    CHECK(contains(a, i));
    CHECK(contains(b, i));
    for (const auto& v : vectors) CHECK(i.contains(v) == (a.contains(v) && b.contains(v)));
  }
  CHECK(Subspace::zero(f, 3).dim() == 0);
  CHECK(Subspace::full(f, 3).dim() == 3);
}

TEST_CASE("solve_linear") {
  std::mt19937_64 rng(18);
  PrimeField f(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto a = random_matrix(f, r, c, rng);
    const auto x = random_vector(f, c, rng);
    const auto b = vecmat(x, a.transpose());
    const auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(vecmat(sol->particular, a.transpose()) == b);
    CHECK(sol->homogeneous.dim() + rank(a) == c);
    for (std::size_t i = 0; i < sol->homogeneous.dim(); ++i)
      CHECK(is_zero(vecmat(sol->homogeneous.basis_vector(i), a.transpose())));
  }
  FMatrix a(f, 2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  CHECK_FALSE(solve_linear(a, FVector{1, 2}).has_value());
}

}
