#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liepow/linalg.hpp"
#include "liepow/mat_module.hpp"
#include "liepow/subspace.hpp"

namespace testing {

using namespace liepow;

inline FVector random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  FVector v(n);
  for (auto& x : v) x = static_cast<Residue>(rng() % f.prime());
  return v;
}

inline FMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % f.prime());
  return m;
}

inline FMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(f, n, n, rng);
    if (determinant(m) != 0) return m;
  }
}

// All vectors of F_p^n, for brute-force oracles on tiny spaces.
inline std::vector<FVector> all_vectors(const PrimeField& f, std::size_t n) {
  std::vector<FVector> out;
  FVector v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == f.prime()) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Subspace random_subspace(const PrimeField& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<FVector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(f, n, rng));
  return Subspace::span(f, n, rows);
}

inline FVector unit(std::size_t n, std::size_t i) {
  FVector e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace testing
