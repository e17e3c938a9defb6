#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liepow/linalg.hpp"

namespace liepow {

// A subspace of F_p^n held as its canonical reduced row echelon basis, so that
// equal subspaces compare equal.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient_dim);
  static Subspace full(PrimeField field, std::size_t ambient_dim);
  static Subspace span(const FMatrix& generators);
  static Subspace span(PrimeField field, std::size_t ambient_dim,
                       const std::vector<FVector>& generators);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const FVector& v) const;
  // Canonical representative of v + S: zero on every pivot column.
  FVector coset_reduce(FVector v) const;
  // Coordinates of v (which must lie in S) with respect to the basis rows.
  FVector coordinates(const FVector& v) const;
  // Columns that are not pivots; they index a basis of the quotient space.
  std::vector<std::size_t> non_pivots() const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(FMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// True when b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);

// Left kernel {v : v * m = 0}, a subspace of F_p^{rows(m)}.
Subspace kernel(const FMatrix& m);

struct LinearSolution {
  FVector particular;
  Subspace homogeneous;  // right null space of A
};

// Solves A x = b for column vector x. Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const FMatrix& a, const FVector& b);

}  // namespace liepow
