#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "liepow/linalg.hpp"
#include "liepow/subspace.hpp"

namespace liepow {

// Coordinates for the Lie powers L^2 V and L^3 V of V = F_p^d.
// L^2 V has basis [e_i, e_j], i < j, in ascending lexicographic order.
// L^3 V is the span of all [[e_i, e_j], e_k] inside V (x) V (x) V, where the
// tensor e_a (x) e_b (x) e_c sits at index (a*d + b)*d + c; its basis is the
// reduced echelon basis of that span.
class LiePowerBasis {
 public:
  LiePowerBasis(PrimeField field, std::size_t d);
  // Shared instance per (p, d).
  static std::shared_ptr<const LiePowerBasis> get(PrimeField field, std::size_t d);

  const PrimeField& field() const { return field_; }
  std::size_t d() const { return d_; }
  std::size_t l2_dim() const { return d_ * (d_ - 1) / 2; }
  std::size_t l3_dim() const { return l3_.dim(); }
  const Subspace& l3_span() const { return l3_; }

  FVector bracket_vv(const FVector& a, const FVector& f) const;
  FVector bracket_l2_v(const FVector& b, const FVector& f) const;
  // Left-normed [[a, f], h].
  FVector bracket_vvv(const FVector& a, const FVector& f, const FVector& h) const;

  // [[e_i, e_j], e_k] as a tensor in V (x) V (x) V.
  FVector bracket_tensor(std::size_t i, std::size_t j, std::size_t k) const;
  // Throws std::invalid_argument when the tensor is not in L^3 V.
  FVector l3_coordinates(const FVector& tensor) const;
  FVector l3_tensor(const FVector& coords) const;

  // Induced action of g on L^3 V in these coordinates.
  FMatrix lie3_action(const FMatrix& g) const;
  // Isomorphism from the quotient (A^2 V (x) V) / A^3 V, in the coordinates
  // used by lie3_module, onto these coordinates: (e_i^e_j)(x)e_k -> [[e_i,e_j],e_k].
  FMatrix quotient_to_subspace() const;

 private:
  FVector apply_tensor_cube(const FVector& t, const FMatrix& g) const;

  PrimeField field_;
  std::size_t d_;
  Subspace l3_;
  std::vector<FVector> table_;  // table_[wedge_index(i,j) * d + k] = coords of [[e_i,e_j],e_k]
};

}  // namespace liepow
