#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liepow/linalg.hpp"
#include "liepow/subspace.hpp"

namespace liepow {

// A module for a group given by generator matrices acting on row vectors.
class MatModule {
 public:
  // Throws std::invalid_argument if a generator is not an invertible dim x dim matrix.
  MatModule(PrimeField field, std::size_t dim, std::vector<FMatrix> gens, std::string label = {});

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FMatrix>& gens() const { return gens_; }
  const std::string& label() const { return label_; }

  // Transposed generators give the dual action used for Norton's test.
  MatModule transposed() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<FMatrix> gens_;
  std::string label_;
};

// Generator file: "d p ngens" then ngens blocks of d rows of d residues.
MatModule load_generators(const std::string& path);
MatModule parse_generators(std::istream& in, const std::string& source_name);
void write_generators(std::ostream& out, const MatModule& m);

// Index of e_i ^ e_j (i < j) in ascending lexicographic order.
std::size_t wedge_index(std::size_t d, std::size_t i, std::size_t j);
FMatrix exterior_square(const FMatrix& g);
MatModule exterior_square(const MatModule& m);
// Basis (a, b) of U (x) W is indexed a * dim W + b.
MatModule tensor_module(const MatModule& m, const MatModule& n);
MatModule direct_sum(const MatModule& m, const MatModule& n);
MatModule dual(const MatModule& m);
// Span of (e_i^e_j)(x)e_k + (e_j^e_k)(x)e_i - (e_i^e_k)(x)e_j in A^2 V (x) V.
Subspace a3_submodule(PrimeField field, std::size_t d);
// (A^2 V (x) V) / A^3 V; requires p > 3.
MatModule lie3_module(const MatModule& m);

bool is_invariant(const MatModule& m, const Subspace& s);
// Action restricted to an invariant subspace, in the coordinates of its basis.
MatModule submodule(const MatModule& m, const Subspace& s);
// Action on m / s, in coordinates indexed by the non-pivot columns of s.
MatModule quotient(const MatModule& m, const Subspace& s);
// Embeds a quotient vector back into m (entries placed at the non-pivot columns).
FVector lift_from_quotient(const Subspace& s, const FVector& q);

// Smallest invariant subspace containing the seeds.
Subspace spin(const MatModule& m, const std::vector<FVector>& seeds);

enum class InducedAction { Natural, ExteriorSquare, Lie3 };
// Lie3 acts on the subspace realization of L^3 V (LiePowerBasis coordinates).
FMatrix induced_matrix(const FMatrix& g, InducedAction action);
bool stabilizes(const FMatrix& g, const Subspace& s, InducedAction action);

enum class FormKind { Symmetric, Alternating };

struct InvariantForm {
  FMatrix gram;
  FormKind kind;
  bool nondegenerate;
};

struct InvariantForms {
  std::vector<InvariantForm> basis;
  std::size_t dim() const { return basis.size(); }
};

// Bilinear forms B with g B g^T = B for every generator (row-vector action).
InvariantForms invariant_forms(const MatModule& m);
std::string to_string(FormKind kind);

}  // namespace liepow
