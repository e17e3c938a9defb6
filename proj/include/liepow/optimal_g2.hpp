#pragma once

#include <string>
#include <vector>

#include "liepow/mat_module.hpp"
#include "liepow/meataxe.hpp"
#include "liepow/pgroup.hpp"

namespace liepow {

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

// Checks a 7-dimensional generator set for G2(p): determinant 1, a single
// invariant bilinear form which is symmetric and non-degenerate, V irreducible,
// and A^2 V with the expected composition factors (7+14 distinct for p > 3,
// three 7-dimensional factors with V twice for p = 3).
std::vector<ValidationCheck> validate_g2_module(const MatModule& v, const MeatAxeConfig& config = {});
bool all_passed(const std::vector<ValidationCheck>& checks);

enum class G2Variant { Normalizer, GroupItself };

struct OptimalG2 {
  QuotientPGroup group;
  MatModule v;
  SubmoduleLattice a2_lattice;
  Subspace submodule14;  // largest maximal submodule of A^2 V
  FMatrix theta;         // L^2 V -> V, rows indexed by the wedge basis; kernel is submodule14
  Subspace graph;        // {(u theta, u)} inside F_p^d + L^2 V (only for GroupItself)
};

// Bundled generator file for G2(p).
std::string g2_generator_path(std::uint32_t p);

// Builds P_X (Normalizer) or E*/M (GroupItself) from the given G2 module.
// Throws std::runtime_error when the module fails validation.
OptimalG2 build_optimal_g2(const MatModule& v, G2Variant variant, const MeatAxeConfig& config = {});
OptimalG2 build_optimal_g2(std::uint32_t p, G2Variant variant, const MeatAxeConfig& config = {});

}  // namespace liepow
