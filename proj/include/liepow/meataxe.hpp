#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liepow/mat_module.hpp"

namespace liepow {

struct MeatAxeConfig {
  std::uint64_t seed = 0x5eed'0001;
  int retry_bound = 20;
  // Largest kernel, counted in projective points, whose vectors are all spun.
  std::uint64_t max_enumeration = 20000;
};

enum class Verdict { Irreducible, Reducible, Inconclusive };

struct IrreducibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero submodule when reducible
  int attempts = 0;
};

class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Norton's irreducibility test with random group-algebra elements.
IrreducibilityResult is_irreducible(const MatModule& m, std::mt19937_64& rng,
                                    const MeatAxeConfig& config = {});
IrreducibilityResult is_irreducible(const MatModule& m, const MeatAxeConfig& config = {});

// Basis of module homomorphisms T: m -> n (dim m x dim n, g_m T = T g_n).
std::vector<FMatrix> hom_space(const MatModule& m, const MatModule& n);
std::optional<FMatrix> find_isomorphism(const MatModule& m, const MatModule& n,
                                        std::mt19937_64& rng, const MeatAxeConfig& config = {});

struct MatFactor {
  MatModule module;
  std::size_t class_id;
};

struct MatCompositionFactors {
  std::vector<MatFactor> factors;     // bottom to top of one composition series
  std::vector<MatModule> class_reps;  // one irreducible per isomorphism class
  std::vector<std::size_t> dims() const;
  std::vector<std::size_t> class_multiplicities() const;
};

// Throws InconclusiveError when an irreducibility test is inconclusive.
MatCompositionFactors composition_factors_matrix(const MatModule& m, std::mt19937_64& rng,
                                                 const MeatAxeConfig& config = {});
MatCompositionFactors composition_factors_matrix(const MatModule& m,
                                                 const MeatAxeConfig& config = {});

// Sum of the images of all homomorphisms from the given irreducibles.
Subspace socle(const MatModule& m, const std::vector<MatModule>& irreducibles);

enum class LatticeShape { MultiplicityFree, Uniserial };

struct SubmoduleLattice {
  LatticeShape shape;
  std::vector<Subspace> nodes;                             // sorted by dimension
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering relations (lower, upper)
  MatCompositionFactors factors;

  // Maximal submodule of largest dimension.
  const Subspace& largest_maximal() const;
};

class UnsupportedShape : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Lattice of submodules for semisimple multiplicity-free or uniserial modules;
// throws UnsupportedShape otherwise.
SubmoduleLattice socle_and_lattice(const MatModule& m, const MeatAxeConfig& config = {});

std::string to_string(LatticeShape shape);

}  // namespace liepow
