#include "liepow/optimal_g2.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepow {

bool all_passed(const std::vector<ValidationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::vector<ValidationCheck> validate_g2_module(const MatModule& v, const MeatAxeConfig& config) {
  std::vector<ValidationCheck> out;
  const std::uint32_t p = v.field().prime();
  out.push_back({"dimension 7", v.dim() == 7, std::to_string(v.dim())});
  if (v.dim() != 7) return out;

  bool det_one = true;
  for (const auto& g : v.gens()) det_one = det_one && determinant(g) == 1;
  out.push_back({"generators have determinant 1", det_one, ""});

  const auto forms = invariant_forms(v);
  const bool one_form = forms.dim() == 1 && forms.basis[0].kind == FormKind::Symmetric &&
                        forms.basis[0].nondegenerate;
  out.push_back({"invariant forms: 1-dim, symmetric, non-degenerate", one_form,
                 std::to_string(forms.dim()) + "-dim"});

  std::mt19937_64 rng(config.seed);
  const auto irr = is_irreducible(v, rng, config);
  out.push_back({"V irreducible", irr.verdict == Verdict::Irreducible,
                 irr.verdict == Verdict::Inconclusive ? "inconclusive" : ""});

  try {
    const auto cf = composition_factors_matrix(exterior_square(v), rng, config);
    auto dims = cf.dims();
    std::sort(dims.begin(), dims.end());
    bool shape = false;
    std::string detail;
    for (auto x : dims) detail += (detail.empty() ? "" : ",") + std::to_string(x);
    std::size_t v_mult = 0;
    for (std::size_t c = 0; c < cf.class_reps.size(); ++c)
      if (cf.class_reps[c].dim() == 7 && find_isomorphism(cf.class_reps[c], v, rng, config))
        v_mult = cf.class_multiplicities()[c];
    if (p == 3)
      shape = dims == std::vector<std::size_t>{7, 7, 7} && cf.class_reps.size() == 2 && v_mult == 2;
    else
      shape = dims == std::vector<std::size_t>{7, 14} && cf.class_reps.size() == 2 && v_mult == 1;
    out.push_back({"A2 V composition factors", shape, detail});
  } catch (const InconclusiveError& e) {
    out.push_back({"A2 V composition factors", false, e.what()});
  }
  return out;
}

std::string g2_generator_path(std::uint32_t p) {
  return std::string(LIEPOW_DATA_DIR) + "/g2_" + std::to_string(p) + ".gens";
}

OptimalG2 build_optimal_g2(const MatModule& v, G2Variant variant, const MeatAxeConfig& config) {
  const auto checks = validate_g2_module(v, config);
  for (const auto& c : checks)
    if (!c.passed)
      throw std::runtime_error("generator data invalid: check '" + c.name + "' failed " + c.detail);

  const auto& f = v.field();
  const std::size_t d = v.dim();
  const MatModule a2 = exterior_square(v);
  SubmoduleLattice lattice = socle_and_lattice(a2, config);
  const Subspace n14 = lattice.largest_maximal();
  if (n14.dim() != 14) throw std::runtime_error("submodule search failure: no 14-dim maximal submodule");

  // theta: A^2 V -> A^2 V / N -> V.
  std::mt19937_64 rng(config.seed ^ 0x7e7a);
  const MatModule q = quotient(a2, n14);
  auto iso = find_isomorphism(q, v, rng, config);
  if (!iso) throw std::runtime_error("submodule search failure: A2 V / N is not isomorphic to V");
  const auto free = n14.non_pivots();
  FMatrix proj(f, a2.dim(), free.size());
  for (std::size_t u = 0; u < a2.dim(); ++u) {
    FVector e(a2.dim(), 0);
    e[u] = 1;
    const auto r = n14.coset_reduce(std::move(e));
    for (std::size_t k = 0; k < free.size(); ++k) proj(u, k) = r[free[k]];
  }
  FMatrix theta = proj * *iso;

  OptimalG2 out{Gamma2Group(f, d, n14), v, std::move(lattice), n14, theta,
                Subspace::zero(f, d + a2.dim())};
  if (variant == G2Variant::GroupItself) {
    std::vector<FVector> rows;
    for (std::size_t u = 0; u < a2.dim(); ++u) {
      FVector row = theta.row_vector(u);
      FVector e(a2.dim(), 0);
      e[u] = 1;
      row.insert(row.end(), e.begin(), e.end());
      rows.push_back(std::move(row));
    }
    out.graph = Subspace::span(f, d + a2.dim(), rows);
    out.group = EStarGroup(f, d, out.graph);
  }
  return out;
}

OptimalG2 build_optimal_g2(std::uint32_t p, G2Variant variant, const MeatAxeConfig& config) {
  return build_optimal_g2(load_generators(g2_generator_path(p)), variant, config);
}

}  // namespace liepow
