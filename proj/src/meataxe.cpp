#include "liepow/meataxe.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace liepow {

namespace {

Residue random_residue(const PrimeField& f, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, f.prime() - 1);
  return dist(rng);
}

FMatrix random_algebra_element(const MatModule& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  FMatrix theta(f, m.dim(), m.dim());
  for (int t = 0; t < 4; ++t) {
    FMatrix word = FMatrix::identity(f, m.dim());
    if (!m.gens().empty()) {
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < len; ++s) word = word * m.gens()[rng() % m.gens().size()];
    }
    theta = theta + word.scaled(random_residue(f, rng, true));
  }
  return theta;
}

std::uint64_t projective_points(std::uint64_t p, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    power *= p;
  }
  return total;
}

// Calls visit on one representative of each projective point of span(basis);
// stops early when visit returns true.
template <class Visit>
bool for_each_projective(const Subspace& space, Visit visit) {
  const auto& f = space.field();
  const std::size_t k = space.dim();
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t tail = k - lead - 1;
    std::vector<Residue> coeff(tail, 0);
    for (;;) {
      FVector v = space.basis_vector(lead);
      for (std::size_t t = 0; t < tail; ++t)
        if (coeff[t]) axpy(f, v, coeff[t], space.basis().row(lead + 1 + t));
      if (visit(v)) return true;
      std::size_t pos = 0;
      while (pos < tail && ++coeff[pos] == f.prime()) coeff[pos++] = 0;
      if (pos == tail) break;
    }
  }
  return false;
}

}  // namespace

IrreducibilityResult is_irreducible(const MatModule& m, std::mt19937_64& rng,
                                    const MeatAxeConfig& config) {
  if (m.dim() == 0) throw std::invalid_argument("irreducibility of the zero module");
  IrreducibilityResult result;
  if (m.dim() == 1) {
    result.verdict = Verdict::Irreducible;
    return result;
  }
  const auto& f = m.field();
  const MatModule mt = m.transposed();
  for (int attempt = 1; attempt <= config.retry_bound; ++attempt) {
    result.attempts = attempt;
    const FMatrix theta = random_algebra_element(m, rng);
    // Shift by the eigenvalue with the smallest nonzero geometric multiplicity.
    std::optional<Subspace> best;
    Residue best_lambda = 0;
    for (Residue lambda = 0; lambda < f.prime(); ++lambda) {
      Subspace k = kernel(theta - FMatrix::scalar(f, m.dim(), lambda));
      if (k.dim() > 0 && (!best || k.dim() < best->dim())) {
        best = std::move(k);
        best_lambda = lambda;
        if (best->dim() == 1) break;
      }
    }
    if (!best || projective_points(f.prime(), best->dim(), config.max_enumeration) >
                     config.max_enumeration)
      continue;

    std::optional<Subspace> witness;
    for_each_projective(*best, [&](const FVector& v) {
      Subspace s = spin(m, {v});
      if (s.dim() < m.dim()) {
        witness = std::move(s);
        return true;
      }
      return false;
    });
    if (!witness) {
      const Subspace kt =
          kernel((theta - FMatrix::scalar(f, m.dim(), best_lambda)).transpose());
      const Subspace dual_sub = spin(mt, {kt.basis_vector(0)});
      if (dual_sub.dim() < m.dim()) witness = kernel(dual_sub.basis().transpose());
    }
    if (witness) {
      result.verdict = Verdict::Reducible;
      result.witness = std::move(witness);
    } else {
      result.verdict = Verdict::Irreducible;
    }
    return result;
  }
  result.verdict = Verdict::Inconclusive;
  return result;
}

IrreducibilityResult is_irreducible(const MatModule& m, const MeatAxeConfig& config) {
  std::mt19937_64 rng(config.seed);
  return is_irreducible(m, rng, config);
}

std::vector<FMatrix> hom_space(const MatModule& m, const MatModule& n) {
  if (!(m.field() == n.field())) throw std::invalid_argument("hom_space over different fields");
  if (m.gens().size() != n.gens().size())
    throw std::invalid_argument("hom_space needs matching generator lists");
  const auto& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  // Unknown T_rc at r*dn + c; equation (t,i,j): sum_k gm_ik T_kj - sum_k T_ik gn_kj = 0.
  FMatrix eqs(f, dm * dn, std::max<std::size_t>(1, m.gens().size() * dm * dn));
  for (std::size_t t = 0; t < m.gens().size(); ++t) {
    const auto& gm = m.gens()[t];
    const auto& gn = n.gens()[t];
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        const std::size_t col = t * dm * dn + i * dn + j;
        for (std::size_t k = 0; k < dm; ++k)
          if (gm(i, k)) eqs(k * dn + j, col) = f.add(eqs(k * dn + j, col), gm(i, k));
        for (std::size_t k = 0; k < dn; ++k)
          if (gn(k, j)) eqs(i * dn + k, col) = f.sub(eqs(i * dn + k, col), gn(k, j));
      }
  }
  const Subspace sol = kernel(eqs);
  std::vector<FMatrix> out;
  for (std::size_t b = 0; b < sol.dim(); ++b) {
    FMatrix t(f, dm, dn);
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dn; ++c) t(r, c) = sol.basis()(b, r * dn + c);
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<FMatrix> find_isomorphism(const MatModule& m, const MatModule& n,
                                        std::mt19937_64& rng, const MeatAxeConfig& config) {
  if (m.dim() != n.dim()) return std::nullopt;
  const auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  const auto& f = m.field();
  for (const auto& h : homs)
    if (determinant(h) != 0) return h;
  auto combine = [&](const std::vector<Residue>& c) {
    FMatrix t(f, m.dim(), n.dim());
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (c[i]) t = t + homs[i].scaled(c[i]);
    return t;
  };
  for (int trial = 0; trial < 4 * config.retry_bound; ++trial) {
    std::vector<Residue> c(homs.size());
    for (auto& x : c) x = random_residue(f, rng, false);
    FMatrix t = combine(c);
    if (determinant(t) != 0) return t;
  }
  if (projective_points(f.prime(), homs.size(), config.max_enumeration) > config.max_enumeration)
    return std::nullopt;
  std::vector<FVector> rows;
  for (const auto& h : homs) rows.emplace_back(h.data().begin(), h.data().end());
  const Subspace space = Subspace::span(f, m.dim() * n.dim(), rows);
  std::optional<FMatrix> found;
  for_each_projective(space, [&](const FVector& v) {
    FMatrix t(f, m.dim(), n.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c) t(r, c) = v[r * n.dim() + c];
    if (determinant(t) != 0) {
      found = std::move(t);
      return true;
    }
    return false;
  });
  return found;
}

std::vector<std::size_t> MatCompositionFactors::dims() const {
  std::vector<std::size_t> out;
  for (const auto& fct : factors) out.push_back(fct.module.dim());
  return out;
}

std::vector<std::size_t> MatCompositionFactors::class_multiplicities() const {
  std::vector<std::size_t> out(class_reps.size(), 0);
  for (const auto& fct : factors) ++out[fct.class_id];
  return out;
}

namespace {

void split_into(const MatModule& m, std::mt19937_64& rng, const MeatAxeConfig& config,
                MatCompositionFactors& out) {
  auto r = is_irreducible(m, rng, config);
  if (r.verdict == Verdict::Inconclusive)
    throw InconclusiveError("irreducibility test inconclusive on a " + std::to_string(m.dim()) +
                            "-dimensional module after " + std::to_string(r.attempts) +
                            " attempts");
  if (r.verdict == Verdict::Reducible) {
    split_into(submodule(m, *r.witness), rng, config, out);
    split_into(quotient(m, *r.witness), rng, config, out);
    return;
  }
  for (std::size_t c = 0; c < out.class_reps.size(); ++c)
    if (find_isomorphism(out.class_reps[c], m, rng, config)) {
      out.factors.push_back({m, c});
      return;
    }
  out.class_reps.push_back(m);
  out.factors.push_back({m, out.class_reps.size() - 1});
}

struct SocleParts {
  Subspace total;
  std::vector<std::pair<std::size_t, Subspace>> by_class;  // classes with nonzero image
};

SocleParts socle_parts(const MatModule& m, const std::vector<MatModule>& irreducibles) {
  SocleParts parts{Subspace::zero(m.field(), m.dim()), {}};
  for (std::size_t c = 0; c < irreducibles.size(); ++c) {
    std::vector<FVector> rows;
    for (const auto& h : hom_space(irreducibles[c], m))
      for (std::size_t r = 0; r < h.rows(); ++r) rows.push_back(h.row_vector(r));
    if (rows.empty()) continue;
    Subspace image = Subspace::span(m.field(), m.dim(), rows);
    parts.total = sum(parts.total, image);
    parts.by_class.emplace_back(c, std::move(image));
  }
  return parts;
}

}  // namespace

MatCompositionFactors composition_factors_matrix(const MatModule& m, std::mt19937_64& rng,
                                                 const MeatAxeConfig& config) {
  MatCompositionFactors out;
  split_into(m, rng, config, out);
  return out;
}

MatCompositionFactors composition_factors_matrix(const MatModule& m, const MeatAxeConfig& config) {
  std::mt19937_64 rng(config.seed);
  return composition_factors_matrix(m, rng, config);
}

Subspace socle(const MatModule& m, const std::vector<MatModule>& irreducibles) {
  return socle_parts(m, irreducibles).total;
}

const Subspace& SubmoduleLattice::largest_maximal() const {
  const std::size_t top = nodes.size() - 1;
  const Subspace* best = nullptr;
  for (const auto& [lo, hi] : edges)
    if (hi == top && (!best || nodes[lo].dim() > best->dim())) best = &nodes[lo];
  if (!best) throw std::logic_error("lattice without maximal submodules");
  return *best;
}

SubmoduleLattice socle_and_lattice(const MatModule& m, const MeatAxeConfig& config) {
  std::mt19937_64 rng(config.seed);
  auto factors = composition_factors_matrix(m, rng, config);
  const auto mult = factors.class_multiplicities();
  const bool distinct = std::all_of(mult.begin(), mult.end(), [](std::size_t k) { return k == 1; });

  if (distinct) {
    auto parts = socle_parts(m, factors.class_reps);
    if (parts.total.dim() == m.dim()) {
      const std::size_t k = parts.by_class.size();
      std::vector<std::pair<unsigned, Subspace>> subsets;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Subspace s = Subspace::zero(m.field(), m.dim());
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) s = sum(s, parts.by_class[i].second);
        subsets.emplace_back(mask, std::move(s));
      }
      std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.second.dim() != b.second.dim()) return a.second.dim() < b.second.dim();
        return a.first < b.first;
      });
      SubmoduleLattice lat{LatticeShape::MultiplicityFree, {}, {}, std::move(factors)};
      for (const auto& [mask, s] : subsets) lat.nodes.push_back(s);
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b) {
          const unsigned ma = subsets[a].first, mb = subsets[b].first;
          if ((ma & mb) == ma && std::popcount(mb) == std::popcount(ma) + 1) lat.edges.emplace_back(a, b);
        }
      std::sort(lat.edges.begin(), lat.edges.end());
      return lat;
    }
  }

  // Uniserial: every socle layer of the successive quotients must be irreducible.
  SubmoduleLattice lat{LatticeShape::Uniserial, {Subspace::zero(m.field(), m.dim())}, {},
                       std::move(factors)};
  while (lat.nodes.back().dim() < m.dim()) {
    const Subspace& below = lat.nodes.back();
    const MatModule q = below.dim() == 0 ? m : quotient(m, below);
    auto parts = socle_parts(q, lat.factors.class_reps);
    bool simple = parts.by_class.size() == 1 &&
                  parts.total.dim() == lat.factors.class_reps[parts.by_class[0].first].dim();
    if (!simple)
      throw UnsupportedShape("module is neither semisimple multiplicity-free nor uniserial (socle layer " +
                             std::to_string(lat.nodes.size()) + " has dimension " +
                             std::to_string(parts.total.dim()) + ")");
    std::vector<FVector> lifted;
    for (std::size_t i = 0; i < parts.total.dim(); ++i)
      lifted.push_back(below.dim() == 0 ? parts.total.basis_vector(i)
                                        : lift_from_quotient(below, parts.total.basis_vector(i)));
    Subspace next = sum(below, Subspace::span(m.field(), m.dim(), lifted));
    lat.edges.emplace_back(lat.nodes.size() - 1, lat.nodes.size());
    lat.nodes.push_back(std::move(next));
  }
  return lat;
}

std::string to_string(LatticeShape shape) {
  return shape == LatticeShape::MultiplicityFree ? "multiplicity-free" : "uniserial";
}

}  // namespace liepow
