#include "liepow/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepow {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspaces have different ambient dimensions");
  if (!(a.field() == b.field())) throw std::invalid_argument("subspaces over different fields");
}

}  // namespace

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim) {
  return Subspace(FMatrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(FMatrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::span(const FMatrix& generators) {
  auto e = rref(generators);
  FMatrix basis(generators.field(), e.rank, generators.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    std::ranges::copy(e.matrix.row(r), basis.row(r).begin());
  return Subspace(std::move(basis), std::move(e.pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim,
                        const std::vector<FVector>& generators) {
  return span(FMatrix::from_rows(field, ambient_dim, generators));
}

FVector Subspace::coset_reduce(FVector v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
  const auto& f = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue c = v[pivots_[i]];
    if (c) axpy(f, v, f.neg(c), basis_.row(i));
  }
  return v;
}

bool Subspace::contains(const FVector& v) const { return is_zero(coset_reduce(v)); }

FVector Subspace::coordinates(const FVector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector does not lie in the subspace");
  FVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  // (x, y) with x A + y B = 0 gives x A in the intersection.
  auto k = kernel(vstack(a.basis(), b.basis()));
  FMatrix xs(a.field(), k.dim(), a.dim());
  for (std::size_t r = 0; r < k.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) xs(r, c) = k.basis()(r, c);
  return Subspace::span(xs * a.basis());
}

bool contains(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis_vector(i))) return false;
  return true;
}

Subspace kernel(const FMatrix& m) {
  const auto& f = m.field();
  const std::size_t n = m.rows();
  FMatrix aug(f, n, m.cols() + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols() + r) = 1;
  }
  auto e = rref(aug);
  std::vector<FVector> vecs;
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] < m.cols()) continue;
    auto row = e.matrix.row(r);
    vecs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m.cols()), row.end());
  }
  return Subspace::span(f, n, vecs);
}

std::optional<LinearSolution> solve_linear(const FMatrix& a, const FVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const auto& f = a.field();
  FMatrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r] % f.prime();
  }
  auto e = rref(aug);
  if (e.rank > 0 && e.pivots[e.rank - 1] == a.cols()) return std::nullopt;
  FVector x(a.cols(), 0);
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.matrix(r, a.cols());
  return LinearSolution{std::move(x), kernel(a.transpose())};
}

}  // namespace liepow
