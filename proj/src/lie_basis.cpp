#include "liepow/lie_basis.hpp"

#include <map>
#include <mutex>
#include <algorithm>
#include <stdexcept>

#include "liepow/mat_module.hpp"

namespace liepow {

namespace {

Subspace l3_span_of(PrimeField field, std::size_t d, const LiePowerBasis* self) {
  std::vector<FVector> vecs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) vecs.push_back(self->bracket_tensor(i, j, k));
  return Subspace::span(field, d * d * d, vecs);
}

}  // namespace

LiePowerBasis::LiePowerBasis(PrimeField field, std::size_t d)
    : field_(field), d_(d), l3_(Subspace::zero(field, d * d * d)) {
  if (d < 1) throw std::invalid_argument("Lie powers need d >= 1");
  l3_ = l3_span_of(field, d, this);
  table_.resize(l2_dim() * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        table_[wedge_index(d, i, j) * d + k] = l3_coordinates(bracket_tensor(i, j, k));
}

std::shared_ptr<const LiePowerBasis> LiePowerBasis::get(PrimeField field, std::size_t d) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const LiePowerBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{field.prime(), d}];
  if (!slot) slot = std::make_shared<const LiePowerBasis>(field, d);
  return slot;
}

FVector LiePowerBasis::bracket_tensor(std::size_t i, std::size_t j, std::size_t k) const {
  // [x,y] (x) z - z (x) [x,y] with [x,y] = x(x)y - y(x)x.
  const std::size_t d = d_;
  FVector t(d * d * d, 0);
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Residue& { return t[(a * d + b) * d + c]; };
  const Residue one = 1, minus = field_.neg(1);
  at(i, j, k) = field_.add(at(i, j, k), one);
  at(j, i, k) = field_.add(at(j, i, k), minus);
  at(k, i, j) = field_.add(at(k, i, j), minus);
  at(k, j, i) = field_.add(at(k, j, i), one);
  return t;
}

FVector LiePowerBasis::l3_coordinates(const FVector& tensor) const { return l3_.coordinates(tensor); }

FVector LiePowerBasis::l3_tensor(const FVector& coords) const {
  if (coords.size() != l3_dim()) throw std::invalid_argument("L3 coordinate length mismatch");
  return vecmat(coords, l3_.basis());
}

FVector LiePowerBasis::bracket_vv(const FVector& a, const FVector& f) const {
  if (a.size() != d_ || f.size() != d_) throw std::invalid_argument("bracket_vv length mismatch");
  FVector out(l2_dim(), 0);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i + 1; j < d_; ++j)
      out[wedge_index(d_, i, j)] = field_.sub(field_.mul(a[i], f[j]), field_.mul(a[j], f[i]));
  return out;
}

FVector LiePowerBasis::bracket_l2_v(const FVector& b, const FVector& f) const {
  if (b.size() != l2_dim() || f.size() != d_) throw std::invalid_argument("bracket_l2_v length mismatch");
  FVector out(l3_dim(), 0);
  for (std::size_t u = 0; u < b.size(); ++u) {
    if (b[u] == 0) continue;
    for (std::size_t k = 0; k < d_; ++k)
      if (f[k]) axpy(field_, out, field_.mul(b[u], f[k]), table_[u * d_ + k]);
  }
  return out;
}

FVector LiePowerBasis::bracket_vvv(const FVector& a, const FVector& f, const FVector& h) const {
  return bracket_l2_v(bracket_vv(a, f), h);
}

FVector LiePowerBasis::apply_tensor_cube(const FVector& t, const FMatrix& g) const {
  const std::size_t d = d_;
  const std::uint64_t p = field_.prime();
  FVector cur = t;
  // Contract one tensor slot at a time: slot s has stride d^(2-s).
  for (int slot = 0; slot < 3; ++slot) {
    const std::size_t stride = slot == 0 ? d * d : (slot == 1 ? d : 1);
    FVector next(cur.size(), 0);
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      const std::uint64_t x = cur[idx];
      if (x == 0) continue;
      const std::size_t a = (idx / stride) % d;
      const std::size_t base = idx - a * stride;
      for (std::size_t y = 0; y < d; ++y)
        if (g(a, y))
          next[base + y * stride] = static_cast<Residue>((next[base + y * stride] + x * g(a, y)) % p);
    }
    cur = std::move(next);
  }
  return cur;
}

FMatrix LiePowerBasis::lie3_action(const FMatrix& g) const {
  if (g.rows() != d_ || g.cols() != d_ || !(g.field() == field_))
    throw std::invalid_argument("lie3_action: matrix does not act on V");
  FMatrix out(field_, l3_dim(), l3_dim());
  for (std::size_t r = 0; r < l3_dim(); ++r) {
    const auto c = l3_coordinates(apply_tensor_cube(l3_.basis_vector(r), g));
    std::ranges::copy(c, out.row(r).begin());
  }
  return out;
}

FMatrix LiePowerBasis::quotient_to_subspace() const {
  const Subspace a3 = a3_submodule(field_, d_);
  const auto free = a3.non_pivots();
  if (free.size() != l3_dim()) throw std::logic_error("quotient and subspace L3 dimensions differ");
  FMatrix q(field_, free.size(), l3_dim());
  for (std::size_t a = 0; a < free.size(); ++a) {
    const std::size_t wedge = free[a] / d_, k = free[a] % d_;
    std::ranges::copy(table_[wedge * d_ + k], q.row(a).begin());
  }
  return q;
}

}  // namespace liepow
