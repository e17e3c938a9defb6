#include "liepow/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepow {

namespace {

void require_same_field(const FMatrix& a, const FMatrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

FMatrix::FMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMatrix FMatrix::identity(PrimeField field, std::size_t n) { return scalar(field, n, 1); }

FMatrix FMatrix::scalar(PrimeField field, std::size_t n, Residue mu) {
  FMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = mu % field.prime();
  return m;
}

FMatrix FMatrix::from_rows(PrimeField field, std::size_t cols, const std::vector<FVector>& rows) {
  FMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % field.prime();
  }
  return m;
}

FVector FMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return FVector(s.begin(), s.end());
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FMatrix FMatrix::scaled(Residue mu) const {
  FMatrix s = *this;
  for (auto& x : s.data_) x = field_.mul(x, mu);
  return s;
}

bool FMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const auto p = a.field().prime();
  FMatrix out(a.field(), a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = static_cast<Residue>(acc[j]);
  }
  return out;
}

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  FMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().add(a(r, c), b(r, c));
  return out;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  FMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().sub(a(r, c), b(r, c));
  return out;
}

FVector vecmat(const FVector& v, const FMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector length mismatch");
  const auto p = m.field().prime();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::uint64_t x = v[k];
    if (x == 0) continue;
    auto mrow = m.row(k);
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] = (acc[j] + x * mrow[j]) % p;
  }
  return FVector(acc.begin(), acc.end());
}

FMatrix kronecker(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  FMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Residue x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

FMatrix vstack(const FMatrix& top, const FMatrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  FMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::ranges::copy(top.row(r), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::ranges::copy(bottom.row(r), out.row(top.rows() + r).begin());
  return out;
}

void axpy(const PrimeField& f, std::span<Residue> v, Residue c, std::span<const Residue> w) {
  if (c == 0) return;
  const std::uint64_t p = f.prime();
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i]) v[i] = static_cast<Residue>((v[i] + cc * w[i]) % p);
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

EchelonForm rref(const FMatrix& m) {
  const auto& f = m.field();
  EchelonForm out{m, {}, 0};
  FMatrix& a = out.matrix;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    const Residue s = f.inv(a(r, c));
    for (auto& x : a.row(r)) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a(i, c) != 0) axpy(f, a.row(i), f.neg(a(i, c)), a.row(r));
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const FMatrix& m) { return rref(m).rank; }

Residue determinant(const FMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const auto& f = m.field();
  FMatrix a = m;
  Residue det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Residue s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i)
      if (a(i, c) != 0) axpy(f, a.row(i), f.neg(f.mul(a(i, c), s)), a.row(c));
  }
  return det;
}

std::optional<FMatrix> inverse(const FMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  FMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  FMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  return inv;
}

}  // namespace liepow
