#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liepow/prime_field.hpp"

namespace liepow {

using FVector = std::vector<Residue>;

// Dense row-major matrix over F_p. Vectors are rows; a matrix acts by v -> v * M.
class FMatrix {
 public:
  FMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FMatrix identity(PrimeField field, std::size_t n);
  static FMatrix scalar(PrimeField field, std::size_t n, Residue mu);
  // All rows must have length cols; entries are reduced mod p.
  static FMatrix from_rows(PrimeField field, std::size_t cols,
                           const std::vector<FVector>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FVector row_vector(std::size_t r) const;
  const std::vector<Residue>& data() const { return data_; }

  FMatrix transpose() const;
  FMatrix scaled(Residue mu) const;
  bool is_zero() const;

  bool operator==(const FMatrix&) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

FMatrix operator*(const FMatrix& a, const FMatrix& b);
FMatrix operator+(const FMatrix& a, const FMatrix& b);
FMatrix operator-(const FMatrix& a, const FMatrix& b);
// Row vector times matrix.
FVector vecmat(const FVector& v, const FMatrix& m);
FMatrix kronecker(const FMatrix& a, const FMatrix& b);
FMatrix vstack(const FMatrix& top, const FMatrix& bottom);

struct EchelonForm {
  FMatrix matrix;                   // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

EchelonForm rref(const FMatrix& m);
std::size_t rank(const FMatrix& m);
Residue determinant(const FMatrix& m);
std::optional<FMatrix> inverse(const FMatrix& m);

// v += c * w over F_p.
void axpy(const PrimeField& f, std::span<Residue> v, Residue c, std::span<const Residue> w);
bool is_zero(std::span<const Residue> v);

}  // namespace liepow
