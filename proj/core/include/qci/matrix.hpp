#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qci/field.hpp"

namespace qci {

/// Row-major dense matrix over F_p. Entries are residues; the field lives
/// with the caller.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> entries() const noexcept { return data_; }

  DenseMatrix transpose() const;
  void append_row(std::span<const Scalar> values);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  DenseMatrix reduced;               ///< nonzero rows only, leading entries 1
  std::vector<std::size_t> pivots;   ///< pivot column of each row of `reduced`
};

/// Reduced row echelon form. Pivot rule: within the current column take the
/// first row (top to bottom) holding a nonzero entry; columns are scanned
/// left to right.
EchelonForm row_echelon(const PrimeField& field, DenseMatrix m);

std::size_t rank(const PrimeField& field, const DenseMatrix& m);

/// Basis of {v : Mv = 0}, returned in reduced echelon form (each vector has a
/// leading 1), so the output depends only on the kernel.
std::vector<std::vector<Scalar>> kernel_basis(const PrimeField& field, const DenseMatrix& m);

std::vector<Scalar> multiply(const PrimeField& field, const DenseMatrix& m, std::span<const Scalar> v);

/// Reduces vectors modulo the row space of an echelon form and reads off
/// coordinates in the complement (non-pivot columns). Used to project onto a
/// quotient space S_k / J_k.
class QuotientProjector {
 public:
  QuotientProjector(const PrimeField& field, EchelonForm span, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t quotient_dim() const noexcept { return free_columns_.size(); }

  /// Normal form of `v` written in the non-pivot coordinates.
  std::vector<Scalar> project(std::vector<Scalar> v) const;

 private:
  PrimeField field_;
  EchelonForm span_;
  std::size_t ambient_;
  std::vector<std::size_t> free_columns_;
};

}  // namespace qci
