#include "qci/matrix.hpp"

#include <cassert>
#include <utility>

#include "qci/errors.hpp"

namespace qci {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw GuardError("matrix entry count does not match its shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void DenseMatrix::append_row(std::span<const Scalar> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw GuardError("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

// dst += factor * src, from column `from` onward
void axpy(const PrimeField& field, std::span<Scalar> dst, std::span<const Scalar> src, Scalar factor,
          std::size_t from) {
  const std::uint64_t p = field.prime();
  for (std::size_t k = from; k < dst.size(); ++k) {
    if (src[k] == 0) continue;
    dst[k] = static_cast<Scalar>((dst[k] + static_cast<std::uint64_t>(factor) * src[k]) % p);
  }
}

}  // namespace

EchelonForm row_echelon(const PrimeField& field, DenseMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank) {
      auto a = m.row(sel);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(rank);
    const Scalar inv = field.inv(prow[col]);
    for (std::size_t k = col; k < cols; ++k) prow[k] = field.mul(prow[k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      axpy(field, m.row(i), prow, field.neg(m(i, col)), col);
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<Scalar> kept(m.entries().begin(), m.entries().begin() + rank * cols);
  return {DenseMatrix(rank, cols, std::move(kept)), std::move(pivots)};
}

std::size_t rank(const PrimeField& field, const DenseMatrix& m) {
  return row_echelon(field, m).pivots.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const PrimeField& field, const DenseMatrix& m) {
  const std::size_t cols = m.cols();
  const EchelonForm ef = row_echelon(field, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivots) is_pivot[c] = true;

  DenseMatrix raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = field.neg(ef.reduced(i, f));
    raw.append_row(v);
  }
  if (raw.rows() + ef.pivots.size() != cols)
    throw InvariantError("rank-nullity violated in kernel computation");
  if (raw.rows() == 0) return {};

  const EchelonForm normal = row_echelon(field, std::move(raw));
  std::vector<std::vector<Scalar>> basis;
  basis.reserve(normal.reduced.rows());
  for (std::size_t i = 0; i < normal.reduced.rows(); ++i) {
    auto r = normal.reduced.row(i);
    basis.emplace_back(r.begin(), r.end());
  }
  return basis;
}

std::vector<Scalar> multiply(const PrimeField& field, const DenseMatrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw GuardError("matrix-vector shape mismatch");
  std::vector<Scalar> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = field.fma(acc, m(i, j), v[j]);
    out[i] = acc;
  }
  return out;
}

QuotientProjector::QuotientProjector(const PrimeField& field, EchelonForm span, std::size_t ambient_dim)
    : field_(field), span_(std::move(span)), ambient_(ambient_dim) {
  if (span_.reduced.rows() > 0 && span_.reduced.cols() != ambient_)
    throw GuardError("echelon form does not live in the ambient space");
  std::vector<bool> is_pivot(ambient_, false);
  for (auto c : span_.pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) free_columns_.push_back(j);
}

std::vector<Scalar> QuotientProjector::project(std::vector<Scalar> v) const {
  assert(v.size() == ambient_);
  for (std::size_t i = 0; i < span_.pivots.size(); ++i) {
    const Scalar lead = v[span_.pivots[i]];
    if (lead == 0) continue;
    axpy(field_, v, span_.reduced.row(i), field_.neg(lead), span_.pivots[i]);
  }
  std::vector<Scalar> out;
  out.reserve(free_columns_.size());
  for (auto j : free_columns_) out.push_back(v[j]);
  return out;
}

}  // namespace qci
