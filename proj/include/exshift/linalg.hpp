#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/field.hpp"

namespace exshift {

using Vector = std::vector<std::uint64_t>;

/// Row-major dense matrix over a prime field.
class DenseMatrix {
 public:
  DenseMatrix() : DenseMatrix(PrimeField{}, 0, 0) {}
  DenseMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds a matrix from signed integer rows, reducing mod q.
  DenseMatrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
      for (auto v : r) data_.push_back(static_cast<std::uint32_t>(field_.from_int(v)));
    }
  }

  static DenseMatrix identity(const PrimeField& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = static_cast<std::uint32_t>(v); }
  void add_to(std::size_t r, std::size_t c, std::uint64_t v) {
    auto& x = data_[r * cols_ + c];
    x = static_cast<std::uint32_t>(field_.add(x, v));
  }

  std::uint32_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  Vector row(std::size_t r) const { return Vector(row_ptr(r), row_ptr(r) + cols_); }

  void append_row(const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
    for (auto x : v) data_.push_back(static_cast<std::uint32_t>(x));
    ++rows_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("product of " + shape() + " and " + o.shape());
    DenseMatrix p(field_, rows_, o.cols_);
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = (*this)(r, k);
        if (!a) continue;
        const auto* orow = o.row_ptr(k);
        for (std::size_t c = 0; c < o.cols_; ++c) acc[c] = field_.reduce(acc[c] + a * orow[c]);
      }
      for (std::size_t c = 0; c < o.cols_; ++c) p.set(r, c, acc[c]);
    }
    return p;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      const auto* rp = row_ptr(r);
      for (std::size_t c = 0; c < cols_; ++c)
        if (rp[c] && v[c]) acc = field_.reduce(acc + rp[c] * v[c]);
      out[r] = acc;
    }
    return out;
  }

  /// Columns selected in the given order.
  DenseMatrix select_columns(const std::vector<std::size_t>& order) const {
    DenseMatrix m(field_, rows_, order.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < order.size(); ++c) m.set(r, c, (*this)(r, order[c]));
    return m;
  }

  /// Stacks the rows of `o` below this matrix.
  DenseMatrix stacked(const DenseMatrix& o) const {
    if (o.cols_ != cols_ && !(o.rows_ == 0)) throw DimensionMismatch("stack of " + shape() + " and " + o.shape());
    DenseMatrix m = *this;
    m.data_.insert(m.data_.end(), o.data_.begin(), o.data_.end());
    m.rows_ += o.rows_;
    return m;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  bool operator==(const DenseMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  DenseMatrix basis;  // rank x cols, reduced row echelon form
};

namespace detail {

// Row reduction in place. With `full`, entries above pivots are cleared too.
// Returns the pivot columns in increasing order; rows [0, rank) hold the echelon rows.
inline std::vector<std::size_t> eliminate(DenseMatrix& m, bool full) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(m.row_ptr(p), m.row_ptr(p) + cols, m.row_ptr(r));
    auto* pr = m.row_ptr(r);
    const std::uint64_t inv = f.inv(pr[c]);
    nz.clear();
    for (std::size_t k = c; k < cols; ++k)
      if (pr[k]) {
        pr[k] = static_cast<std::uint32_t>(f.mul(pr[k], inv));
        nz.push_back(k);
      }
    const std::size_t begin = full ? 0 : r + 1;
    for (std::size_t o = begin; o < rows; ++o) {
      if (o == r) continue;
      auto* orow = m.row_ptr(o);
      const std::uint64_t a = orow[c];
      if (!a) continue;
      const std::uint64_t factor = f.modulus() - a;
      for (auto k : nz) orow[k] = static_cast<std::uint32_t>(f.reduce(orow[k] + factor * pr[k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline RrefResult rref(const DenseMatrix& m) {
  DenseMatrix work = m;
  RrefResult out;
  out.pivots = detail::eliminate(work, true);
  out.rank = out.pivots.size();
  out.basis = DenseMatrix(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < out.rank; ++r) out.basis.append_row(work.row(r));
  return out;
}

inline std::size_t rank(const DenseMatrix& m) {
  if (m.empty()) return 0;
  DenseMatrix work = m.rows() <= m.cols() ? m : m.transpose();
  return detail::eliminate(work, false).size();
}

/// Basis of the null space {v : m v = 0}, one vector per free column.
inline std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Vector> out;
  if (m.rows() == 0) {
    for (std::size_t c = 0; c < cols; ++c) {
      Vector v(cols, 0);
      v[c] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  const PrimeField& f = m.field();
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.basis(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

/// dim ker(out) - rank(in) for the two-step complex  . --in--> . --out--> .
inline std::size_t homology_dim(const DenseMatrix& boundary_in, const DenseMatrix& boundary_out) {
  if (boundary_out.cols() != boundary_in.rows())
    throw DimensionMismatch("outgoing map has " + std::to_string(boundary_out.cols()) +
                            " columns but incoming map has " + std::to_string(boundary_in.rows()) + " rows");
  if (boundary_out.rows() > 0 && boundary_in.cols() > 0 && !(boundary_out * boundary_in).is_zero())
    throw CompositionNotZero("composition of boundary maps is nonzero");
  const std::size_t middle = boundary_in.rows();
  return middle - rank(boundary_out) - rank(boundary_in);
}

/// Matrix whose rows are the given vectors.
inline DenseMatrix from_rows(const PrimeField& field, std::size_t cols, const std::vector<Vector>& rows) {
  DenseMatrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace exshift
