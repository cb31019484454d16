#ifndef AXIAL_LINALG_HPP
#define AXIAL_LINALG_HPP

// Dense exact linear algebra: row reduction, rank, kernels and an
// incrementally maintained reduced echelon basis for subspace membership.

#include "axial/field.hpp"

#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace axial {

template <FieldScalar S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const Field<S>& f) {
    Matrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<S> column(std::size_t j) const {
    std::vector<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// In-place reduced row echelon form; returns the pivot columns. The pivot
  /// of each step is the first nonzero entry in the column.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      }
      const S inv = (*this)(r, c).inv();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        const S f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    auto piv = m.rref_in_place();
    return {std::move(m), std::move(piv)};
  }

  /// Rank by forward elimination only.
  std::size_t rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (std::size_t j = c; j < cols_; ++j) std::swap(m(p, j), m(r, j));
      }
      const S inv = m(r, c).inv();
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        const S f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) {
          if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
      }
      ++r;
    }
    return r;
  }

  /// Basis of {v : M v = 0}, one vector per free column with a 1 there.
  std::vector<std::vector<S>> nullspace() const {
    auto [m, piv] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<S> v(cols_, zero_);
      v[f] = one_like();
      for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<S> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  S one_like() const {
    // 1 in the field of zero_
    if constexpr (std::is_same_v<S, Fp>) return Fp(1, zero_.modulus());
    else return S::from_int(1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  S zero_;
  std::vector<S> a_;
};

/// Reduced echelon basis of a subspace of S^n. Every stored row has a
/// leading 1 at its pivot column and zeros at all other pivot columns.
template <FieldScalar S>
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, const Field<S>& f) : n_(n), field_(f), owner_(n, kNone) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<S>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t c) const { return owner_[c] != kNone; }

  /// v minus its projection onto the span along the pivot columns; zero iff v is in the span.
  std::vector<S> reduce(std::vector<S> v) const {
    check(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const S f = v[pivots_[k]];
      if (f.is_zero()) continue;
      const auto& r = rows_[k];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!r[j].is_zero()) v[j] -= f * r[j];
      }
    }
    return v;
  }

  bool contains(const std::vector<S>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v to the span; returns false when it was already there.
  bool insert(const std::vector<S>& v) {
    auto r = reduce(v);
    std::size_t c = 0;
    while (c < n_ && r[c].is_zero()) ++c;
    if (c == n_) return false;
    const S inv = r[c].inv();
    for (auto& x : r) {
      if (!x.is_zero()) x *= inv;
    }
    for (auto& row : rows_) {
      const S f = row[c];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!r[j].is_zero()) row[j] -= f * r[j];
      }
    }
    owner_[c] = rows_.size();
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
    return true;
  }

  /// Coordinates of a vector of the span with respect to rows(); nullopt if outside.
  std::optional<std::vector<S>> coordinates(const std::vector<S>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<S> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  static bool is_zero_vector(const std::vector<S>& v) {
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void check(const std::vector<S>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector has wrong dimension");
  }

  std::size_t n_;
  Field<S> field_;
  std::vector<std::vector<S>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> owner_;
};

}  // namespace axial

#endif  // AXIAL_LINALG_HPP
