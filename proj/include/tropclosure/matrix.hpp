#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropclosure/semiring.hpp"

namespace tropclosure {

template <class T>
class Vector {
 public:
  using scalar = Ext<T>;

  Vector() = default;
  explicit Vector(std::size_t dim, scalar fill = scalar()) : entries_(dim, fill) {}
  Vector(std::initializer_list<scalar> init) : entries_(init) {}
  explicit Vector(std::vector<scalar> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  scalar& operator[](std::size_t i) { return entries_[i]; }
  const scalar& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  std::span<const scalar> entries() const noexcept { return entries_; }

  bool is_finite() const {
    for (const auto& e : entries_) {
      if (!e.is_finite()) return false;
    }
    return true;
  }

  /// True for the max-plus zero vector (all entries ε).
  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_neg_inf()) return false;
    }
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ", ";
      s += entries_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<scalar> entries_;
};

/// Dense row-major matrix of extended scalars.
template <class T>
class Matrix {
 public:
  using scalar = Ext<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, scalar fill = scalar())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }
  Matrix(std::initializer_list<std::initializer_list<scalar>> init) {
    std::vector<std::vector<scalar>> rows;
    for (const auto& r : init) rows.emplace_back(r);
    *this = from_rows(rows);
  }

  static Matrix from_rows(const std::vector<std::vector<scalar>>& rows) {
    if (rows.empty() || rows.front().empty()) throw ShapeError("matrix dimensions must be positive");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw ShapeError("ragged rows: row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(m.cols_));
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const scalar> row(std::size_t i) const {
    return std::span<const scalar>(data_).subspan(i * cols_, cols_);
  }
  Vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return Vector<T>(std::vector<scalar>(r.begin(), r.end()));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ' ';
        s += (*this)(i, j).str();
      }
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar> data_;
};

/// A ⊗ x = B ⊗ x with A, B of equal shape and both doubly R-astic.
/// Only `validate_system` constructs one.
template <class T>
class TwoSidedSystem {
 public:
  const Matrix<T>& A() const noexcept { return a_; }
  const Matrix<T>& B() const noexcept { return b_; }
  std::size_t rows() const noexcept { return a_.rows(); }
  std::size_t cols() const noexcept { return a_.cols(); }

  template <class U>
  friend TwoSidedSystem<U> validate_system(Matrix<U> a, Matrix<U> b);

 private:
  TwoSidedSystem(Matrix<T> a, Matrix<T> b) : a_(std::move(a)), b_(std::move(b)) {}
  Matrix<T> a_;
  Matrix<T> b_;
};

// Componentwise order and equality on vectors. `tol` only affects Float.
template <class T>
bool leq(const Vector<T>& u, const Vector<T>& v, double tol = default_tolerance<T>);
template <class T>
bool approx_equal(const Vector<T>& u, const Vector<T>& v, double tol = default_tolerance<T>);

/// c ⊗ v
template <class T>
Vector<T> scale(const Ext<T>& c, const Vector<T>& v);

/// Shift a finite vector so that its first entry is 0.
template <class T>
Vector<T> normalized(const Vector<T>& v);

/// out_i = ⊕_j m_ij ⊗ v_j
template <class T>
Vector<T> maxplus_mul(const Matrix<T>& m, const Vector<T>& v);

/// out_i = ⊕′_j m_ij ⊗′ v_j
template <class T>
Vector<T> minplus_mul(const Matrix<T>& m, const Vector<T>& v);

/// Componentwise ⊕′ of two vectors.
template <class T>
Vector<T> vmin(const Vector<T>& u, const Vector<T>& v);

/// The residuation factor -Mᵀ, entry (j,i) = -m_ij; -ε = ε′ and -ε′ = ε.
template <class T>
Matrix<T> neg_transpose(const Matrix<T>& m);

/// Entrywise ⊕.
template <class T>
Matrix<T> elementwise_max(const Matrix<T>& a, const Matrix<T>& b);

/// Top block over bottom block.
template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom);

/// Max-plus identity E_n.
template <class T>
Matrix<T> identity(std::size_t n);

/// D_{α,β}: α on the diagonal, β elsewhere.
template <class T>
Matrix<T> d_matrix(std::size_t n, const Ext<T>& alpha, const Ext<T>& beta);

/// Throws DomainError naming the first row or column without a finite entry.
template <class T>
void require_doubly_r_astic(const Matrix<T>& m, const std::string& name);

using IndexSet = std::vector<std::size_t>;

/// Indices k where row_k ⊗ x_k attains row ⊗ x (within `tol`), ascending.
template <class T>
IndexSet attaining_indices(std::span<const Ext<T>> row, const Vector<T>& x,
                           double tol = default_tolerance<T>);

/// Checks shape and double R-asticity of both sides.
template <class T>
TwoSidedSystem<T> validate_system(Matrix<T> a, Matrix<T> b);

}  // namespace tropclosure
