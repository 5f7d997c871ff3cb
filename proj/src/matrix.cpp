#include "tropclosure/matrix.hpp"

#include "instantiate.hpp"

namespace tropclosure {
namespace {

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

template <class T>
bool leq(const Vector<T>& u, const Vector<T>& v, double tol) {
  if (u.size() != v.size()) throw ShapeError("vector dimensions differ");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (clearly_less(v[i], u[i], tol)) return false;
  }
  return true;
}

template <class T>
bool approx_equal(const Vector<T>& u, const Vector<T>& v, double tol) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!near(u[i], v[i], tol)) return false;
  }
  return true;
}

template <class T>
Vector<T> scale(const Ext<T>& c, const Vector<T>& v) {
  Vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = otimes(c, v[i]);
  return out;
}

template <class T>
Vector<T> normalized(const Vector<T>& v) {
  if (v.empty() || !v.is_finite()) throw DomainError("only finite vectors can be normalized");
  return scale(-v[0], v);
}

template <class T>
Vector<T> maxplus_mul(const Matrix<T>& m, const Vector<T>& v) {
  if (m.cols() != v.size()) {
    throw ShapeError("max-plus product of " + shape_str(m.rows(), m.cols()) + " matrix with " +
                     std::to_string(v.size()) + "-vector");
  }
  Vector<T> out(m.rows(), Ext<T>::neg_inf());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    Ext<T> acc = Ext<T>::neg_inf();
    for (std::size_t j = 0; j < r.size(); ++j) acc = oplus(acc, otimes(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

template <class T>
Vector<T> minplus_mul(const Matrix<T>& m, const Vector<T>& v) {
  if (m.cols() != v.size()) {
    throw ShapeError("min-plus product of " + shape_str(m.rows(), m.cols()) + " matrix with " +
                     std::to_string(v.size()) + "-vector");
  }
  Vector<T> out(m.rows(), Ext<T>::pos_inf());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    Ext<T> acc = Ext<T>::pos_inf();
    for (std::size_t j = 0; j < r.size(); ++j) acc = oplus_dual(acc, otimes_dual(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

template <class T>
Vector<T> vmin(const Vector<T>& u, const Vector<T>& v) {
  if (u.size() != v.size()) throw ShapeError("vector dimensions differ");
  Vector<T> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = oplus_dual(u[i], v[i]);
  return out;
}

template <class T>
Matrix<T> neg_transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = -m(i, j);
  }
  return out;
}

template <class T>
Matrix<T> elementwise_max(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("shapes differ: " + shape_str(a.rows(), a.cols()) + " vs " +
                     shape_str(b.rows(), b.cols()));
  }
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  }
  return out;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.cols() != bottom.cols()) {
    throw ShapeError("cannot stack " + shape_str(top.rows(), top.cols()) + " over " +
                     shape_str(bottom.rows(), bottom.cols()));
  }
  Matrix<T> out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

template <class T>
Matrix<T> identity(std::size_t n) {
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Ext<T>(NumberTraits<T>::from_int(0));
  return out;
}

template <class T>
Matrix<T> d_matrix(std::size_t n, const Ext<T>& alpha, const Ext<T>& beta) {
  if (n == 0) throw ShapeError("D matrix order must be positive");
  if (!alpha.is_finite() || !beta.is_finite()) throw DomainError("D matrix entries must be finite");
  Matrix<T> out(n, n, beta);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = alpha;
  return out;
}

template <class T>
void require_doubly_r_astic(const Matrix<T>& m, const std::string& name) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool ok = false;
    for (const auto& e : m.row(i)) ok = ok || e.is_finite();
    if (!ok) throw DomainError("row " + std::to_string(i) + " of " + name + " not R-astic");
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool ok = false;
    for (std::size_t i = 0; i < m.rows() && !ok; ++i) ok = m(i, j).is_finite();
    if (!ok) throw DomainError("column " + std::to_string(j) + " of " + name + " not R-astic");
  }
}

template <class T>
IndexSet attaining_indices(std::span<const Ext<T>> row, const Vector<T>& x, double tol) {
  if (row.size() != x.size()) throw ShapeError("row and vector dimensions differ");
  std::vector<Ext<T>> terms(row.size());
  Ext<T> best = Ext<T>::neg_inf();
  for (std::size_t k = 0; k < row.size(); ++k) {
    terms[k] = otimes(row[k], x[k]);
    best = oplus(best, terms[k]);
  }
  IndexSet out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (near(terms[k], best, tol)) out.push_back(k);
  }
  return out;
}

template <class T>
TwoSidedSystem<T> validate_system(Matrix<T> a, Matrix<T> b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("A is " + shape_str(a.rows(), a.cols()) + " but B is " +
                     shape_str(b.rows(), b.cols()));
  }
  require_doubly_r_astic(a, "A");
  require_doubly_r_astic(b, "B");
  return TwoSidedSystem<T>(std::move(a), std::move(b));
}

#define TROPCLOSURE_INSTANTIATE_MATRIX(T)                                          \
  template bool leq(const Vector<T>&, const Vector<T>&, double);                   \
  template bool approx_equal(const Vector<T>&, const Vector<T>&, double);          \
  template Vector<T> scale(const Ext<T>&, const Vector<T>&);                       \
  template Vector<T> normalized(const Vector<T>&);                                 \
  template Vector<T> maxplus_mul(const Matrix<T>&, const Vector<T>&);              \
  template Vector<T> minplus_mul(const Matrix<T>&, const Vector<T>&);              \
  template Vector<T> vmin(const Vector<T>&, const Vector<T>&);                     \
  template Matrix<T> neg_transpose(const Matrix<T>&);                              \
  template Matrix<T> elementwise_max(const Matrix<T>&, const Matrix<T>&);          \
  template Matrix<T> vstack(const Matrix<T>&, const Matrix<T>&);                   \
  template Matrix<T> identity<T>(std::size_t);                                     \
  template Matrix<T> d_matrix(std::size_t, const Ext<T>&, const Ext<T>&);          \
  template void require_doubly_r_astic(const Matrix<T>&, const std::string&);      \
  template IndexSet attaining_indices(std::span<const Ext<T>>, const Vector<T>&, double); \
  template TwoSidedSystem<T> validate_system(Matrix<T>, Matrix<T>);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_MATRIX)

}  // namespace tropclosure
