#include "tropclosure/linearity.hpp"

#include <algorithm>

#include "instantiate.hpp"

namespace tropclosure {
namespace {

bool singleton_inside(const IndexSet& single, const IndexSet& other) {
  return single.size() == 1 && std::binary_search(other.begin(), other.end(), single.front());
}

template <class T>
Ext<T> row_product(std::span<const Ext<T>> a, const Vector<T>& x) {
  Ext<T> acc = Ext<T>::neg_inf();
  for (std::size_t k = 0; k < a.size(); ++k) acc = oplus(acc, otimes(a[k], x[k]));
  return acc;
}

}  // namespace

template <class T>
IndexSet k_set(std::span<const Ext<T>> a, const Vector<T>& x, double tol) {
  if (a.size() != x.size()) throw ShapeError("row and vector dimensions differ");
  if (row_product(a, x).is_neg_inf()) throw DomainError("K-set of an all-ε product");
  return attaining_indices(a, x, tol);
}

template <class T>
bool in_r(std::span<const Ext<T>> a, std::span<const Ext<T>> b, const Vector<T>& x, double tol) {
  if (a.size() != x.size() || b.size() != x.size()) throw ShapeError("row and vector dimensions differ");
  if (!x.is_finite()) return false;
  if (!near(row_product(a, x), row_product(b, x), tol)) return false;
  const IndexSet ka = attaining_indices(a, x, tol);
  const IndexSet kb = attaining_indices(b, x, tol);
  if (ka.size() == 1 && kb.size() == 1) return true;
  if (singleton_inside(kb, ka) || singleton_inside(ka, kb)) return true;
  return ka == kb;
}

template <class T>
std::vector<RowDiagnostic> row_diagnostics(const TwoSidedSystem<T>& sys,
                                           const std::vector<Vector<T>>& generators, double tol) {
  if (generators.size() != sys.rows()) {
    throw ShapeError("expected one generator per row: " + std::to_string(sys.rows()) + " rows, " +
                     std::to_string(generators.size()) + " generators");
  }
  std::vector<RowDiagnostic> out;
  out.reserve(sys.rows());
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    RowDiagnostic d;
    d.row = i;
    d.k_a = k_set(sys.A().row(i), generators[i], tol);
    d.k_b = k_set(sys.B().row(i), generators[i], tol);
    d.in_r = in_r(sys.A().row(i), sys.B().row(i), generators[i], tol);
    out.push_back(std::move(d));
  }
  return out;
}

template <class T>
bool certify_minplus_linear(const ExtendedSystem<T>& ext, const std::vector<Vector<T>>& generators,
                            double tol) {
  const auto rows = row_diagnostics(ext.extended, generators, tol);
  return std::all_of(rows.begin(), rows.end(), [](const RowDiagnostic& d) { return d.in_r; });
}

template <class T>
bool stable_criterion(const TwoSidedSystem<T>& sys, const Vector<T>& x, double tol) {
  std::vector<bool> covered(sys.cols(), false);
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    for (std::size_t k : m_set(sys, x, i, tol)) covered[k] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

#define TROPCLOSURE_INSTANTIATE_LINEARITY(T)                                                    \
  template IndexSet k_set(std::span<const Ext<T>>, const Vector<T>&, double);                   \
  template bool in_r(std::span<const Ext<T>>, std::span<const Ext<T>>, const Vector<T>&,        \
                     double);                                                                   \
  template std::vector<RowDiagnostic> row_diagnostics(const TwoSidedSystem<T>&,                 \
                                                      const std::vector<Vector<T>>&, double);   \
  template bool certify_minplus_linear(const ExtendedSystem<T>&, const std::vector<Vector<T>>&, \
                                       double);                                                 \
  template bool stable_criterion(const TwoSidedSystem<T>&, const Vector<T>&, double);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_LINEARITY)

}  // namespace tropclosure
