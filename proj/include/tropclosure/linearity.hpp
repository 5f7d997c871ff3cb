#pragma once

// Local min-plus convexity of single-row solution sets, and the sufficient
// certificate that the whole solution set is min-plus linear.
//
// For a row a and a finite x, K(a, x) is the set of indices attaining the
// maximum in a ⊗ x. A solution x of a ⊗ x = b ⊗ x lies in R(a, b) when
//   1. both K-sets are singletons, or
//   2. one K-set is a singleton contained in the other, or
//   3. the two K-sets coincide.
// The solution set of the single row is locally min-plus convex at x exactly
// when x ∈ R(a, b).

#include <span>
#include <vector>

#include "tropclosure/closure.hpp"

namespace tropclosure {

struct RowDiagnostic {
  std::size_t row = 0;
  IndexSet k_a;
  IndexSet k_b;
  bool in_r = false;
};

/// K(a, x). Throws DomainError when a ⊗ x = ε.
template <class T>
IndexSet k_set(std::span<const Ext<T>> a, const Vector<T>& x, double tol = default_tolerance<T>);

template <class T>
IndexSet k_set(const Vector<T>& a, const Vector<T>& x, double tol = default_tolerance<T>) {
  return k_set(a.entries(), x, tol);
}

/// x ∈ R(a, b). False whenever x is not a finite solution of the row pair.
template <class T>
bool in_r(std::span<const Ext<T>> a, std::span<const Ext<T>> b, const Vector<T>& x,
          double tol = default_tolerance<T>);

template <class T>
bool in_r(const Vector<T>& a, const Vector<T>& b, const Vector<T>& x,
          double tol = default_tolerance<T>) {
  return in_r(a.entries(), b.entries(), x, tol);
}

/// K-sets and R-membership of generator i against row i of `sys`.
template <class T>
std::vector<RowDiagnostic> row_diagnostics(const TwoSidedSystem<T>& sys,
                                           const std::vector<Vector<T>>& generators,
                                           double tol = default_tolerance<T>);

/// Step 5: φ(C̃_iᵀ) ∈ R(Ã_i, B̃_i) for every row i. True certifies that the
/// extended solution set is min-plus linear; false certifies nothing.
template <class T>
bool certify_minplus_linear(const ExtendedSystem<T>& ext, const std::vector<Vector<T>>& generators,
                            double tol = default_tolerance<T>);

/// ∪_i Mⁱ(x) = [n], which implies that x is stable. Requires a solution.
template <class T>
bool stable_criterion(const TwoSidedSystem<T>& sys, const Vector<T>& x,
                      double tol = default_tolerance<T>);

}  // namespace tropclosure
