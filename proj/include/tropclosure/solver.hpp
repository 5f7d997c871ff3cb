#pragma once

// The alternating method for two-sided max-plus systems.
//
// Separated form A ⊗ x = B ⊗ y iterates
//   y(r)   = -Bᵀ ⊗′ (A ⊗ x(r))
//   x(r+1) = -Aᵀ ⊗′ (B ⊗ y(r))
// and stops with
//   (a) no finite solution, when x_i(r+1) < x_i(0) for every i;
//   (b) a solution (x(r), y(r)), when x(r+1) = x(r).
//
// The homogeneous system A ⊗ x = B ⊗ x is the separated system
// (A; B) ⊗ x = (E; E) ⊗ y, whose iteration collapses to the single-step map
//   φ₀(x) = Cᵀ ⊗′ ((A ⊗ x) ⊕′ (B ⊗ x)),   C = -(A ⊕ B).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tropclosure/matrix.hpp"

namespace tropclosure {

enum class Status { Solution, NoFiniteSolution, IterationCap };

std::string_view to_string(Status s);

struct SolverConfig {
  /// Maximum number of φ₀ steps; unset means the integer termination bound.
  std::optional<std::uint64_t> iteration_cap;
  bool trace_enabled = false;
  /// Comparison tolerance for Float; ignored by the exact types.
  std::optional<double> float_tolerance;
};

template <class T>
double tolerance_for(const SolverConfig& cfg) {
  if constexpr (NumberTraits<T>::exact) {
    return 0.0;
  } else {
    return cfg.float_tolerance.value_or(kDefaultFloatTolerance);
  }
}

template <class T>
struct AlternateOutcome {
  Status status = Status::IterationCap;
  /// The fixed point on Solution; otherwise the last iterate.
  Vector<T> x;
  /// Separated form: y(r) at the fixed point. Homogeneous form:
  /// (A ⊗ x) ⊕′ (B ⊗ x).
  Vector<T> y;
  /// Number of steps taken, i.e. the r+1 at which the run stopped.
  std::uint64_t iterations = 0;
  std::uint64_t cap = 0;
  /// x(0), x(1), ... when tracing is enabled.
  std::vector<Vector<T>> trace;
};

/// Raised by `phi` when the run does not end in a solution.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, Status status) : Error(what), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

/// 10·n·(m+n)·(K+1) with K = ceil(max |finite entry|) over A, B and x0.
template <class T>
std::uint64_t default_iteration_cap(const TwoSidedSystem<T>& sys, const Vector<T>& x0);

/// One alternating-method step on the homogeneous system.
template <class T>
Vector<T> phi0(const TwoSidedSystem<T>& sys, const Vector<T>& x);

template <class T>
AlternateOutcome<T> alternating_homogeneous(const TwoSidedSystem<T>& sys, const Vector<T>& x0,
                                            const SolverConfig& cfg = {});

/// A is m×n, B is m×k, both doubly R-astic; x0 ∈ Rⁿ.
template <class T>
AlternateOutcome<T> alternating_separated(const Matrix<T>& a, const Matrix<T>& b,
                                          const Vector<T>& x0, const SolverConfig& cfg = {});

/// The stable solution reached from x; throws SolverError otherwise.
template <class T>
Vector<T> phi(const TwoSidedSystem<T>& sys, const Vector<T>& x, const SolverConfig& cfg = {});

template <class T>
bool is_solution(const TwoSidedSystem<T>& sys, const Vector<T>& x,
                 double tol = default_tolerance<T>);

/// φ₀(x) = x. Requires `is_solution(sys, x)`.
template <class T>
bool is_stable(const TwoSidedSystem<T>& sys, const Vector<T>& x,
               double tol = default_tolerance<T>);

/// Mⁱ(x): columns k with A_i ⊗ x = a_ik ⊗ x_k or B_i ⊗ x = b_ik ⊗ x_k.
/// Requires `is_solution(sys, x)`.
template <class T>
IndexSet m_set(const TwoSidedSystem<T>& sys, const Vector<T>& x, std::size_t row,
               double tol = default_tolerance<T>);

}  // namespace tropclosure
