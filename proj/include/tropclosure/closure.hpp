#pragma once

// Min-plus closure of the solution set of A ⊗ x = B ⊗ x.
//
// The system is extended with the rows of D_{α,0} / D_{α,-1}, which cuts the
// solution set down to vectors with pairwise gaps ≤ α and makes every
// solution stable. With C̃ = -(Ã ⊕ B̃), the vectors φ(C̃_iᵀ) generate the
// smallest min-plus subspace containing the solutions of the extended
// system.

#include <cstdint>
#include <optional>
#include <vector>

#include "tropclosure/solver.hpp"

namespace tropclosure {

template <class T>
struct ExtendedSystem {
  TwoSidedSystem<T> base;
  /// (A over D_{α,0}) and (B over D_{α,-1}), with every ε replaced by β.
  TwoSidedSystem<T> extended;
  Ext<T> alpha;
  /// Set only when some ε entry was replaced.
  std::optional<Ext<T>> beta;
  /// -(Ã ⊕ B̃)
  Matrix<T> c_tilde;
};

/// One generator computation: the run from C̃_iᵀ and its result.
template <class T>
struct GeneratorRun {
  std::size_t row = 0;
  Vector<T> start;
  /// φ(C̃_iᵀ) as returned by the alternating method.
  Vector<T> raw;
  /// `raw` shifted to first entry 0.
  Vector<T> normalized;
  std::uint64_t iterations = 0;
};

/// Raised when a generator run does not end in a solution.
class GeneratorError : public SolverError {
 public:
  GeneratorError(const std::string& what, Status status, std::size_t row)
      : SolverError(what, status), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// max{c_ij - c_ik} over rows of C = -(A ⊕ B) and finite pairs; any α above
/// it separates projectively bounded systems from unbounded ones.
template <class T>
Ext<T> alpha_threshold(const TwoSidedSystem<T>& sys);

/// max{|c_ij - c_ik|} + 1
template <class T>
Ext<T> default_alpha(const TwoSidedSystem<T>& sys);

/// Steps 1-2: stack the D rows, then replace ε entries by
/// β = min(min finite a_ij, min finite b_ij) - α.
/// An override must be positive and exceed `alpha_threshold`.
template <class T>
ExtendedSystem<T> build_extension(const TwoSidedSystem<T>& sys,
                                  const std::optional<std::type_identity_t<Ext<T>>>& alpha_override = std::nullopt);

/// Step 3: φ(C̃_iᵀ) for every row of the extended system.
template <class T>
std::vector<GeneratorRun<T>> closure_generators(const ExtendedSystem<T>& ext,
                                                const SolverConfig& cfg = {});

/// Step 4: every generator has all pairwise entry gaps < α.
template <class T>
bool boundedness_check(const ExtendedSystem<T>& ext, const std::vector<Vector<T>>& generators);

/// Principal coefficients t_i = max_j (x_j - g_ij), returned when
/// ⊕′_i t_i ⊗′ g_i reproduces x; std::nullopt otherwise.
template <class T>
std::optional<std::vector<Ext<T>>> minplus_membership(const std::vector<Vector<T>>& generators,
                                                      const Vector<T>& x,
                                                      double tol = default_tolerance<T>);

/// Membership in S(D_{α,0}, D_{α,-1}): the ε-vector, or a finite vector
/// with every pairwise gap ≤ α.
template <class T>
bool d_solution_predicate(const Ext<T>& alpha, const Vector<T>& x);

}  // namespace tropclosure
