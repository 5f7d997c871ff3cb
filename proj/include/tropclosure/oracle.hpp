#pragma once

// Brute-force cross-checks on small integer instances. Candidates are the
// integer vectors (0, x_2, ..., x_n) with |x_j| ≤ range; the ε-vector is
// never enumerated.

#include <cstdint>
#include <optional>
#include <vector>

#include "tropclosure/pipeline.hpp"

namespace tropclosure {

struct GridSpec {
  std::size_t dim = 1;
  long long range = 1;
  std::uint64_t budget = 200'000;

  /// (2·range + 1)^(dim - 1), saturating.
  std::uint64_t size() const;
};

/// Calls `visit` with every normalized grid vector in lexicographic order.
/// Throws BudgetError when the grid exceeds the budget.
template <class T, class Visit>
void for_each_grid_point(const GridSpec& grid, Visit&& visit);

template <class T>
std::vector<Vector<T>> enumerate_solutions(const TwoSidedSystem<T>& sys, const GridSpec& grid);

template <class T>
struct ClosureVerdict {
  std::uint64_t solutions_checked = 0;
  /// Every enumerated solution is in the span of the generators.
  bool inclusion_holds = true;
  std::optional<Vector<T>> inclusion_witness;
  /// The converse is only checked for certified reports.
  bool converse_checked = false;
  std::uint64_t span_points_checked = 0;
  bool converse_holds = true;
  std::optional<Vector<T>> converse_witness;

  bool passed() const { return inclusion_holds && converse_holds; }
};

/// Checks a closure report against grid enumeration of `sys`, which should
/// be the extended system the report was computed for.
template <class T>
ClosureVerdict<T> verify_closure(const TwoSidedSystem<T>& sys, const ClosureReport<T>& report,
                                 const GridSpec& grid);

/// Normalized grid points lying in the min-plus span of `generators`.
template <class T>
std::vector<Vector<T>> span_grid_points(const std::vector<Vector<T>>& generators,
                                        const GridSpec& grid);

// Implementation of the template visitor.

template <class T, class Visit>
void for_each_grid_point(const GridSpec& grid, Visit&& visit) {
  if (grid.dim == 0) throw DomainError("grid dimension must be positive");
  if (grid.range < 1) throw DomainError("grid range must be at least 1");
  if (grid.size() > grid.budget) {
    throw BudgetError("grid of " + std::to_string(grid.size()) + " candidates exceeds the budget of " +
                      std::to_string(grid.budget));
  }
  std::vector<long long> digits(grid.dim, -grid.range);
  digits[0] = 0;
  Vector<T> x(grid.dim);
  while (true) {
    for (std::size_t j = 0; j < grid.dim; ++j) x[j] = Ext<T>(NumberTraits<T>::from_int(digits[j]));
    visit(static_cast<const Vector<T>&>(x));
    std::size_t j = grid.dim;
    while (j > 1) {
      --j;
      if (digits[j] < grid.range) {
        ++digits[j];
        break;
      }
      digits[j] = -grid.range;
      if (j == 1) return;
    }
    if (grid.dim == 1) return;
  }
}

}  // namespace tropclosure
