#include "tropclosure/oracle.hpp"

#include <limits>

#include "instantiate.hpp"

namespace tropclosure {

std::uint64_t GridSpec::size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(range < 0 ? 0 : range) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < dim; ++i) {
    if (total > kMax / side) return kMax;
    total *= side;
  }
  return total;
}

template <class T>
std::vector<Vector<T>> enumerate_solutions(const TwoSidedSystem<T>& sys, const GridSpec& grid) {
  if (grid.dim != sys.cols()) throw ShapeError("grid dimension does not match the system");
  std::vector<Vector<T>> out;
  for_each_grid_point<T>(grid, [&](const Vector<T>& x) {
    if (is_solution(sys, x)) out.push_back(x);
  });
  return out;
}

template <class T>
ClosureVerdict<T> verify_closure(const TwoSidedSystem<T>& sys, const ClosureReport<T>& report,
                                 const GridSpec& grid) {
  ClosureVerdict<T> verdict;
  for (const auto& y : enumerate_solutions(sys, grid)) {
    ++verdict.solutions_checked;
    if (!report.has_finite_solution || !minplus_membership(report.generators, y)) {
      verdict.inclusion_holds = false;
      if (!verdict.inclusion_witness) verdict.inclusion_witness = y;
    }
  }
  if (report.has_finite_solution && report.certified_minplus_linear) {
    verdict.converse_checked = true;
    for (const auto& p : span_grid_points(report.generators, grid)) {
      ++verdict.span_points_checked;
      if (!is_solution(sys, p)) {
        verdict.converse_holds = false;
        if (!verdict.converse_witness) verdict.converse_witness = p;
      }
    }
  }
  return verdict;
}

template <class T>
std::vector<Vector<T>> span_grid_points(const std::vector<Vector<T>>& generators, const GridSpec& grid) {
  std::vector<Vector<T>> out;
  if (generators.empty()) return out;
  for_each_grid_point<T>(grid, [&](const Vector<T>& x) {
    if (minplus_membership(generators, x)) out.push_back(x);
  });
  return out;
}

#define TROPCLOSURE_INSTANTIATE_ORACLE(T)                                                          \
  template std::vector<Vector<T>> enumerate_solutions(const TwoSidedSystem<T>&, const GridSpec&);  \
  template ClosureVerdict<T> verify_closure(const TwoSidedSystem<T>&, const ClosureReport<T>&,     \
                                            const GridSpec&);                                      \
  template std::vector<Vector<T>> span_grid_points(const std::vector<Vector<T>>&, const GridSpec&);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_ORACLE)

}  // namespace tropclosure
