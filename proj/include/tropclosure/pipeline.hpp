#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropclosure/linearity.hpp"

namespace tropclosure {

/// An error tagged with the pipeline step (1-6) it came from.
class PipelineError : public Error {
 public:
  PipelineError(int step, const std::string& what, std::optional<Status> cause = std::nullopt)
      : Error("step " + std::to_string(step) + ": " + what), step_(step), cause_(cause) {}
  int step() const noexcept { return step_; }
  /// Solver status behind a failed generator run, if that was the cause.
  std::optional<Status> cause() const noexcept { return cause_; }

 private:
  int step_;
  std::optional<Status> cause_;
};

template <class T>
struct ClosureOptions {
  std::optional<Ext<T>> alpha_override;
  SolverConfig solver;
};

template <class T>
struct ClosureReport {
  explicit ClosureReport(ExtendedSystem<T> ext) : extension(std::move(ext)) {}

  ExtendedSystem<T> extension;
  /// False when the extended system only has the ε solution; every other
  /// field past `extension` is then empty or false.
  bool has_finite_solution = false;
  std::vector<GeneratorRun<T>> runs;
  /// Normalized generators of the closure, one per extended row.
  std::vector<Vector<T>> generators;
  /// True: S(A,B) is projectively bounded and equals the extended set.
  /// False: the extended set is a bounded approximation of S(A,B).
  bool projectively_bounded = false;
  bool certified_minplus_linear = false;
  std::vector<RowDiagnostic> row_diagnostics;
  std::uint64_t iterations_total = 0;

  const Ext<T>& alpha() const noexcept { return extension.alpha; }
};

/// Runs the full characterization: extension (1), ε replacement (2),
/// generators (3), boundedness (4), certification (5) and the closure as
/// the min-plus span of the generators (6).
template <class T>
ClosureReport<T> compute_closure(const TwoSidedSystem<T>& sys, const ClosureOptions<T>& options = {});

}  // namespace tropclosure
