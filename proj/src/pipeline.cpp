#include "tropclosure/pipeline.hpp"

#include "instantiate.hpp"

namespace tropclosure {

template <class T>
ClosureReport<T> compute_closure(const TwoSidedSystem<T>& sys, const ClosureOptions<T>& options) {
  const double tol = tolerance_for<T>(options.solver);

  std::optional<ExtendedSystem<T>> ext;
  try {
    ext = build_extension(sys, options.alpha_override);
  } catch (const Error& e) {
    throw PipelineError(1, e.what());
  }
  ClosureReport<T> report(*std::move(ext));

  try {
    report.runs = closure_generators(report.extension, options.solver);
  } catch (const GeneratorError& e) {
    if (e.status() == Status::NoFiniteSolution) return report;
    throw PipelineError(3, e.what(), e.status());
  } catch (const Error& e) {
    throw PipelineError(3, e.what());
  }
  report.has_finite_solution = true;
  for (const auto& run : report.runs) {
    report.generators.push_back(run.normalized);
    report.iterations_total += run.iterations;
  }

  report.projectively_bounded = boundedness_check(report.extension, report.generators);

  try {
    report.row_diagnostics = row_diagnostics(report.extension.extended, report.generators, tol);
  } catch (const Error& e) {
    throw PipelineError(5, e.what());
  }
  report.certified_minplus_linear = true;
  for (const auto& d : report.row_diagnostics) {
    report.certified_minplus_linear = report.certified_minplus_linear && d.in_r;
  }
  return report;
}

#define TROPCLOSURE_INSTANTIATE_PIPELINE(T) \
  template ClosureReport<T> compute_closure(const TwoSidedSystem<T>&, const ClosureOptions<T>&);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_PIPELINE)

}  // namespace tropclosure
