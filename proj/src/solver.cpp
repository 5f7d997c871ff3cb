#include "tropclosure/solver.hpp"

#include <algorithm>
#include <limits>

#include "instantiate.hpp"

namespace tropclosure {
namespace {

constexpr auto kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kU64Max / a) return kU64Max;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kU64Max - b ? kU64Max : a + b; }

template <class T>
std::uint64_t max_magnitude(const Matrix<T>& m) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (e.is_finite()) k = std::max(k, NumberTraits<T>::magnitude(e.value()));
    }
  }
  return k;
}

template <class T>
std::uint64_t max_magnitude(const Vector<T>& v) {
  std::uint64_t k = 0;
  for (const auto& e : v) {
    if (e.is_finite()) k = std::max(k, NumberTraits<T>::magnitude(e.value()));
  }
  return k;
}

template <class T>
void require_finite_start(const Vector<T>& x0, std::size_t n) {
  if (x0.size() != n) {
    throw ShapeError("start vector has dimension " + std::to_string(x0.size()) + ", expected " +
                     std::to_string(n));
  }
  if (!x0.is_finite()) throw DomainError("start vector must be finite");
}

// Case (a): every coordinate fell strictly below its starting value.
template <class T>
bool below_start_everywhere(const Vector<T>& x, const Vector<T>& x0, double tol) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!clearly_less(x[i], x0[i], tol)) return false;
  }
  return true;
}

// Precomputed factors for φ₀: A, B and Cᵀ = -Aᵀ ⊕′ -Bᵀ.
template <class T>
struct HomogeneousStep {
  const TwoSidedSystem<T>& sys;
  Matrix<T> c_transpose;

  explicit HomogeneousStep(const TwoSidedSystem<T>& s)
      : sys(s), c_transpose(neg_transpose(elementwise_max(s.A(), s.B()))) {}

  Vector<T> rhs(const Vector<T>& x) const {
    return vmin(maxplus_mul(sys.A(), x), maxplus_mul(sys.B(), x));
  }
  Vector<T> operator()(const Vector<T>& x) const { return minplus_mul(c_transpose, rhs(x)); }
};

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Solution: return "solution";
    case Status::NoFiniteSolution: return "no_finite_solution";
    case Status::IterationCap: return "iteration_cap";
  }
  return "unknown";
}

template <class T>
std::uint64_t default_iteration_cap(const TwoSidedSystem<T>& sys, const Vector<T>& x0) {
  std::uint64_t k = std::max({max_magnitude(sys.A()), max_magnitude(sys.B()), max_magnitude(x0)});
  std::uint64_t m = sys.rows();
  std::uint64_t n = sys.cols();
  return std::max<std::uint64_t>(1, sat_mul(sat_mul(10 * n, m + n), sat_add(k, 1)));
}

template <class T>
Vector<T> phi0(const TwoSidedSystem<T>& sys, const Vector<T>& x) {
  require_finite_start(x, sys.cols());
  return HomogeneousStep<T>(sys)(x);
}

template <class T>
AlternateOutcome<T> alternating_homogeneous(const TwoSidedSystem<T>& sys, const Vector<T>& x0,
                                            const SolverConfig& cfg) {
  require_finite_start(x0, sys.cols());
  if (cfg.iteration_cap && *cfg.iteration_cap == 0) throw DomainError("iteration cap must be at least 1");
  const double tol = tolerance_for<T>(cfg);
  const HomogeneousStep<T> step(sys);

  AlternateOutcome<T> out;
  out.cap = cfg.iteration_cap.value_or(default_iteration_cap(sys, x0));
  if (cfg.trace_enabled) out.trace.push_back(x0);

  Vector<T> x = x0;
  while (out.iterations < out.cap) {
    Vector<T> next = step(x);
    ++out.iterations;
    if (cfg.trace_enabled) out.trace.push_back(next);
    if (below_start_everywhere(next, x0, tol)) {
      out.status = Status::NoFiniteSolution;
      out.x = std::move(next);
      return out;
    }
    if (approx_equal(next, x, tol)) {
      out.status = Status::Solution;
      out.y = step.rhs(x);
      out.x = std::move(x);
      return out;
    }
    x = std::move(next);
  }
  out.status = Status::IterationCap;
  out.x = std::move(x);
  return out;
}

template <class T>
AlternateOutcome<T> alternating_separated(const Matrix<T>& a, const Matrix<T>& b,
                                          const Vector<T>& x0, const SolverConfig& cfg) {
  if (a.rows() != b.rows()) {
    throw ShapeError("A has " + std::to_string(a.rows()) + " rows but B has " +
                     std::to_string(b.rows()));
  }
  require_doubly_r_astic(a, "A");
  require_doubly_r_astic(b, "B");
  require_finite_start(x0, a.cols());
  if (cfg.iteration_cap && *cfg.iteration_cap == 0) throw DomainError("iteration cap must be at least 1");
  const double tol = tolerance_for<T>(cfg);
  const Matrix<T> neg_at = neg_transpose(a);
  const Matrix<T> neg_bt = neg_transpose(b);

  AlternateOutcome<T> out;
  if (cfg.iteration_cap) {
    out.cap = *cfg.iteration_cap;
  } else {
    std::uint64_t k = std::max({max_magnitude(a), max_magnitude(b), max_magnitude(x0)});
    std::uint64_t width = std::max(a.cols(), b.cols());
    std::uint64_t total = a.rows() + a.cols() + b.cols();
    out.cap = std::max<std::uint64_t>(1, sat_mul(sat_mul(10 * width, total), sat_add(k, 1)));
  }
  if (cfg.trace_enabled) out.trace.push_back(x0);

  Vector<T> x = x0;
  while (out.iterations < out.cap) {
    Vector<T> y = minplus_mul(neg_bt, maxplus_mul(a, x));
    Vector<T> next = minplus_mul(neg_at, maxplus_mul(b, y));
    ++out.iterations;
    if (cfg.trace_enabled) out.trace.push_back(next);
    if (below_start_everywhere(next, x0, tol)) {
      out.status = Status::NoFiniteSolution;
      out.x = std::move(next);
      return out;
    }
    if (approx_equal(next, x, tol)) {
      out.status = Status::Solution;
      out.x = std::move(x);
      out.y = std::move(y);
      return out;
    }
    x = std::move(next);
  }
  out.status = Status::IterationCap;
  out.x = std::move(x);
  return out;
}

template <class T>
Vector<T> phi(const TwoSidedSystem<T>& sys, const Vector<T>& x, const SolverConfig& cfg) {
  auto run = alternating_homogeneous(sys, x, cfg);
  if (run.status != Status::Solution) {
    throw SolverError("alternating method from " + x.str() + " ended with " +
                          std::string(to_string(run.status)) + " after " +
                          std::to_string(run.iterations) + " iterations",
                      run.status);
  }
  return std::move(run.x);
}

template <class T>
bool is_solution(const TwoSidedSystem<T>& sys, const Vector<T>& x, double tol) {
  if (x.size() != sys.cols()) throw ShapeError("vector dimension does not match the system");
  return approx_equal(maxplus_mul(sys.A(), x), maxplus_mul(sys.B(), x), tol);
}

template <class T>
bool is_stable(const TwoSidedSystem<T>& sys, const Vector<T>& x, double tol) {
  if (!is_solution(sys, x, tol)) throw DomainError("is_stable requires a solution, got " + x.str());
  return approx_equal(HomogeneousStep<T>(sys)(x), x, tol);
}

template <class T>
IndexSet m_set(const TwoSidedSystem<T>& sys, const Vector<T>& x, std::size_t row, double tol) {
  if (row >= sys.rows()) throw DomainError("row index " + std::to_string(row) + " out of range");
  if (!is_solution(sys, x, tol)) throw DomainError("m_set requires a solution, got " + x.str());
  IndexSet ka = attaining_indices(sys.A().row(row), x, tol);
  IndexSet kb = attaining_indices(sys.B().row(row), x, tol);
  IndexSet out;
  std::set_union(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(out));
  return out;
}

#define TROPCLOSURE_INSTANTIATE_SOLVER(T)                                                         \
  template std::uint64_t default_iteration_cap(const TwoSidedSystem<T>&, const Vector<T>&);       \
  template Vector<T> phi0(const TwoSidedSystem<T>&, const Vector<T>&);                            \
  template AlternateOutcome<T> alternating_homogeneous(const TwoSidedSystem<T>&, const Vector<T>&, \
                                                       const SolverConfig&);                      \
  template AlternateOutcome<T> alternating_separated(const Matrix<T>&, const Matrix<T>&,          \
                                                     const Vector<T>&, const SolverConfig&);      \
  template Vector<T> phi(const TwoSidedSystem<T>&, const Vector<T>&, const SolverConfig&);        \
  template bool is_solution(const TwoSidedSystem<T>&, const Vector<T>&, double);                  \
  template bool is_stable(const TwoSidedSystem<T>&, const Vector<T>&, double);                    \
  template IndexSet m_set(const TwoSidedSystem<T>&, const Vector<T>&, std::size_t, double);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_SOLVER)

}  // namespace tropclosure
