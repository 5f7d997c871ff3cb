#include "tropclosure/closure.hpp"

#include <algorithm>

#include "instantiate.hpp"

namespace tropclosure {
namespace {

template <class T>
Matrix<T> c_matrix(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c = elementwise_max(a, b);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = -c(i, j);
  }
  return c;
}

// Largest spread max_j c_ij - min_k c_ik over finite entries of a row.
template <class T>
std::optional<Ext<T>> largest_row_spread(const Matrix<T>& c) {
  std::optional<Ext<T>> best;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    std::optional<Ext<T>> lo, hi;
    for (const auto& e : c.row(i)) {
      if (!e.is_finite()) continue;
      if (!lo || e < *lo) lo = e;
      if (!hi || *hi < e) hi = e;
    }
    if (!lo) continue;
    Ext<T> spread(NumberTraits<T>::sub(hi->value(), lo->value()));
    if (!best || *best < spread) best = spread;
  }
  return best;
}

template <class T>
Ext<T> vector_spread(const Vector<T>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return Ext<T>(NumberTraits<T>::sub(hi->value(), lo->value()));
}

template <class T>
std::optional<Ext<T>> min_finite(const Matrix<T>& m) {
  std::optional<Ext<T>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (e.is_finite() && (!out || e < *out)) out = e;
    }
  }
  return out;
}

}  // namespace

template <class T>
Ext<T> alpha_threshold(const TwoSidedSystem<T>& sys) {
  // Each row of a doubly R-astic system has a finite entry, so j = k already
  // gives 0.
  return largest_row_spread(c_matrix(sys.A(), sys.B())).value();
}

template <class T>
Ext<T> default_alpha(const TwoSidedSystem<T>& sys) {
  // |c_ij - c_ik| ranges over both orders, so its max is the row spread.
  return otimes(alpha_threshold(sys), Ext<T>(NumberTraits<T>::from_int(1)));
}

template <class T>
ExtendedSystem<T> build_extension(const TwoSidedSystem<T>& sys,
                                  const std::optional<std::type_identity_t<Ext<T>>>& alpha_override) {
  const Ext<T> zero(NumberTraits<T>::from_int(0));
  const Ext<T> minus_one(NumberTraits<T>::from_int(-1));

  Ext<T> alpha = default_alpha(sys);
  if (alpha_override) {
    const Ext<T> threshold = alpha_threshold(sys);
    if (!alpha_override->is_finite() || !(zero < *alpha_override) || !(threshold < *alpha_override)) {
      throw DomainError("alpha override " + alpha_override->str() +
                        " must be positive and exceed max(c_ij - c_ik) = " + threshold.str());
    }
    alpha = *alpha_override;
  }

  const std::size_t n = sys.cols();
  Matrix<T> a_ext = vstack(sys.A(), d_matrix(n, alpha, zero));
  Matrix<T> b_ext = vstack(sys.B(), d_matrix(n, alpha, minus_one));

  std::optional<Ext<T>> beta;
  auto lo_a = min_finite(sys.A());
  auto lo_b = min_finite(sys.B());
  const Ext<T> beta_value(NumberTraits<T>::sub(oplus_dual(*lo_a, *lo_b).value(), alpha.value()));
  for (Matrix<T>* m : {&a_ext, &b_ext}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      for (std::size_t j = 0; j < m->cols(); ++j) {
        if ((*m)(i, j).is_neg_inf()) {
          (*m)(i, j) = beta_value;
          beta = beta_value;
        }
      }
    }
  }

  Matrix<T> c_tilde = c_matrix(a_ext, b_ext);
  return ExtendedSystem<T>{sys, validate_system(std::move(a_ext), std::move(b_ext)), alpha, beta,
                           std::move(c_tilde)};
}

template <class T>
std::vector<GeneratorRun<T>> closure_generators(const ExtendedSystem<T>& ext, const SolverConfig& cfg) {
  std::vector<GeneratorRun<T>> runs;
  runs.reserve(ext.c_tilde.rows());
  for (std::size_t i = 0; i < ext.c_tilde.rows(); ++i) {
    GeneratorRun<T> run;
    run.row = i;
    run.start = ext.c_tilde.row_vector(i);
    auto outcome = alternating_homogeneous(ext.extended, run.start, cfg);
    if (outcome.status != Status::Solution) {
      throw GeneratorError("generator run for row " + std::to_string(i) + " ended with " +
                               std::string(to_string(outcome.status)) + " after " +
                               std::to_string(outcome.iterations) + " iterations",
                           outcome.status, i);
    }
    run.raw = std::move(outcome.x);
    run.normalized = normalized(run.raw);
    run.iterations = outcome.iterations;
    runs.push_back(std::move(run));
  }
  return runs;
}

template <class T>
bool boundedness_check(const ExtendedSystem<T>& ext, const std::vector<Vector<T>>& generators) {
  for (const auto& g : generators) {
    if (!g.is_finite()) return false;
    if (!(vector_spread(g) < ext.alpha)) return false;
  }
  return true;
}

template <class T>
std::optional<std::vector<Ext<T>>> minplus_membership(const std::vector<Vector<T>>& generators,
                                                      const Vector<T>& x, double tol) {
  if (!x.is_finite()) throw DomainError("membership is defined for finite vectors");
  std::vector<Ext<T>> coeffs;
  coeffs.reserve(generators.size());
  Vector<T> combo(x.size(), Ext<T>::pos_inf());
  for (const auto& g : generators) {
    if (g.size() != x.size()) throw ShapeError("generator and vector dimensions differ");
    if (!g.is_finite()) throw DomainError("generators must be finite");
    Ext<T> t = Ext<T>::neg_inf();
    for (std::size_t j = 0; j < x.size(); ++j) t = oplus(t, otimes(x[j], -g[j]));
    for (std::size_t j = 0; j < x.size(); ++j) combo[j] = oplus_dual(combo[j], otimes_dual(t, g[j]));
    coeffs.push_back(std::move(t));
  }
  if (!approx_equal(combo, x, tol)) return std::nullopt;
  return coeffs;
}

template <class T>
bool d_solution_predicate(const Ext<T>& alpha, const Vector<T>& x) {
  if (x.is_zero()) return true;
  if (!x.is_finite()) return false;
  return !(alpha < vector_spread(x));
}

#define TROPCLOSURE_INSTANTIATE_CLOSURE(T)                                                        \
  template Ext<T> alpha_threshold(const TwoSidedSystem<T>&);                                      \
  template Ext<T> default_alpha(const TwoSidedSystem<T>&);                                        \
  template ExtendedSystem<T> build_extension(const TwoSidedSystem<T>&,                            \
                                             const std::optional<std::type_identity_t<Ext<T>>>&);                       \
  template std::vector<GeneratorRun<T>> closure_generators(const ExtendedSystem<T>&,              \
                                                           const SolverConfig&);                  \
  template bool boundedness_check(const ExtendedSystem<T>&, const std::vector<Vector<T>>&);       \
  template std::optional<std::vector<Ext<T>>> minplus_membership(const std::vector<Vector<T>>&,   \
                                                                 const Vector<T>&, double);       \
  template bool d_solution_predicate(const Ext<T>&, const Vector<T>&);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_CLOSURE)

}  // namespace tropclosure
