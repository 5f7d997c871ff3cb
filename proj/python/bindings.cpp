#include <cmath>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropclosure/io.hpp"
#include "tropclosure/oracle.hpp"
#include "tropclosure/pipeline.hpp"

namespace py = pybind11;
using namespace tropclosure;

namespace {

using T = Integer;

Ext<T> to_ext(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    double d = h.cast<double>();
    if (std::isinf(d)) return d < 0 ? Ext<T>::neg_inf() : Ext<T>::pos_inf();
    if (std::floor(d) != d) throw DomainError("non-integral entry " + std::to_string(d));
  }
  if (py::isinstance<py::str>(h)) return parse_scalar<T>(h.cast<std::string>());
  return Ext<T>(NumberTraits<T>::parse(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()));
}

py::object from_ext(const Ext<T>& e) {
  if (e.is_neg_inf()) return py::float_(-INFINITY);
  if (e.is_pos_inf()) return py::float_(INFINITY);
  return py::reinterpret_steal<py::object>(PyLong_FromString(e.value().str().c_str(), nullptr, 10));
}

Vector<T> to_vector(const py::sequence& seq) {
  std::vector<Ext<T>> v;
  for (const auto& item : seq) v.push_back(to_ext(item));
  return Vector<T>(std::move(v));
}

Matrix<T> to_matrix(const py::sequence& rows) {
  std::vector<std::vector<Ext<T>>> out;
  for (const auto& row : rows) {
    std::vector<Ext<T>> r;
    for (const auto& item : py::reinterpret_borrow<py::sequence>(row)) r.push_back(to_ext(item));
    out.push_back(std::move(r));
  }
  return Matrix<T>::from_rows(std::move(out));
}

py::list from_vector(const Vector<T>& v) {
  py::list out;
  for (const auto& e : v) out.append(from_ext(e));
  return out;
}

py::list from_vectors(const std::vector<Vector<T>>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(from_vector(v));
  return out;
}

py::list from_matrix(const Matrix<T>& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vector(m.row_vector(i)));
  return out;
}

TwoSidedSystem<T> system(const py::sequence& a, const py::sequence& b) {
  return validate_system(to_matrix(a), to_matrix(b));
}

SolverConfig config(std::optional<std::uint64_t> max_iter, bool trace = false) {
  SolverConfig cfg;
  cfg.iteration_cap = max_iter;
  cfg.trace_enabled = trace;
  return cfg;
}

py::dict outcome_dict(const AlternateOutcome<T>& r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["x"] = from_vector(r.x);
  d["y"] = r.status == Status::Solution ? py::object(from_vector(r.y)) : py::object(py::none());
  d["iterations"] = r.iterations;
  d["iteration_cap"] = r.cap;
  d["trace"] = from_vectors(r.trace);
  return d;
}

py::list index_list(const IndexSet& s) {
  py::list out;
  for (auto k : s) out.append(k);
  return out;
}

std::optional<Ext<T>> alpha_arg(const py::object& alpha) {
  if (alpha.is_none()) return std::nullopt;
  return to_ext(alpha);
}

py::dict report_dict(const ClosureReport<T>& r) {
  py::dict d;
  d["alpha"] = from_ext(r.alpha());
  d["beta"] = r.extension.beta ? from_ext(*r.extension.beta) : py::object(py::none());
  d["extended_a"] = from_matrix(r.extension.extended.A());
  d["extended_b"] = from_matrix(r.extension.extended.B());
  d["c_tilde"] = from_matrix(r.extension.c_tilde);
  d["has_finite_solution"] = r.has_finite_solution;
  d["generators"] = from_vectors(r.generators);
  py::list raw;
  for (const auto& run : r.runs) raw.append(from_vector(run.raw));
  d["raw_generators"] = raw;
  d["projectively_bounded"] = r.projectively_bounded;
  d["certified_minplus_linear"] = r.certified_minplus_linear;
  py::list rows;
  for (const auto& diag : r.row_diagnostics) {
    py::dict row;
    row["row"] = diag.row;
    row["k_a"] = index_list(diag.k_a);
    row["k_b"] = index_list(diag.k_b);
    row["in_r"] = diag.in_r;
    rows.append(row);
  }
  d["row_diagnostics"] = rows;
  d["iterations_total"] = r.iterations_total;
  return d;
}

ClosureReport<T> closure_of(const TwoSidedSystem<T>& sys, const py::object& alpha,
                            std::optional<std::uint64_t> max_iter) {
  ClosureOptions<T> options;
  options.alpha_override = alpha_arg(alpha);
  options.solver = config(max_iter);
  return compute_closure(sys, options);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact max-plus two-sided systems and their min-plus closure (integer entries)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PipelineError>(m, "PipelineError", base.ptr());
  py::register_exception<SolverError>(m, "SolverError", base.ptr());

  m.def(
      "phi0",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x) {
        return from_vector(phi0(system(a, b), to_vector(x)));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "alternating",
      [](const py::sequence& a, const py::sequence& b, std::optional<py::sequence> x0,
         std::optional<std::uint64_t> max_iter, bool trace) {
        auto sys = system(a, b);
        Vector<T> start = x0 ? to_vector(*x0) : Vector<T>(sys.cols(), Ext<T>(0));
        return outcome_dict(alternating_homogeneous(sys, start, config(max_iter, trace)));
      },
      py::arg("a"), py::arg("b"), py::arg("x0") = py::none(), py::arg("max_iter") = py::none(),
      py::arg("trace") = false);

  m.def(
      "alternating_separated",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x0,
         std::optional<std::uint64_t> max_iter) {
        return outcome_dict(alternating_separated(to_matrix(a), to_matrix(b), to_vector(x0), config(max_iter)));
      },
      py::arg("a"), py::arg("b"), py::arg("x0"), py::arg("max_iter") = py::none());

  m.def(
      "phi",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x) {
        return from_vector(phi(system(a, b), to_vector(x)));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "is_solution",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x) {
        return is_solution(system(a, b), to_vector(x));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "is_stable",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x) {
        return is_stable(system(a, b), to_vector(x));
      },
      py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "m_set",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& x, std::size_t row) {
        return index_list(m_set(system(a, b), to_vector(x), row));
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("row"));

  m.def(
      "compute_closure",
      [](const py::sequence& a, const py::sequence& b, const py::object& alpha,
         std::optional<std::uint64_t> max_iter) { return report_dict(closure_of(system(a, b), alpha, max_iter)); },
      py::arg("a"), py::arg("b"), py::arg("alpha") = py::none(), py::arg("max_iter") = py::none());

  m.def(
      "minplus_membership",
      [](const py::sequence& generators, const py::sequence& x) -> py::object {
        std::vector<Vector<T>> gens;
        for (const auto& g : generators) gens.push_back(to_vector(py::reinterpret_borrow<py::sequence>(g)));
        auto coeffs = minplus_membership(gens, to_vector(x));
        if (!coeffs) return py::none();
        py::list out;
        for (const auto& t : *coeffs) out.append(from_ext(t));
        return out;
      },
      py::arg("generators"), py::arg("x"));

  m.def(
      "k_set",
      [](const py::sequence& row, const py::sequence& x) { return index_list(k_set(to_vector(row), to_vector(x))); },
      py::arg("row"), py::arg("x"));

  m.def(
      "in_r",
      [](const py::sequence& a_row, const py::sequence& b_row, const py::sequence& x) {
        return in_r(to_vector(a_row), to_vector(b_row), to_vector(x));
      },
      py::arg("a_row"), py::arg("b_row"), py::arg("x"));

  m.def(
      "enumerate_solutions",
      [](const py::sequence& a, const py::sequence& b, long long range, std::uint64_t budget) {
        auto sys = system(a, b);
        return from_vectors(enumerate_solutions(sys, GridSpec{sys.cols(), range, budget}));
      },
      py::arg("a"), py::arg("b"), py::arg("range"), py::arg("budget") = 200'000);

  m.def(
      "verify_closure",
      [](const py::sequence& a, const py::sequence& b, long long range, const py::object& alpha,
         std::uint64_t budget) {
        auto sys = system(a, b);
        auto report = closure_of(sys, alpha, std::nullopt);
        auto v = verify_closure(report.extension.extended, report, GridSpec{sys.cols(), range, budget});
        py::dict d;
        d["solutions_checked"] = v.solutions_checked;
        d["inclusion_holds"] = v.inclusion_holds;
        d["converse_checked"] = v.converse_checked;
        d["span_points_checked"] = v.span_points_checked;
        d["converse_holds"] = v.converse_holds;
        d["passed"] = v.passed();
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("range") = 6, py::arg("alpha") = py::none(),
      py::arg("budget") = 200'000);

  m.def(
      "parse_matrix", [](const std::string& text) { return from_matrix(parse_matrix<T>(text)); }, py::arg("text"));
}
