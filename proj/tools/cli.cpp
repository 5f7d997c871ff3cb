#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropclosure/io.hpp"
#include "tropclosure/oracle.hpp"
#include "tropclosure/pipeline.hpp"

namespace tropclosure::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string a_path;
  std::string b_path;
  std::string x0_path;
  std::string x_path;
  std::string generators_path;
  std::string alpha;
  std::string dump_span_path;
  std::string number = "integer";
  long long range = 6;
  std::uint64_t budget = 200'000;
  std::uint64_t max_iter = 0;
  double float_tol = kDefaultFloatTolerance;
  bool float_tol_given = false;
  bool json_output = false;
  bool trace = false;
  bool timing = false;
  std::string echo;
};

struct InputFile {
  std::string path;
  std::string bytes;
};

InputFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return {path, buf.str()};
}

template <class T>
json scalar_json(const Ext<T>& e) {
  if (!e.is_finite()) return e.str();
  if constexpr (std::is_same_v<T, Float>) {
    return e.value();
  } else {
    const T& v = e.value();
    if (NumberTraits<T>::is_integral(v) && v >= T(std::numeric_limits<long long>::min()) &&
        v <= T(std::numeric_limits<long long>::max())) {
      return NumberTraits<T>::to_int(v);
    }
    return e.str();
  }
}

template <class T>
json vector_json(const Vector<T>& v) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(scalar_json(e));
  return arr;
}

json indices_json(const IndexSet& s) {
  json arr = json::array();
  for (auto k : s) arr.push_back(k);
  return arr;
}

template <class T>
json input_json(const InputFile& f, std::size_t rows, std::size_t cols) {
  return json{{"path", f.path},
              {"fnv1a64", fnv1a64_hex(f.bytes)},
              {"shape", std::to_string(rows) + "x" + std::to_string(cols)}};
}

// Plain-text rendering of the same document: nested objects are indented,
// arrays of scalars print inline.
bool is_flat(const json& j) {
  if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured()) return false;
    }
    return true;
  }
  return !j.is_object();
}

std::string flat_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += flat_text(j[i]);
    }
    return s + "]";
  }
  return j.dump();
}

void render_text(const json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << flat_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_flat(j[i])) {
        out << pad << "- " << flat_text(j[i]) << '\n';
      } else {
        out << pad << "- [" << i << "]\n";
        render_text(j[i], indent + 2, out);
      }
    }
  } else {
    out << pad << flat_text(j) << '\n';
  }
}

class Command {
 public:
  Command(const Options& opts, std::ostream& out)
      : opts_(opts), out_(out), started_(std::chrono::steady_clock::now()) {
    doc_["command"] = opts.echo;
    doc_["number_type"] = opts.number;
  }

  template <class T>
  int dispatch();

 private:
  template <class T>
  SolverConfig solver_config() const {
    SolverConfig cfg;
    if (opts_.max_iter > 0) cfg.iteration_cap = opts_.max_iter;
    cfg.trace_enabled = opts_.trace;
    cfg.float_tolerance = opts_.float_tol;
    return cfg;
  }

  template <class T>
  TwoSidedSystem<T> load_system() {
    if (opts_.a_path.empty() || opts_.b_path.empty()) throw DomainError("--a and --b are required");
    InputFile fa = read_file(opts_.a_path);
    InputFile fb = read_file(opts_.b_path);
    Matrix<T> a = parse_with_context<T>(fa, [](std::string_view t) { return parse_matrix<T>(t); });
    Matrix<T> b = parse_with_context<T>(fb, [](std::string_view t) { return parse_matrix<T>(t); });
    doc_["inputs"]["a"] = input_json<T>(fa, a.rows(), a.cols());
    doc_["inputs"]["b"] = input_json<T>(fb, b.rows(), b.cols());
    return validate_system(std::move(a), std::move(b));
  }

  template <class T, class Parse>
  auto parse_with_context(const InputFile& f, Parse parse) {
    try {
      return parse(f.bytes);
    } catch (const ParseError& e) {
      throw ParseError(f.path + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" (")),
                       e.line(), e.column());
    }
  }

  template <class T>
  std::optional<Ext<T>> alpha_override() const {
    if (opts_.alpha.empty()) return std::nullopt;
    try {
      return parse_scalar<T>(opts_.alpha);
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("--alpha: ") + e.what());
    }
  }

  template <class T>
  int solve();
  template <class T>
  int closure(bool full);
  template <class T>
  int member();
  template <class T>
  int verify();

  template <class T>
  json closure_json(const ClosureReport<T>& report, bool full) const;

  int finish(int code) {
    if (opts_.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started_;
      doc_["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    doc_["exit_code"] = code;
    if (opts_.json_output) {
      out_ << doc_.dump(2) << '\n';
    } else {
      render_text(doc_, 0, out_);
    }
    return code;
  }

  const Options& opts_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point started_;
  json doc_;
};

template <class T>
int Command::dispatch() {
  if (opts_.command == "solve") return solve<T>();
  if (opts_.command == "closure") return closure<T>(true);
  if (opts_.command == "check-linearity") return closure<T>(false);
  if (opts_.command == "member") return member<T>();
  if (opts_.command == "verify") return verify<T>();
  throw DomainError("unknown command " + opts_.command);
}

template <class T>
int Command::solve() {
  TwoSidedSystem<T> sys = load_system<T>();
  Vector<T> x0(sys.cols(), Ext<T>(NumberTraits<T>::from_int(0)));
  if (!opts_.x0_path.empty()) {
    InputFile fx = read_file(opts_.x0_path);
    x0 = parse_with_context<T>(fx, [](std::string_view t) { return parse_vector<T>(t); });
    doc_["inputs"]["x0"] = input_json<T>(fx, x0.size(), 1);
  }
  const SolverConfig cfg = solver_config<T>();
  auto run = alternating_homogeneous(sys, x0, cfg);

  json result;
  result["status"] = std::string(to_string(run.status));
  result["iterations"] = run.iterations;
  result["iteration_cap"] = run.cap;
  result["x0"] = vector_json(x0);
  if (run.status == Status::Solution) {
    const double tol = tolerance_for<T>(cfg);
    result["x"] = vector_json(run.x);
    result["y"] = vector_json(run.y);
    result["is_solution"] = is_solution(sys, run.x, tol);
    result["is_stable"] = is_stable(sys, run.x, tol);
  } else {
    result["last_iterate"] = vector_json(run.x);
  }
  if (opts_.trace) {
    json trace = json::array();
    for (const auto& x : run.trace) trace.push_back(vector_json(x));
    result["trace"] = trace;
  }
  doc_["result"] = result;
  switch (run.status) {
    case Status::Solution: return finish(kOk);
    case Status::NoFiniteSolution: return finish(kNoFiniteSolution);
    case Status::IterationCap: return finish(kIterationCap);
  }
  return finish(kOk);
}

template <class T>
json Command::closure_json(const ClosureReport<T>& report, bool full) const {
  json j;
  j["alpha"] = scalar_json(report.alpha());
  j["alpha_source"] = opts_.alpha.empty() ? "default" : "override";
  j["beta"] = report.extension.beta ? scalar_json(*report.extension.beta) : json(nullptr);
  j["extended_rows"] = report.extension.extended.rows();
  j["has_finite_solution"] = report.has_finite_solution;
  if (!report.has_finite_solution) return j;

  json gens = json::array();
  for (const auto& run : report.runs) {
    json g;
    g["row"] = run.row;
    g["generator"] = vector_json(run.normalized);
    if (full) {
      g["start"] = vector_json(run.start);
      g["raw"] = vector_json(run.raw);
      g["iterations"] = run.iterations;
    }
    gens.push_back(g);
  }
  j["generators"] = gens;
  j["projectively_bounded"] = report.projectively_bounded;
  j["closure_kind"] = report.projectively_bounded ? "exact" : "approximation";
  j["certified_minplus_linear"] = report.certified_minplus_linear;
  json rows = json::array();
  for (const auto& d : report.row_diagnostics) {
    rows.push_back(json{{"row", d.row},
                        {"k_a", indices_json(d.k_a)},
                        {"k_b", indices_json(d.k_b)},
                        {"in_r", d.in_r}});
  }
  j["row_diagnostics"] = rows;
  j["iterations_total"] = report.iterations_total;
  if (full) {
    j["closure"] = report.certified_minplus_linear && report.projectively_bounded
                       ? "solution set minus the zero vector equals the min-plus span of the generators"
                       : "min-plus span of the generators (smallest min-plus subspace containing the "
                         "extended solution set)";
  }
  return j;
}

template <class T>
int Command::closure(bool full) {
  TwoSidedSystem<T> sys = load_system<T>();
  ClosureOptions<T> options;
  options.alpha_override = alpha_override<T>();
  options.solver = solver_config<T>();
  options.solver.trace_enabled = false;
  const ClosureReport<T> report = compute_closure(sys, options);
  doc_["closure"] = closure_json(report, full);

  if (full && !opts_.dump_span_path.empty() && report.has_finite_solution) {
    GridSpec grid{sys.cols(), opts_.range, opts_.budget};
    std::ofstream dump(opts_.dump_span_path);
    if (!dump) throw DomainError("cannot write '" + opts_.dump_span_path + "'");
    std::size_t count = 0;
    dump << "# normalized grid points of the min-plus span, |x_j| <= " << opts_.range << "\n";
    for (const auto& p : span_grid_points(report.generators, grid)) {
      dump << serialize_vector(p);
      ++count;
    }
    doc_["span_dump"] = json{{"path", opts_.dump_span_path}, {"points", count}};
  }
  return finish(report.has_finite_solution ? kOk : kNoFiniteSolution);
}

template <class T>
int Command::member() {
  if (opts_.generators_path.empty() || opts_.x_path.empty()) {
    throw DomainError("--generators and --x are required");
  }
  InputFile fg = read_file(opts_.generators_path);
  InputFile fx = read_file(opts_.x_path);
  Matrix<T> g = parse_with_context<T>(fg, [](std::string_view t) { return parse_matrix<T>(t); });
  Vector<T> x = parse_with_context<T>(fx, [](std::string_view t) { return parse_vector<T>(t); });
  doc_["inputs"]["generators"] = input_json<T>(fg, g.rows(), g.cols());
  doc_["inputs"]["x"] = input_json<T>(fx, x.size(), 1);

  std::vector<Vector<T>> gens;
  for (std::size_t i = 0; i < g.rows(); ++i) gens.push_back(g.row_vector(i));
  auto coeffs = minplus_membership(gens, x, tolerance_for<T>(solver_config<T>()));
  json result;
  result["x"] = vector_json(x);
  result["member"] = coeffs.has_value();
  if (coeffs) {
    json c = json::array();
    for (const auto& t : *coeffs) c.push_back(scalar_json(t));
    result["coefficients"] = c;
  }
  doc_["result"] = result;
  return finish(kOk);
}

template <class T>
int Command::verify() {
  TwoSidedSystem<T> sys = load_system<T>();
  ClosureOptions<T> options;
  options.alpha_override = alpha_override<T>();
  options.solver = solver_config<T>();
  options.solver.trace_enabled = false;
  const ClosureReport<T> report = compute_closure(sys, options);
  doc_["closure"] = closure_json(report, false);

  GridSpec grid{sys.cols(), opts_.range, opts_.budget};
  auto verdict = verify_closure(report.extension.extended, report, grid);
  json v;
  v["range"] = opts_.range;
  v["grid_points"] = grid.size();
  v["solutions_checked"] = verdict.solutions_checked;
  v["inclusion_holds"] = verdict.inclusion_holds;
  v["inclusion_witness"] = verdict.inclusion_witness ? vector_json(*verdict.inclusion_witness) : json(nullptr);
  v["converse_checked"] = verdict.converse_checked;
  v["span_points_checked"] = verdict.span_points_checked;
  v["converse_holds"] = verdict.converse_holds;
  v["converse_witness"] = verdict.converse_witness ? vector_json(*verdict.converse_witness) : json(nullptr);
  v["passed"] = verdict.passed();
  doc_["verdict"] = v;
  return finish(verdict.passed() ? kOk : kVerificationFailed);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--number", o.number, "Number type")
      ->check(CLI::IsMember({"integer", "rational", "float"}));
  sub->add_flag("--json", o.json_output, "Emit JSON instead of text");
  sub->add_option("--max-iter", o.max_iter, "Iteration cap for each alternating-method run")
      ->check(CLI::PositiveNumber);
  sub->add_option("--float-tol", o.float_tol, "Comparison tolerance in float mode (implies --number float)")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

void add_system(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a_path, "Matrix A")->required();
  sub->add_option("--b", o.b_path, "Matrix B")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sided max-plus systems: alternating method and min-plus closure"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Run the alternating method on A x = B x");
  add_system(solve, o);
  solve->add_option("--x0", o.x0_path, "Start vector (default: zero vector)");
  solve->add_flag("--trace", o.trace, "Include every iterate");

  auto* closure = app.add_subcommand("closure", "Min-plus closure of the solution set");
  add_system(closure, o);
  closure->add_option("--alpha", o.alpha, "Override alpha");
  closure->add_option("--dump-span", o.dump_span_path, "Write span grid points to FILE");
  closure->add_option("--range", o.range, "Grid half-width for --dump-span")->check(CLI::PositiveNumber);
  closure->add_option("--budget", o.budget, "Maximum grid size");

  auto* check = app.add_subcommand("check-linearity", "Certify min-plus linearity of the solution set");
  add_system(check, o);
  check->add_option("--alpha", o.alpha, "Override alpha");

  auto* member = app.add_subcommand("member", "Min-plus span membership");
  member->add_option("--generators", o.generators_path, "One generator per row")->required();
  member->add_option("--x", o.x_path, "Vector to test")->required();

  auto* verify = app.add_subcommand("verify", "Check the closure against grid enumeration");
  add_system(verify, o);
  verify->add_option("--alpha", o.alpha, "Override alpha");
  verify->add_option("--range", o.range, "Grid half-width")->check(CLI::PositiveNumber);
  verify->add_option("--budget", o.budget, "Maximum grid size");

  for (auto* sub : {solve, closure, check, member, verify}) add_common(sub, o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  o.command = app.get_subcommands().front()->get_name();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) o.echo += ' ';
    o.echo += i == 0 ? std::string("tropclosure") : args[i];
  }
  for (auto* sub : {solve, closure, check, member, verify}) {
    if (sub->count("--float-tol") > 0) {
      o.float_tol_given = true;
      if (sub->count("--number") == 0) o.number = "float";
    }
  }

  Command cmd(o, out);
  try {
    if (o.number == "rational") return cmd.dispatch<Rational>();
    if (o.number == "float") return cmd.dispatch<Float>();
    return cmd.dispatch<Integer>();
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << '\n';
    return e.cause() == Status::IterationCap ? kIterationCap : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace tropclosure::cli
