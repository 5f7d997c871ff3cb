// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "support/fixtures.hpp"

using namespace fx;
using Clock = std::chrono::steady_clock;

namespace {

struct Gate {
  int failures = 0;

  void report(int id, bool ok, const std::string& what, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %d: %s  %s  (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  }
};

std::string join(const std::vector<V>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.str();
  return s;
}

// Generators whose contraction and stability criterion 8 inspects.
struct ContractionLog {
  std::size_t checked = 0;
  std::size_t violations = 0;

  void record(const ExtendedSystem<Integer>& ext, const std::vector<GeneratorRun<Integer>>& runs) {
    for (const auto& r : runs) {
      ++checked;
      if (!leq(r.raw, ext.c_tilde.row_vector(r.row)) || !is_stable(ext.extended, r.raw)) ++violations;
    }
  }
};

void criterion1(Gate& gate) {
  SolverConfig cfg;
  cfg.trace_enabled = true;
  const auto sys = worked();
  const V x0{0, 4, 3};
  AlternateOutcome<Integer> run;
  double best_ms = 1e9;
  for (int rep = 0; rep < 20; ++rep) {
    const auto t0 = Clock::now();
    run = alternating_homogeneous(sys, x0, cfg);
    best_ms = std::min(best_ms, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  const bool ok = run.status == Status::Solution && run.iterations == 3 && run.trace.size() == 4 &&
                  run.trace[1] == V{0, 2, 3} && run.trace[2] == V{0, 1, 3} && run.x == V{0, 1, 3} && best_ms < 1.0;
  gate.report(1, ok, "worked example trace (0,4,3) -> (0,2,3) -> (0,1,3), 3 iterations",
              "iterations " + std::to_string(run.iterations) + ", x " + run.x.str() + ", " +
                  std::to_string(best_ms) + " ms");
}

void criterion2(Gate& gate, ContractionLog& log) {
  const std::vector<V> listed{{0, -1, 1}, {0, 1, 3}, {0, -3, -5}, {0, -3, 2}, {0, -3, -5}, {0, -1, 0}, {0, -1, 3}};
  const auto ext = build_extension(worked(), Z(13));
  const auto runs = closure_generators(ext);
  log.record(ext, runs);
  std::vector<V> gens;
  for (const auto& r : runs) gens.push_back(r.normalized);

  std::string mismatched;
  for (std::size_t i = 0; i < listed.size() && i < gens.size(); ++i) {
    if (gens[i] != listed[i]) mismatched += (mismatched.empty() ? "" : ",") + std::to_string(i);
  }
  bool same_span = true;
  for (const auto& p : listed) same_span = same_span && minplus_membership(gens, p).has_value();
  for (const auto& g : gens) same_span = same_span && minplus_membership(listed, g).has_value();

  const bool ok = gens == listed;
  gate.report(2, ok, "alpha = 13 generators equal the listed generators",
              ok ? "all seven match"
                 : "rows " + mismatched + " differ; computed " + join(gens) + "; min-plus spans " +
                       (same_span ? "coincide" : "differ"));
}

void criterion3(Gate& gate, ContractionLog& log) {
  const auto report = compute_closure(final_example());
  log.record(report.extension, report.runs);
  const std::vector<V> expected{{0, -1, 0}, {0, -1, 0}, {0, -3, -5}, {0, -3, 0}};
  const std::vector<std::pair<IndexSet, IndexSet>> k_sets{
      {{0, 1}, {0}}, {{0}, {0, 2}}, {{1, 2}, {2}}, {{0, 1}, {1}}};
  bool ok = report.certified_minplus_linear && report.generators.size() == 7;
  for (std::size_t i = 0; ok && i < expected.size(); ++i) {
    ok = report.generators[i] == expected[i] && report.row_diagnostics[i].k_a == k_sets[i].first &&
         report.row_diagnostics[i].k_b == k_sets[i].second;
  }
  gate.report(3, ok, "certified example: four generators, K-sets, certification",
              "certified " + std::string(report.certified_minplus_linear ? "true" : "false"));
}

void criterion4(Gate& gate) {
  std::mt19937 rng(4);
  int mismatches = 0;
  std::uint64_t points = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = random_dim(rng, 1, 4);
    const long long alpha = std::uniform_int_distribution<long long>(1, 10)(rng);
    const auto d = validate_system(d_matrix<Integer>(n, alpha, 0), d_matrix<Integer>(n, alpha, -1));
    const GridSpec grid{n, alpha + 2, 1'000'000};
    std::set<ref::Vec> found;
    for (const auto& v : enumerate_solutions(d, grid)) found.insert(to_ref(v));
    std::set<ref::Vec> predicted;
    ref::for_each_grid(n, alpha + 2, [&](const ref::Vec& x) {
      ++points;
      bool inside = true;
      for (auto u : x) {
        for (auto v : x) inside = inside && std::llabs(u - v) <= alpha;
      }
      if (inside) predicted.insert(x);
    });
    if (found != predicted) ++mismatches;
  }
  gate.report(4, mismatches == 0, "D-system grid solutions equal {|x_j - x_k| <= alpha} on 50 instances",
              std::to_string(mismatches) + " mismatches over " + std::to_string(points) + " grid points");
}

struct SolverStats {
  int monotone_violations = 0;
  int solution_violations = 0;
  int bound_violations = 0;
  int solutions = 0;
  std::uint64_t max_ratio_num = 0;
};

SolverStats criteria5and9() {
  std::mt19937 rng(5);
  SolverStats s;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = random_dim(rng, 1, 5);
    const std::size_t n = random_dim(rng, 1, 5);
    const auto a = random_matrix(rng, m, n, 5);
    const auto b = random_matrix(rng, m, n, 5);
    const auto sys = validate_system(from_ref(a), from_ref(b));
    ref::Val k = 0;
    for (const auto* mat : {&a, &b}) {
      for (const auto& row : *mat) {
        for (auto v : row) k = std::max(k, std::llabs(v));
      }
    }
    const auto x0 = random_vector(rng, n, k);
    SolverConfig cfg;
    cfg.trace_enabled = true;
    cfg.iteration_cap = 10'000'000;
    const auto run = alternating_homogeneous(sys, from_ref(x0), cfg);
    for (std::size_t r = 1; r + 1 < run.trace.size(); ++r) {
      if (!leq(run.trace[r + 1], run.trace[r])) ++s.monotone_violations;
    }
    if (run.status == Status::Solution) {
      ++s.solutions;
      if (!is_solution(sys, run.x) || !is_stable(sys, run.x)) ++s.solution_violations;
    }
    if (run.status == Status::IterationCap) ++s.solution_violations;
    if (run.iterations > 10 * n * (m + n) * static_cast<std::uint64_t>(k + 1)) ++s.bound_violations;
    s.max_ratio_num = std::max<std::uint64_t>(s.max_ratio_num, run.iterations);
  }
  return s;
}

struct ClosureStats {
  int instances = 0;
  int certified = 0;
  std::uint64_t solutions_checked = 0;
  int inclusion_violations = 0;
  std::uint64_t span_points = 0;
  int converse_violations = 0;
};

ClosureStats criteria6and7(ContractionLog& log) {
  std::mt19937 rng(6);
  ClosureStats s;
  while (s.instances < 100) {
    const std::size_t m = random_dim(rng, 1, 4);
    const std::size_t n = random_dim(rng, 1, 4);
    const auto a = random_matrix(rng, m, n, 5, 0.1);
    const auto b = random_matrix(rng, m, n, 5, 0.1);
    const auto sys = validate_system(from_ref(a), from_ref(b));
    const auto report = compute_closure(sys);
    if (!report.has_finite_solution) continue;
    ++s.instances;
    log.record(report.extension, report.runs);
    const auto& ext = report.extension.extended;
    const GridSpec grid{n, 6};

    std::vector<ref::Vec> gens;
    for (const auto& g : report.generators) gens.push_back(to_ref(g));
    for (const auto& y : enumerate_solutions(ext, grid)) {
      ++s.solutions_checked;
      if (!minplus_membership(report.generators, y) || !ref::in_span(gens, to_ref(y))) ++s.inclusion_violations;
    }
    if (report.certified_minplus_linear) {
      ++s.certified;
      const auto ea = to_ref(ext.A());
      const auto eb = to_ref(ext.B());
      for (const auto& p : span_grid_points(report.generators, grid)) {
        ++s.span_points;
        if (!ref::solves(ea, eb, to_ref(p))) ++s.converse_violations;
      }
    }
  }
  return s;
}

}  // namespace

int main() {
  const auto started = Clock::now();
  Gate gate;
  ContractionLog log;

  criterion1(gate);
  criterion2(gate, log);
  criterion3(gate, log);
  criterion4(gate);

  const auto s5 = criteria5and9();
  gate.report(5, s5.monotone_violations == 0 && s5.solution_violations == 0,
              "200 random systems: monotone traces, returned solutions solve and are stable",
              std::to_string(s5.solutions) + " solutions, " + std::to_string(s5.monotone_violations) +
                  " descent violations, " + std::to_string(s5.solution_violations) + " solution violations");

  const auto s6 = criteria6and7(log);
  gate.report(6, s6.inclusion_violations == 0, "100 random extended systems: grid solutions lie in the span",
              std::to_string(s6.solutions_checked) + " solutions checked, " +
                  std::to_string(s6.inclusion_violations) + " violations");

  ClosureOptions<Integer> opts13;
  opts13.alpha_override = Z(13);
  const bool example_rejected = !compute_closure(worked(), opts13).certified_minplus_linear;
  gate.report(7, s6.converse_violations == 0 && s6.certified > 0 && example_rejected,
              "certified instances: every span grid point solves; alpha = 13 example not certified",
              std::to_string(s6.certified) + " certified, " + std::to_string(s6.span_points) + " span points, " +
                  std::to_string(s6.converse_violations) + " violations, example " +
                  (example_rejected ? "rejected" : "certified"));

  gate.report(8, log.violations == 0 && log.checked > 0, "generators contract below their conjugate rows and are stable",
              std::to_string(log.checked) + " generators, " + std::to_string(log.violations) + " violations");

  const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
  gate.report(9, s5.bound_violations == 0 && seconds < 60.0, "iterations within 10 n (m+n) (K+1); suite under 60 s",
              "max iterations " + std::to_string(s5.max_ratio_num) + ", " + std::to_string(s5.bound_violations) +
                  " bound violations, " + std::to_string(seconds) + " s");

  std::printf("%d of 9 criteria failed\n", gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
