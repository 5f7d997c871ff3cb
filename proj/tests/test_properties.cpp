#include <doctest.h>

#include "support/fixtures.hpp"

using namespace fx;

namespace {

struct Instance {
  ref::Mat a;
  ref::Mat b;
  TwoSidedSystem<Integer> sys;
};

Instance random_instance(std::mt19937& rng, std::size_t max_dim, ref::Val k, double eps_rate) {
  const std::size_t m = random_dim(rng, 1, max_dim);
  const std::size_t n = random_dim(rng, 1, max_dim);
  auto a = random_matrix(rng, m, n, k, eps_rate);
  auto b = random_matrix(rng, m, n, k, eps_rate);
  auto sys = validate_system(from_ref(a), from_ref(b));
  return {std::move(a), std::move(b), std::move(sys)};
}

}  // namespace

TEST_CASE("solver agrees with the reference iteration") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = random_instance(rng, 5, 5, 0.15);
    const auto x0 = random_vector(rng, inst.sys.cols(), 5);
    SolverConfig cfg;
    cfg.trace_enabled = true;
    const auto run = alternating_homogeneous(inst.sys, from_ref(x0), cfg);
    const auto expected = ref::alternate(inst.a, inst.b, x0);
    REQUIRE(expected.outcome != ref::Outcome::Cap);
    CHECK(run.iterations == expected.iterations);
    CHECK(to_ref(run.x) == expected.x);
    CHECK((run.status == Status::Solution) == (expected.outcome == ref::Outcome::Solution));
    for (std::size_t r = 0; r < run.trace.size(); ++r) CHECK(to_ref(run.trace[r]) == expected.trace[r]);
  }
}

TEST_CASE("descent, idempotence and lower bounds") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = random_instance(rng, 4, 4, 0.0);
    const std::size_t n = inst.sys.cols();
    SolverConfig cfg;
    cfg.trace_enabled = true;
    const auto run = alternating_homogeneous(inst.sys, from_ref(random_vector(rng, n, 4)), cfg);
    for (std::size_t r = 1; r + 1 < run.trace.size(); ++r) CHECK(leq(run.trace[r + 1], run.trace[r]));

    const auto sols = enumerate_solutions(inst.sys, GridSpec{n, 3});
    for (const auto& y : sols) {
      const auto once = phi0(inst.sys, y);
      CHECK(phi0(inst.sys, once) == once);
      // Any start above y ends above y.
      V start = y;
      for (auto& e : start) e = otimes(e, Z(std::uniform_int_distribution<int>(0, 3)(rng)));
      const auto end = alternating_homogeneous(inst.sys, start);
      REQUIRE(end.status == Status::Solution);
      CHECK(leq(y, end.x));

      bool covered = true;
      std::vector<bool> hit(n, false);
      for (std::size_t i = 0; i < inst.sys.rows(); ++i) {
        for (auto k : m_set(inst.sys, y, i)) hit[k] = true;
      }
      for (bool h : hit) covered = covered && h;
      if (covered) CHECK(is_stable(inst.sys, y));
      if (stable_criterion(inst.sys, y)) CHECK(is_stable(inst.sys, y));
    }
  }
}

TEST_CASE("extended systems: stability, inclusion, contraction") {
  std::mt19937 rng(303);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, 3, 3, 0.1);
    const auto report = compute_closure(inst.sys);
    if (!report.has_finite_solution) continue;
    const auto& ext = report.extension;
    for (const auto& r : report.runs) {
      CHECK(leq(r.raw, ext.c_tilde.row_vector(r.row)));
      CHECK(is_stable(ext.extended, r.raw));
    }
    const auto sols = enumerate_solutions(ext.extended, GridSpec{ext.extended.cols(), 4});
    std::vector<ref::Vec> gens;
    for (const auto& g : report.generators) gens.push_back(to_ref(g));
    for (const auto& y : sols) {
      CHECK(is_stable(ext.extended, y));
      CHECK(minplus_membership(report.generators, y).has_value());
      CHECK(ref::in_span(gens, to_ref(y)));
    }
    if (report.certified_minplus_linear) {
      ++certified;
      for (const auto& p : span_grid_points(report.generators, GridSpec{ext.extended.cols(), 4})) {
        CHECK(is_solution(ext.extended, p));
      }
    }
  }
  CHECK(certified > 0);
}
