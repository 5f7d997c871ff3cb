#include <doctest.h>

#include "support/fixtures.hpp"

using namespace fx;

TEST_CASE("K-sets of the certified example") {
  const V x{0, -1, 0};
  CHECK(k_set(V{0, 1, -1}, x) == IndexSet{0, 1});
  CHECK(k_set(V{0, -1, -1}, x) == IndexSet{0});
  CHECK(k_set(V{0, 0}, V{4, 4}) == IndexSet{0, 1});
  CHECK_THROWS_AS(k_set(V{Z::neg_inf(), 0}, V{0, Z::neg_inf()}), DomainError);
}

TEST_CASE("membership in R") {
  const Z e = Z::neg_inf();
  CHECK(in_r(V{0, 1, -1}, V{0, -1, -1}, V{0, -1, 0}));
  CHECK_FALSE(in_r(V{0, 0, e}, V{e, 0, 0}, V{0, 0, 0}));
  CHECK(in_r(V{0, 4, 6}, V{0, 4, 6}, V{0, 1, 3}));
  CHECK_FALSE(in_r(V{0, 1, -1}, V{0, -1, -1}, V{0, 4, 3}));

  // K(a) = {0}, K(b) = {0, 2}: only the symmetric reading of case 2 accepts.
  CHECK(in_r(V{0, -5, -5}, V{0, -4, 0}, V{0, -1, 0}));
  CHECK(in_r(V{0, -4, 0}, V{0, -5, -5}, V{0, -1, 0}));
}

TEST_CASE("R agrees with local min-plus convexity") {
  std::mt19937 rng(20260916);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = random_dim(rng, 1, 3);
    // Narrow ranges produce many ties, which is where R is decided.
    ref::Vec a = fx::random_vector(rng, n, 1);
    ref::Vec b = fx::random_vector(rng, n, 1);
    const ref::Vec x = fx::random_vector(rng, n, 1);
    if (ref::max_times({a}, x) != ref::max_times({b}, x)) continue;
    const bool expected = ref::locally_minplus_convex(a, b, x);
    CHECK(in_r(from_ref(a), from_ref(b), from_ref(x)) == expected);
    (expected ? accepted : rejected)++;
  }
  CHECK(accepted > 20);
  CHECK(rejected > 20);
}

TEST_CASE("scale invariance and symmetry") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = random_dim(rng, 1, 4);
    const V a = from_ref(fx::random_vector(rng, n, 3));
    const V b = from_ref(fx::random_vector(rng, n, 3));
    const V x = from_ref(fx::random_vector(rng, n, 3));
    const Z c(std::uniform_int_distribution<int>(-9, 9)(rng));
    CHECK(in_r(a, b, x) == in_r(a, b, scale(c, x)));
    CHECK(in_r(a, b, x) == in_r(b, a, x));
    CHECK(k_set(a, x) == k_set(a, scale(c, x)));
  }
}

TEST_CASE("certification") {
  const auto fin = build_extension(final_example());
  std::vector<V> gens;
  for (const auto& r : closure_generators(fin)) gens.push_back(r.normalized);
  CHECK(certify_minplus_linear(fin, gens));

  const auto diags = row_diagnostics(fin.extended, gens);
  REQUIRE(diags.size() == 7);
  CHECK(diags[0].k_a == IndexSet{0, 1});
  CHECK(diags[0].k_b == IndexSet{0});
  CHECK(diags[1].k_a == IndexSet{0});
  CHECK(diags[1].k_b == IndexSet{0, 2});
  CHECK(diags[2].k_a == IndexSet{1, 2});
  CHECK(diags[2].k_b == IndexSet{2});
  CHECK(diags[3].k_a == IndexSet{0, 1});
  CHECK(diags[3].k_b == IndexSet{1});

  const auto worked13 = build_extension(worked(), Z(13));
  std::vector<V> gens13;
  for (const auto& r : closure_generators(worked13)) gens13.push_back(r.normalized);
  CHECK_FALSE(certify_minplus_linear(worked13, gens13));
  const auto bad = row_diagnostics(worked13.extended, gens13);
  const ref::Extended e = ref::extend(to_ref(worked_a()), to_ref(worked_b()), 13);
  bool any_failure = false;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const bool expected = ref::locally_minplus_convex(e.a[i], e.b[i], to_ref(gens13[i]));
    CHECK(bad[i].in_r == expected);
    any_failure = any_failure || !expected;
  }
  CHECK(any_failure);

  const auto same = build_extension(validate_system(worked_a(), worked_a()));
  std::vector<V> gens_same;
  for (const auto& r : closure_generators(same)) gens_same.push_back(r.normalized);
  CHECK(certify_minplus_linear(same, gens_same));
}

TEST_CASE("stability criterion") {
  const auto ext = build_extension(worked(), Z(13));
  for (const auto& r : closure_generators(ext)) {
    CHECK(stable_criterion(ext.extended, r.raw));
    CHECK(is_stable(ext.extended, r.raw));
  }
  const auto flat = validate_system(M{{0, 0}}, M{{0, 0}});
  CHECK_FALSE(stable_criterion(flat, V{0, 1}));
  CHECK(stable_criterion(validate_system(M{{2}}, M{{2}}), V{5}));
}
