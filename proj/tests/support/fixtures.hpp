#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <vector>

#include "reference.hpp"
#include "tropclosure/closure.hpp"
#include "tropclosure/oracle.hpp"
#include "tropclosure/pipeline.hpp"

namespace tropclosure {

template <class T>
std::ostream& operator<<(std::ostream& os, const Vector<T>& v) {
  return os << v.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  return os << '\n' << m.str();
}

}  // namespace tropclosure

namespace fx {

using namespace tropclosure;
using Z = Ext<Integer>;
using V = Vector<Integer>;
using M = Matrix<Integer>;

inline M worked_a() { return M{{0, 1, -1}, {0, -5, -5}, {0, 4, 6}, {0, 3, -2}}; }
inline M worked_b() { return M{{0, -1, -1}, {0, -4, -3}, {-1, 1, 6}, {-1, 3, -3}}; }
inline M final_b() { return M{{0, -1, -1}, {0, -4, 0}, {-1, 1, 6}, {-1, 3, -3}}; }

inline TwoSidedSystem<Integer> worked() { return validate_system(worked_a(), worked_b()); }
inline TwoSidedSystem<Integer> final_example() { return validate_system(worked_a(), final_b()); }

inline ref::Val to_ref(const Z& e) {
  if (e.is_neg_inf()) return ref::kNeg;
  if (e.is_pos_inf()) return ref::kPos;
  return e.value().convert_to<long long>();
}

inline Z from_ref(ref::Val v) {
  if (v == ref::kNeg) return Z::neg_inf();
  if (v == ref::kPos) return Z::pos_inf();
  return Z(v);
}

inline ref::Vec to_ref(const V& v) {
  ref::Vec out;
  for (const auto& e : v) out.push_back(to_ref(e));
  return out;
}

inline ref::Mat to_ref(const M& m) {
  ref::Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_ref(m.row_vector(i)));
  return out;
}

inline V from_ref(const ref::Vec& v) {
  std::vector<Z> out;
  for (auto e : v) out.push_back(from_ref(e));
  return V(std::move(out));
}

inline M from_ref(const ref::Mat& m) {
  std::vector<std::vector<Z>> rows;
  for (const auto& r : m) {
    std::vector<Z> row;
    for (auto e : r) row.push_back(from_ref(e));
    rows.push_back(std::move(row));
  }
  return M::from_rows(rows);
}

// Random integer matrix with entries in [-k, k]; cells become ε with
// probability eps_rate, then every row and column is given a finite entry.
inline ref::Mat random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, ref::Val k,
                              double eps_rate = 0.0) {
  std::uniform_int_distribution<ref::Val> entry(-k, k);
  std::bernoulli_distribution eps(eps_rate);
  ref::Mat a(m, ref::Vec(n));
  for (auto& row : a) {
    for (auto& v : row) v = eps(rng) ? ref::kNeg : entry(rng);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::all_of(a[i].begin(), a[i].end(), [](ref::Val v) { return v == ref::kNeg; })) {
      a[i][std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = entry(rng);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) any = any || a[i][j] != ref::kNeg;
    if (!any) a[std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)][j] = entry(rng);
  }
  return a;
}

inline ref::Vec random_vector(std::mt19937& rng, std::size_t n, ref::Val k) {
  std::uniform_int_distribution<ref::Val> entry(-k, k);
  ref::Vec v(n);
  for (auto& e : v) e = entry(rng);
  return v;
}

inline std::size_t random_dim(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace fx
