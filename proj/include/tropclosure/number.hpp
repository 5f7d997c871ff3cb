#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropclosure {

/// Arbitrary-size integers; the default, certifying number type.
using Integer = boost::multiprecision::cpp_int;
/// Exact rationals.
using Rational = boost::multiprecision::cpp_rational;
/// Binary floating point. Comparisons go through a tolerance and results
/// are not certificates.
using Float = double;

inline constexpr double kDefaultFloatTolerance = 1e-9;

/// Per-type hooks for parsing, printing and tolerant comparison of finite
/// values. `tol` is ignored by the exact types.
template <class T>
struct NumberTraits;

template <>
struct NumberTraits<Integer> {
  static constexpr std::string_view name = "integer";
  static constexpr bool exact = true;

  // Throws std::invalid_argument on malformed input.
  static Integer parse(std::string_view token);
  static std::string format(const Integer& v);
  static Integer from_int(long long v) { return Integer(v); }
  static Integer add(const Integer& a, const Integer& b) { return a + b; }
  static Integer sub(const Integer& a, const Integer& b) { return a - b; }
  static bool near(const Integer& a, const Integer& b, double) { return a == b; }
  static bool is_integral(const Integer&) { return true; }
  // ceil(|v|), saturating at UINT64_MAX.
  static std::uint64_t magnitude(const Integer& v);
  static long long to_int(const Integer& v);
};

template <>
struct NumberTraits<Rational> {
  static constexpr std::string_view name = "rational";
  static constexpr bool exact = true;

  // Accepts integers, decimals ("-1.25") and fractions ("3/4").
  static Rational parse(std::string_view token);
  static std::string format(const Rational& v);
  static Rational from_int(long long v) { return Rational(v); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational sub(const Rational& a, const Rational& b) { return a - b; }
  static bool near(const Rational& a, const Rational& b, double) { return a == b; }
  static bool is_integral(const Rational& v);
  static std::uint64_t magnitude(const Rational& v);
  static long long to_int(const Rational& v);
};

template <>
struct NumberTraits<Float> {
  static constexpr std::string_view name = "float";
  static constexpr bool exact = false;

  static Float parse(std::string_view token);
  static std::string format(Float v);
  static Float from_int(long long v) { return static_cast<Float>(v); }
  // Throws OverflowError when the sum leaves the finite range.
  static Float add(Float a, Float b);
  static Float sub(Float a, Float b);
  static bool near(Float a, Float b, double tol);
  static bool is_integral(Float v);
  static std::uint64_t magnitude(Float v);
  static long long to_int(Float v);
};

/// Tolerance used when a caller does not pass one: 0 for the exact types.
template <class T>
inline constexpr double default_tolerance = NumberTraits<T>::exact ? 0.0 : kDefaultFloatTolerance;

}  // namespace tropclosure
