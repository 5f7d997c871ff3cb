#include "tropclosure/number.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

#include "tropclosure/error.hpp"

namespace tropclosure {
namespace {

constexpr auto kMaxU64 = std::numeric_limits<std::uint64_t>::max();

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

struct SignedDigits {
  bool negative = false;
  std::string_view body;
};

SignedDigits split_sign(std::string_view token) {
  SignedDigits out;
  out.body = token;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    out.negative = token.front() == '-';
    out.body.remove_prefix(1);
  }
  return out;
}

// Boost reads a leading 0 as an octal prefix.
Integer decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

std::invalid_argument bad_literal(std::string_view token, std::string_view type) {
  return std::invalid_argument("not a valid " + std::string(type) + " literal: '" +
                               std::string(token) + "'");
}

}  // namespace

// Integer

Integer NumberTraits<Integer>::parse(std::string_view token) {
  auto [negative, body] = split_sign(token);
  if (!is_digits(body)) throw bad_literal(token, name);
  Integer v = decimal(body);
  return negative ? Integer(-v) : v;
}

std::string NumberTraits<Integer>::format(const Integer& v) { return v.str(); }

std::uint64_t NumberTraits<Integer>::magnitude(const Integer& v) {
  Integer a = abs(v);
  if (a > Integer(kMaxU64)) return kMaxU64;
  return a.convert_to<std::uint64_t>();
}

long long NumberTraits<Integer>::to_int(const Integer& v) {
  if (v > Integer(std::numeric_limits<long long>::max()) ||
      v < Integer(std::numeric_limits<long long>::min())) {
    throw OverflowError("integer does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<long long>();
}

// Rational

Rational NumberTraits<Rational>::parse(std::string_view token) {
  auto [negative, body] = split_sign(token);
  Rational v;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw bad_literal(token, name);
    Integer d = decimal(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(token) + "'");
    v = Rational(decimal(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_digits(whole)) ||
        (!frac.empty() && !is_digits(frac))) {
      throw bad_literal(token, name);
    }
    Integer scale = pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer digits = decimal(std::string(whole) + std::string(frac));
    v = Rational(digits, scale);
  } else {
    if (!is_digits(body)) throw bad_literal(token, name);
    v = Rational(decimal(body));
  }
  return negative ? Rational(-v) : v;
}

std::string NumberTraits<Rational>::format(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

bool NumberTraits<Rational>::is_integral(const Rational& v) { return denominator(v) == 1; }

std::uint64_t NumberTraits<Rational>::magnitude(const Rational& v) {
  Integer num = abs(numerator(v));
  Integer den = denominator(v);
  Integer c = (num + den - 1) / den;
  if (c > Integer(kMaxU64)) return kMaxU64;
  return c.convert_to<std::uint64_t>();
}

long long NumberTraits<Rational>::to_int(const Rational& v) {
  if (!is_integral(v)) throw DomainError("not an integer: " + format(v));
  return NumberTraits<Integer>::to_int(numerator(v));
}

// Float

Float NumberTraits<Float>::parse(std::string_view token) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  // from_chars would accept "inf"/"nan"; infinities are handled a level up.
  for (char c : body) {
    if (!((c >= '0' && c <= '9') || c == '-' || c == '.' || c == 'e' || c == 'E' || c == '+')) {
      throw bad_literal(token, name);
    }
  }
  Float v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty()) {
    throw bad_literal(token, name);
  }
  if (!std::isfinite(v)) throw bad_literal(token, name);
  return v;
}

std::string NumberTraits<Float>::format(Float v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

Float NumberTraits<Float>::add(Float a, Float b) {
  Float s = a + b;
  if (!std::isfinite(s)) throw OverflowError("floating-point overflow in " + format(a) + " + " + format(b));
  return s;
}

Float NumberTraits<Float>::sub(Float a, Float b) {
  Float s = a - b;
  if (!std::isfinite(s)) throw OverflowError("floating-point overflow in " + format(a) + " - " + format(b));
  return s;
}

bool NumberTraits<Float>::near(Float a, Float b, double tol) { return std::fabs(a - b) <= tol; }

bool NumberTraits<Float>::is_integral(Float v) { return std::floor(v) == v; }

std::uint64_t NumberTraits<Float>::magnitude(Float v) {
  double c = std::ceil(std::fabs(v));
  if (c >= 1.8e19) return kMaxU64;
  return static_cast<std::uint64_t>(c);
}

long long NumberTraits<Float>::to_int(Float v) {
  if (!is_integral(v) || std::fabs(v) > 9.2e18) throw DomainError("not a 64-bit integer: " + format(v));
  return static_cast<long long>(v);
}

}  // namespace tropclosure
