#pragma once

// Extended tropical scalars R ∪ {ε, ε′} with the max-plus pair (⊕, ⊗) and
// the min-plus pair (⊕′, ⊗′).
//
//   ε  = -inf  additive identity of max-plus, absorbing for ⊗
//   ε′ = +inf  additive identity of min-plus, absorbing for ⊗′
//
// Mixed infinities: ε ⊗ ε′ = ε and ε ⊗′ ε′ = ε′. A finite value plus an
// infinity is that infinity under both products. Ordering is
// ε < every finite < ε′.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "tropclosure/error.hpp"
#include "tropclosure/number.hpp"

namespace tropclosure {

enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

template <class T>
class Ext {
 public:
  using value_type = T;
  using traits = NumberTraits<T>;

  /// ε.
  Ext() = default;
  Ext(T v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
  template <class I>
    requires(std::is_integral_v<I> && !std::is_same_v<T, I>)
  Ext(I v) : Ext(traits::from_int(static_cast<long long>(v))) {}  // NOLINT(implicit)

  static Ext neg_inf() { return Ext(); }
  static Ext pos_inf() {
    Ext e;
    e.kind_ = Kind::PosInf;
    return e;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  const T& value() const {
    if (kind_ != Kind::Finite) throw DomainError("value() on an infinite scalar");
    return value_;
  }

  Ext operator-() const {
    switch (kind_) {
      case Kind::NegInf: return pos_inf();
      case Kind::PosInf: return neg_inf();
      case Kind::Finite: break;
    }
    return Ext(T(-value_));
  }

  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend std::weak_ordering operator<=>(const Ext& a, const Ext& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::weak_ordering::equivalent;
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (b.value_ < a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      case Kind::Finite: break;
    }
    return traits::format(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ext& e) { return os << e.str(); }

 private:
  Kind kind_ = Kind::NegInf;
  T value_{};
};

/// a ⊕ b = max(a, b)
template <class T>
Ext<T> oplus(const Ext<T>& a, const Ext<T>& b) {
  return a < b ? b : a;
}

/// a ⊕′ b = min(a, b)
template <class T>
Ext<T> oplus_dual(const Ext<T>& a, const Ext<T>& b) {
  return b < a ? b : a;
}

/// a ⊗ b = a + b with ε absorbing, including ε ⊗ ε′ = ε.
template <class T>
Ext<T> otimes(const Ext<T>& a, const Ext<T>& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Ext<T>::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return Ext<T>::pos_inf();
  return Ext<T>(NumberTraits<T>::add(a.value(), b.value()));
}

/// a ⊗′ b = a + b with ε′ absorbing, including ε ⊗′ ε′ = ε′.
template <class T>
Ext<T> otimes_dual(const Ext<T>& a, const Ext<T>& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return Ext<T>::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return Ext<T>::neg_inf();
  return Ext<T>(NumberTraits<T>::add(a.value(), b.value()));
}

/// Equality up to `tol` for Float; exact for the other types.
template <class T>
bool near(const Ext<T>& a, const Ext<T>& b, double tol = default_tolerance<T>) {
  if (a.kind() != b.kind()) return false;
  return !a.is_finite() || NumberTraits<T>::near(a.value(), b.value(), tol);
}

/// a < b by more than `tol`.
template <class T>
bool clearly_less(const Ext<T>& a, const Ext<T>& b, double tol = default_tolerance<T>) {
  return a < b && !near(a, b, tol);
}

}  // namespace tropclosure
