#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace monodyn {

// Size q of a finite field with q elements, validated to be a prime power.
class FieldSize {
 public:
  explicit FieldSize(std::uint64_t q) {
    if (q < 2 || q > 0xffffffffULL)
      throw std::invalid_argument("field size must lie in [2, 2^32): got " +
                                  std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    std::uint32_t k = 0;
    std::uint64_t m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1)
      throw std::invalid_argument("field size must be a prime power: got " +
                                  std::to_string(q));
    q_ = static_cast<std::uint32_t>(q);
    p_ = static_cast<std::uint32_t>(p);
    k_ = k;
  }

  std::uint32_t value() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t extension_degree() const noexcept { return k_; }
  // Order q-1 of the multiplicative group of the field.
  std::uint32_t unit_order() const noexcept { return q_ - 1; }

  friend bool operator==(const FieldSize& a, const FieldSize& b) noexcept {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const FieldSize& a, const FieldSize& b) noexcept {
    return a.q_ != b.q_;
  }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t k_;
};

// Canonical exponent representative under the relation x^q = x that holds for
// every element x of a field with q elements: 0 maps to 0, and c >= 1 maps to
// the unique value in [1, q-1] congruent to c modulo q-1.  Equivalently this
// is the degree of the remainder of t^c divided by t^q - t.
inline std::uint32_t reduce_exponent(std::uint64_t c, const FieldSize& field) {
  if (c == 0) return 0;
  return static_cast<std::uint32_t>((c - 1) % field.unit_order()) + 1;
}

// An exponent in [0, q-1], closed under the reduced addition and
// multiplication below.  Operands must share the same field size.
class Exponent {
 public:
  Exponent(const FieldSize& field, std::uint64_t raw)
      : field_(field), value_(reduce_exponent(raw, field)) {}

  std::uint32_t value() const noexcept { return value_; }
  const FieldSize& field() const noexcept { return field_; }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    require_same_field(a, b);
    return Exponent(a.field_,
                    static_cast<std::uint64_t>(a.value_) + b.value_);
  }
  friend Exponent operator*(const Exponent& a, const Exponent& b) {
    require_same_field(a, b);
    return Exponent(a.field_,
                    static_cast<std::uint64_t>(a.value_) * b.value_);
  }
  friend bool operator==(const Exponent& a, const Exponent& b) {
    require_same_field(a, b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }

 private:
  static void require_same_field(const Exponent& a, const Exponent& b) {
    if (a.field_ != b.field_)
      throw std::invalid_argument(
          "exponent arithmetic across different field sizes: q=" +
          std::to_string(a.field_.value()) + " vs q=" +
          std::to_string(b.field_.value()));
  }

  FieldSize field_;
  std::uint32_t value_;
};

// Exponent extended with a bottom element marking a component that is the
// constant zero function.  Bottom absorbs addition.  In multiplication the
// plain exponent 0 wins over bottom; otherwise bottom absorbs.
class ExtExponent {
 public:
  explicit ExtExponent(Exponent e) : field_(e.field()), value_(e) {}
  static ExtExponent bottom(const FieldSize& field) {
    return ExtExponent(field);
  }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  const Exponent& exponent() const {
    if (!value_) throw std::logic_error("bottom has no exponent value");
    return *value_;
  }
  const FieldSize& field() const noexcept { return field_; }

  friend ExtExponent operator+(const ExtExponent& a, const ExtExponent& b) {
    require_same_field(a, b);
    if (a.is_bottom() || b.is_bottom()) return bottom(a.field_);
    return ExtExponent(*a.value_ + *b.value_);
  }
  friend ExtExponent operator*(const ExtExponent& a, const ExtExponent& b) {
    require_same_field(a, b);
    if ((!a.is_bottom() && a.value_->value() == 0) ||
        (!b.is_bottom() && b.value_->value() == 0))
      return ExtExponent(Exponent(a.field_, 0));
    if (a.is_bottom() || b.is_bottom()) return bottom(a.field_);
    return ExtExponent(*a.value_ * *b.value_);
  }
  friend bool operator==(const ExtExponent& a, const ExtExponent& b) {
    require_same_field(a, b);
    if (a.is_bottom() != b.is_bottom()) return false;
    if (a.is_bottom()) return true;
    return a.value_->value() == b.value_->value();
  }
  friend bool operator!=(const ExtExponent& a, const ExtExponent& b) {
    return !(a == b);
  }

 private:
  explicit ExtExponent(const FieldSize& field) : field_(field) {}
  static void require_same_field(const ExtExponent& a, const ExtExponent& b) {
    if (a.field_ != b.field_)
      throw std::invalid_argument(
          "exponent arithmetic across different field sizes: q=" +
          std::to_string(a.field_.value()) + " vs q=" +
          std::to_string(b.field_.value()));
  }

  FieldSize field_;
  std::optional<Exponent> value_;
};

}  // namespace monodyn
