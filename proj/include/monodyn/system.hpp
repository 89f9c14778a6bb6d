#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodyn/matrix.hpp"

namespace monodyn {

// Element of a field with q elements, stored multiplicatively: either the
// field zero, or g^k for a fixed generator g of the unit group and a discrete
// log k in [0, q-2].  No additive structure is ever needed, so the generator
// itself stays abstract.
class FieldElement {
 public:
  static FieldElement zero(const FieldSize& field) {
    return FieldElement(field, 0);
  }
  static FieldElement unit(const FieldSize& field, std::uint64_t log) {
    return FieldElement(field, 1 + static_cast<std::uint32_t>(
                                      log % field.unit_order()));
  }
  // Digit encoding: 0 is the field zero, d >= 1 is the unit g^(d-1).
  static FieldElement from_digit(const FieldSize& field, std::uint32_t digit);

  bool is_zero() const noexcept { return rep_ == 0; }
  std::uint32_t log() const;
  std::uint32_t digit() const noexcept { return rep_; }
  const FieldSize& field() const noexcept { return field_; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  FieldElement(const FieldSize& field, std::uint32_t rep)
      : field_(field), rep_(rep) {}

  FieldSize field_;
  std::uint32_t rep_;
};

// Point of the state space (F_q)^n, held as one digit per coordinate.
struct State {
  FieldSize field;
  std::vector<std::uint32_t> digits;

  std::uint32_t dim() const noexcept {
    return static_cast<std::uint32_t>(digits.size());
  }
  FieldElement coordinate(std::uint32_t i) const {
    return FieldElement::from_digit(field, digits[i]);
  }

  friend bool operator==(const State& a, const State& b) {
    return a.field == b.field && a.digits == b.digits;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
};

// Number of states q^n; throws std::overflow_error past 2^63.
std::uint64_t state_count(const FieldSize& field, std::uint32_t n);

// States enumerate as mixed-radix integers with coordinate 0 as the least
// significant base-q digit.
std::uint64_t encode_state(const State& s);
State decode_state(const FieldSize& field, std::uint32_t n,
                   std::uint64_t index);

State all_ones_state(const FieldSize& field, std::uint32_t n);
State origin_state(const FieldSize& field, std::uint32_t n);

// Coordinate digits rendered in coordinate order, e.g. "012" for
// (0, g^0, g^1).  For q > 10 digits are separated by dots.
std::string state_digits(const State& s);

// Map f: (F_q)^n -> (F_q)^n whose i-th component is the monomial
// x_1^{F_i1} ... x_n^{F_in}.  The matrix of exponents determines the map
// completely, and the reduced matrix product mirrors composition.
class MonomialSystem {
 public:
  explicit MonomialSystem(ExponentMatrix matrix);

  const ExponentMatrix& matrix() const noexcept { return matrix_; }
  const FieldSize& field() const noexcept { return matrix_.field(); }
  std::uint32_t dim() const noexcept { return matrix_.dim(); }

  // Evaluate with the convention 0^0 = 1: a component is zero exactly when
  // some coordinate with positive exponent is zero.
  State evaluate(const State& x) const;

  // m-th iterate, computed through the reduced matrix power.
  MonomialSystem iterate(std::uint64_t m) const;

  friend bool operator==(const MonomialSystem& a, const MonomialSystem& b) {
    return a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const MonomialSystem& a, const MonomialSystem& b) {
    return !(a == b);
  }

 private:
  ExponentMatrix matrix_;
};

// Composition outer . inner, realized as the reduced product of the two
// exponent matrices; agrees with pointwise composition on every state.
MonomialSystem compose(const MonomialSystem& outer,
                       const MonomialSystem& inner);

inline MonomialSystem::MonomialSystem(ExponentMatrix matrix)
    : matrix_(std::move(matrix)) {}

}  // namespace monodyn
