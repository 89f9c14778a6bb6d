#include "monodyn/system.hpp"

#include <limits>
#include <stdexcept>

namespace monodyn {

FieldElement FieldElement::from_digit(const FieldSize& field,
                                      std::uint32_t digit) {
  if (digit >= field.value())
    throw std::invalid_argument("state digit " + std::to_string(digit) +
                                " out of range [0, " +
                                std::to_string(field.value() - 1) + "]");
  return FieldElement(field, digit);
}

std::uint32_t FieldElement::log() const {
  if (rep_ == 0) throw std::logic_error("the field zero has no discrete log");
  return rep_ - 1;
}

std::uint64_t state_count(const FieldSize& field, std::uint32_t n) {
  const std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (total > limit / field.value())
      throw std::overflow_error("state space " +
                                std::to_string(field.value()) + "^" +
                                std::to_string(n) + " exceeds 2^63");
    total *= field.value();
  }
  return total;
}

std::uint64_t encode_state(const State& s) {
  std::uint64_t index = 0;
  for (std::uint32_t i = s.dim(); i-- > 0;)
    index = index * s.field.value() + s.digits[i];
  return index;
}

State decode_state(const FieldSize& field, std::uint32_t n,
                   std::uint64_t index) {
  State s{field, std::vector<std::uint32_t>(n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) {
    s.digits[i] = static_cast<std::uint32_t>(index % field.value());
    index /= field.value();
  }
  return s;
}

State all_ones_state(const FieldSize& field, std::uint32_t n) {
  // Digit 1 is g^0 = 1.
  return State{field, std::vector<std::uint32_t>(n, 1)};
}

State origin_state(const FieldSize& field, std::uint32_t n) {
  return State{field, std::vector<std::uint32_t>(n, 0)};
}

std::string state_digits(const State& s) {
  std::string out;
  const bool wide = s.field.value() > 10;
  for (std::uint32_t i = 0; i < s.dim(); ++i) {
    if (wide && i > 0) out += '.';
    if (wide)
      out += std::to_string(s.digits[i]);
    else
      out += static_cast<char>('0' + s.digits[i]);
  }
  return out;
}

State MonomialSystem::evaluate(const State& x) const {
  if (x.field != field())
    throw std::invalid_argument("state and system field sizes differ");
  if (x.dim() != dim())
    throw std::invalid_argument("state dimension does not match system");
  const std::uint32_t n = dim();
  const std::uint64_t m = field().unit_order();
  State y{field(), std::vector<std::uint32_t>(n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) {
    bool zero = false;
    std::uint64_t log_acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t e = matrix_.at(i, j);
      if (e == 0) continue;  // x_j^0 = 1 even when x_j = 0
      if (x.digits[j] == 0) {
        zero = true;
        break;
      }
      log_acc = (log_acc + static_cast<std::uint64_t>(e) *
                               (x.digits[j] - 1)) % m;
    }
    y.digits[i] = zero ? 0 : 1 + static_cast<std::uint32_t>(log_acc);
  }
  return y;
}

MonomialSystem MonomialSystem::iterate(std::uint64_t m) const {
  return MonomialSystem(matrix_.power(m));
}

MonomialSystem compose(const MonomialSystem& outer,
                       const MonomialSystem& inner) {
  return MonomialSystem(multiply(outer.matrix(), inner.matrix()));
}

}  // namespace monodyn
