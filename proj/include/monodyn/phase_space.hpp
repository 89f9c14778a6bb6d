#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodyn/system.hpp"

namespace monodyn {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 20;

// Raised when a requested phase space would exceed the state cap.
class StateCapError : public std::runtime_error {
 public:
  StateCapError(std::uint64_t q, std::uint32_t n, std::uint64_t cap)
      : std::runtime_error("state space " + std::to_string(q) + "^" +
                           std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap) +
                           " states"),
        cap_(cap) {}
  explicit StateCapError(const std::string& msg, std::uint64_t cap)
      : std::runtime_error(msg), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

struct CycleInfo {
  std::uint64_t length;
  std::uint64_t representative;  // smallest state index on the cycle
};

// The full functional graph of a map on (F_q)^n: every state's successor,
// the inventory of cycles, and the count of transient states.
struct PhaseSpace {
  FieldSize field;
  std::uint32_t n;
  std::uint64_t num_states;
  std::vector<std::uint32_t> successor;
  std::vector<CycleInfo> cycles;  // ordered by representative index
  std::uint64_t transient_count;

  bool all_fixed_points() const noexcept {
    for (const auto& c : cycles)
      if (c.length != 1) return false;
    return true;
  }
  std::uint64_t cycle_state_total() const noexcept {
    std::uint64_t total = 0;
    for (const auto& c : cycles) total += c.length;
    return total;
  }
  std::uint64_t fixed_point_count() const noexcept {
    std::uint64_t total = 0;
    for (const auto& c : cycles)
      if (c.length == 1) ++total;
    return total;
  }
};

// Enumerate all q^n states of an arbitrary successor map.  Throws
// StateCapError when q^n exceeds the cap.
PhaseSpace build_phase_space(
    const FieldSize& field, std::uint32_t n,
    const std::function<std::uint64_t(std::uint64_t)>& step,
    std::uint64_t cap = kDefaultStateCap);

PhaseSpace build_phase_space(const MonomialSystem& system,
                             std::uint64_t cap = kDefaultStateCap);

// A map is a fixed point system when every periodic state is fixed, i.e.
// every cycle of its phase space has length one.
bool is_fixed_point_system_bruteforce(const MonomialSystem& system,
                                      std::uint64_t cap = kDefaultStateCap);

}  // namespace monodyn
