#include "monodyn/phase_space.hpp"

#include <algorithm>

namespace monodyn {

PhaseSpace build_phase_space(
    const FieldSize& field, std::uint32_t n,
    const std::function<std::uint64_t(std::uint64_t)>& step,
    std::uint64_t cap) {
  std::uint64_t total;
  try {
    total = state_count(field, n);
  } catch (const std::overflow_error&) {
    throw StateCapError("state space " + std::to_string(field.value()) + "^" +
                            std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap) + " states",
                        cap);
  }
  if (total > cap) throw StateCapError(field.value(), n, cap);
  // Successor indices are stored in 32 bits; even a raised cap stops here.
  if (total > (std::uint64_t{1} << 31))
    throw StateCapError(field.value(), n, std::uint64_t{1} << 31);

  PhaseSpace ps{field, n, total, {}, {}, 0};
  ps.successor.resize(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const std::uint64_t next = step(idx);
    if (next >= total)
      throw std::logic_error("successor map left the state space");
    ps.successor[idx] = static_cast<std::uint32_t>(next);
  }

  // Three colors: 0 unvisited, 1 on the current path, 2 settled.
  std::vector<std::uint8_t> color(total, 0);
  std::vector<std::uint32_t> path;
  std::uint64_t cycle_states = 0;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    std::uint64_t v = start;
    while (color[v] == 0) {
      color[v] = 1;
      path.push_back(static_cast<std::uint32_t>(v));
      v = ps.successor[v];
    }
    if (color[v] == 1) {
      // Found a new cycle; walk it once to measure and pick a representative.
      std::uint64_t length = 0;
      std::uint64_t rep = v;
      std::uint64_t u = v;
      do {
        rep = std::min<std::uint64_t>(rep, u);
        ++length;
        u = ps.successor[u];
      } while (u != v);
      ps.cycles.push_back(CycleInfo{length, rep});
      cycle_states += length;
    }
    for (auto s : path) color[s] = 2;
  }
  std::sort(ps.cycles.begin(), ps.cycles.end(),
            [](const CycleInfo& a, const CycleInfo& b) {
              return a.representative < b.representative;
            });
  ps.transient_count = total - cycle_states;
  return ps;
}

PhaseSpace build_phase_space(const MonomialSystem& system, std::uint64_t cap) {
  const FieldSize field = system.field();
  const std::uint32_t n = system.dim();
  return build_phase_space(
      field, n,
      [&](std::uint64_t idx) {
        return encode_state(system.evaluate(decode_state(field, n, idx)));
      },
      cap);
}

bool is_fixed_point_system_bruteforce(const MonomialSystem& system,
                                      std::uint64_t cap) {
  return build_phase_space(system, cap).all_fixed_points();
}

}  // namespace monodyn
