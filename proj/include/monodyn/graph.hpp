#pragma once

#include <cstdint>
#include <vector>

#include "monodyn/matrix.hpp"

namespace monodyn {

// The dependency graph of a system has one vertex per component and exactly
// F_ij parallel edges from i to j, so the exponent matrix doubles as the
// multigraph's adjacency matrix.  All structure below derives from it.

// Partition of the vertices into strongly connected components.  Components
// are numbered by their smallest vertex, in increasing order.  A component is
// trivial when it is a single vertex without a self-loop; only nontrivial
// components carry a positive loop number.
struct SccPartition {
  std::vector<std::uint32_t> component_of;
  std::vector<std::vector<std::uint32_t>> components;  // each sorted
  std::vector<bool> trivial;
  std::vector<std::uint32_t> loop_numbers;  // 0 for trivial components

  std::uint32_t count() const noexcept {
    return static_cast<std::uint32_t>(components.size());
  }
  bool has_nontrivial() const noexcept {
    for (bool t : trivial)
      if (!t) return true;
    return false;
  }
};

// Strongly connected components plus loop numbers.  The loop number of a
// nontrivial component is the gcd of the closed walk lengths through any of
// its vertices, computed as the gcd of level defects level(u)+1-level(v)
// over intra-component edges of a breadth-first search.
SccPartition analyze_graph(const ExponentMatrix& adjacency);

// Number of distinct edge sequences of length m from i to j, with parallel
// edges counted separately: entry (i,j) of the m-th power of the adjacency
// matrix over the plain integers.
CountMatrix walk_counts(const ExponentMatrix& adjacency, std::uint64_t m);
BigInt walk_count(const ExponentMatrix& adjacency, std::uint64_t m,
                  std::uint32_t i, std::uint32_t j);

// True when arbitrarily long walks from i to j exist, equivalently when some
// walk from i to j passes through a nontrivial component.
bool recurrently_connected(const ExponentMatrix& adjacency,
                           const SccPartition& partition, std::uint32_t i,
                           std::uint32_t j);
bool recurrently_connected(const ExponentMatrix& adjacency, std::uint32_t i,
                           std::uint32_t j);

// Vertices that are recurrently connected to at least one vertex: exactly
// those from which some nontrivial component is reachable.
std::vector<bool> recurrent_vertices(const ExponentMatrix& adjacency,
                                     const SccPartition& partition);

}  // namespace monodyn
