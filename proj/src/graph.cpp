#include "monodyn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace monodyn {

namespace {

std::vector<std::vector<std::uint32_t>> out_edges(
    const ExponentMatrix& adjacency) {
  const std::uint32_t n = adjacency.dim();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (adjacency.at(i, j) > 0) adj[i].push_back(j);
  return adj;
}

// Iterative Tarjan; components come out in reverse topological order and are
// renumbered afterwards by smallest contained vertex.
std::vector<std::vector<std::uint32_t>> tarjan_components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> components;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  std::vector<Frame> frames;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        const std::uint32_t w = adj[f.v][f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        const std::uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<std::uint32_t> comp;
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != v);
          components.push_back(std::move(comp));
        }
      }
    }
  }
  return components;
}

std::uint32_t component_loop_number(
    const std::vector<std::vector<std::uint32_t>>& adj,
    const std::vector<std::uint32_t>& component_of,
    const std::vector<std::uint32_t>& comp, std::uint32_t comp_id) {
  // Breadth-first levels from the smallest vertex, restricted to the
  // component; every intra-component edge then has level(u)+1 >= level(v).
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> level(adj.size(), kUnset);
  std::queue<std::uint32_t> queue;
  level[comp[0]] = 0;
  queue.push(comp[0]);
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t v : adj[u]) {
      if (component_of[v] != comp_id || level[v] != kUnset) continue;
      level[v] = level[u] + 1;
      queue.push(v);
    }
  }
  std::uint64_t g = 0;
  for (std::uint32_t u : comp)
    for (std::uint32_t v : adj[u]) {
      if (component_of[v] != comp_id) continue;
      const std::uint64_t defect = level[u] + 1 - level[v];
      g = std::gcd(g, defect);
    }
  return static_cast<std::uint32_t>(g);
}

}  // namespace

SccPartition analyze_graph(const ExponentMatrix& adjacency) {
  const std::uint32_t n = adjacency.dim();
  const auto adj = out_edges(adjacency);
  auto components = tarjan_components(adj);
  for (auto& comp : components) std::sort(comp.begin(), comp.end());
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  SccPartition p;
  p.components = std::move(components);
  p.component_of.assign(n, 0);
  for (std::uint32_t c = 0; c < p.count(); ++c)
    for (std::uint32_t v : p.components[c]) p.component_of[v] = c;

  p.trivial.resize(p.count());
  p.loop_numbers.assign(p.count(), 0);
  for (std::uint32_t c = 0; c < p.count(); ++c) {
    const auto& comp = p.components[c];
    p.trivial[c] = comp.size() == 1 && adjacency.at(comp[0], comp[0]) == 0;
    if (!p.trivial[c])
      p.loop_numbers[c] =
          component_loop_number(adj, p.component_of, comp, c);
  }
  return p;
}

CountMatrix walk_counts(const ExponentMatrix& adjacency, std::uint64_t m) {
  return CountMatrix::from(adjacency).power(m);
}

BigInt walk_count(const ExponentMatrix& adjacency, std::uint64_t m,
                  std::uint32_t i, std::uint32_t j) {
  return walk_counts(adjacency, m).at(i, j);
}

bool recurrently_connected(const ExponentMatrix& adjacency,
                           const SccPartition& partition, std::uint32_t i,
                           std::uint32_t j) {
  const std::uint32_t n = adjacency.dim();
  if (i >= n || j >= n) throw std::out_of_range("vertex index out of range");
  const auto adj = out_edges(adjacency);

  // Forward reachability from i (walks of length >= 0).
  std::vector<bool> from_i(n, false);
  from_i[i] = true;
  std::queue<std::uint32_t> queue;
  queue.push(i);
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t v : adj[u])
      if (!from_i[v]) {
        from_i[v] = true;
        queue.push(v);
      }
  }
  // Backward reachability to j.
  std::vector<bool> to_j(n, false);
  to_j[j] = true;
  queue.push(j);
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t w = 0; w < n; ++w)
      if (!to_j[w] && adjacency.at(w, u) > 0) {
        to_j[w] = true;
        queue.push(w);
      }
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (from_i[v] && to_j[v] && !partition.trivial[partition.component_of[v]])
      return true;
  return false;
}

bool recurrently_connected(const ExponentMatrix& adjacency, std::uint32_t i,
                           std::uint32_t j) {
  return recurrently_connected(adjacency, analyze_graph(adjacency), i, j);
}

std::vector<bool> recurrent_vertices(const ExponentMatrix& adjacency,
                                     const SccPartition& partition) {
  const std::uint32_t n = adjacency.dim();
  const auto adj = out_edges(adjacency);
  // Reverse reachability from the union of nontrivial components.
  std::vector<bool> recurrent(n, false);
  std::queue<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v)
    if (!partition.trivial[partition.component_of[v]]) {
      recurrent[v] = true;
      queue.push(v);
    }
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t w = 0; w < n; ++w)
      if (!recurrent[w] && adjacency.at(w, u) > 0) {
        recurrent[w] = true;
        queue.push(w);
      }
  }
  return recurrent;
}

}  // namespace monodyn
