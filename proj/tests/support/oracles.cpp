#include "support/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

std::uint32_t reduce_by_division(std::uint64_t c, std::uint64_t q) {
  // tau^c as a coefficient vector, divided by the monic tau^q - tau.
  std::vector<std::uint64_t> coeff(c + 1, 0);
  coeff[c] = 1;
  for (std::uint64_t d = c; d >= q; --d) {
    if (coeff[d] == 0) continue;
    coeff[d - q + 1] += coeff[d];
    coeff[d] = 0;
  }
  for (std::uint64_t d = std::min<std::uint64_t>(c, q - 1);; --d) {
    if (coeff[d] != 0) return static_cast<std::uint32_t>(d);
    if (d == 0) break;
  }
  throw std::logic_error("zero remainder");
}

std::uint64_t count_walks_recursive(const monodyn::ExponentMatrix& adj,
                                    std::uint32_t i, std::uint32_t j,
                                    std::uint32_t length) {
  if (length == 0) return i == j ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint32_t k = 0; k < adj.dim(); ++k) {
    const std::uint64_t parallel = adj.at(i, k);
    if (parallel == 0) continue;
    total += parallel * count_walks_recursive(adj, k, j, length - 1);
  }
  return total;
}

std::uint64_t loop_number_min_difference(
    const monodyn::ExponentMatrix& adj,
    const std::vector<std::uint32_t>& component, std::uint32_t window) {
  const std::uint32_t n = adj.dim();
  std::vector<char> base(n * n), reach(n * n), next(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      base[i * n + j] = adj.at(i, j) > 0 ? 1 : 0;
  reach = base;

  // closed_lengths[v] collects all m in 1..window with a closed walk of
  // length m through v.
  std::vector<std::vector<std::uint32_t>> closed_lengths(n);
  for (std::uint32_t m = 1; m <= window; ++m) {
    for (std::uint32_t v = 0; v < n; ++v)
      if (reach[v * n + v]) closed_lengths[v].push_back(m);
    if (m == window) break;
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k)
        if (reach[i * n + k])
          for (std::uint32_t j = 0; j < n; ++j)
            if (base[k * n + j]) next[i * n + j] = 1;
    reach = next;
  }

  std::uint64_t best = 0;
  for (std::uint32_t v : component) {
    const auto& lengths = closed_lengths[v];
    for (std::size_t a = 0; a + 1 < lengths.size(); ++a) {
      const std::uint64_t diff = lengths[a + 1] - lengths[a];
      if (best == 0 || diff < best) best = diff;
    }
  }
  return best;
}

std::vector<std::uint32_t> evaluate_mod_p(
    const monodyn::ExponentMatrix& m,
    const std::vector<std::uint32_t>& digits) {
  const std::uint64_t p = m.field().value();
  std::uint64_t g = 0;
  switch (p) {
    case 2: g = 1; break;
    case 3: g = 2; break;
    case 5: g = 2; break;
    case 7: g = 3; break;
    default: throw std::invalid_argument("no generator table for this p");
  }

  const std::uint32_t n = m.dim();
  assert(digits.size() == n);

  // digit -> field element in {0, ..., p-1}
  std::vector<std::uint64_t> x(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (digits[j] == 0) {
      x[j] = 0;
    } else {
      std::uint64_t value = 1;
      for (std::uint32_t e = 1; e < digits[j]; ++e) value = (value * g) % p;
      x[j] = value;
    }
  }

  // element -> digit
  std::vector<std::uint32_t> digit_of(p, 0);
  {
    std::uint64_t value = 1;
    for (std::uint32_t d = 1; d < p; ++d) {
      digit_of[value] = d;
      value = (value * g) % p;
    }
  }

  std::vector<std::uint32_t> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t value = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t e = 0; e < m.at(i, j); ++e) value = (value * x[j]) % p;
    }
    out[i] = digit_of[value];
  }
  return out;
}

monodyn::ExponentMatrix random_matrix(std::mt19937_64& rng,
                                      const monodyn::FieldSize& field,
                                      std::uint32_t n) {
  std::uniform_int_distribution<std::uint32_t> entry(
      0, static_cast<std::uint32_t>(field.value() - 1));
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n, 0));
  for (auto& row : rows)
    for (auto& cell : row) cell = entry(rng);
  return monodyn::ExponentMatrix::from_rows(field, rows);
}

monodyn::ExponentMatrix random_strict_upper(std::mt19937_64& rng,
                                            const monodyn::FieldSize& field,
                                            std::uint32_t n) {
  std::uniform_int_distribution<std::uint32_t> entry(
      0, static_cast<std::uint32_t>(field.value() - 1));
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) rows[i][j] = entry(rng);
  return monodyn::ExponentMatrix::from_rows(field, rows);
}

monodyn::ExponentMatrix random_triangular_diag(std::mt19937_64& rng,
                                               const monodyn::FieldSize& field,
                                               std::uint32_t n) {
  std::uniform_int_distribution<std::uint32_t> entry(
      0, static_cast<std::uint32_t>(field.value() - 1));
  std::vector<std::vector<std::uint32_t>> rows(
      n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    rows[i][i] = static_cast<std::uint32_t>(field.value() - 1);
    for (std::uint32_t j = 0; j < i; ++j) rows[i][j] = entry(rng);
  }
  return monodyn::ExponentMatrix::from_rows(field, rows);
}

monodyn::ExtExponentMatrix random_extended(std::mt19937_64& rng,
                                           const monodyn::FieldSize& field,
                                           std::uint32_t n,
                                           std::uint32_t zero_percent) {
  std::uniform_int_distribution<std::uint32_t> entry(
      0, static_cast<std::uint32_t>(field.value() - 1));
  std::uniform_int_distribution<std::uint32_t> percent(0, 99);
  std::vector<std::vector<std::optional<std::uint32_t>>> rows(
      n, std::vector<std::optional<std::uint32_t>>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    if (percent(rng) < zero_percent) {
      for (std::uint32_t j = 0; j < n; ++j) rows[i][j] = std::nullopt;
    } else {
      for (std::uint32_t j = 0; j < n; ++j) rows[i][j] = entry(rng);
    }
  }
  return monodyn::ExtExponentMatrix::from_rows(field, rows);
}

}  // namespace oracle
