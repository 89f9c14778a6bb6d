#include "monodyn/charpoly.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace monodyn {

std::vector<BigInt> characteristic_polynomial(const CountMatrix& a) {
  const std::uint32_t n = a.dim();
  std::vector<BigInt> coeff = {1, -a.at(0, 0)};
  for (std::uint32_t r = 2; r <= n; ++r) {
    // Leading principal r x r block, split into the (r-1)-block, the last
    // row R, the last column S and the corner entry.
    const std::uint32_t k = r - 1;
    // First column of the (r+1) x r Toeplitz factor:
    // 1, -corner, -(R S), -(R A S), ..., -(R A^{r-2} S).
    std::vector<BigInt> t(r + 1);
    t[0] = 1;
    t[1] = -a.at(k, k);
    std::vector<BigInt> v(k);
    for (std::uint32_t i = 0; i < k; ++i) v[i] = a.at(i, k);
    for (std::uint32_t step = 0; step + 2 <= r; ++step) {
      BigInt dot = 0;
      for (std::uint32_t i = 0; i < k; ++i) dot += a.at(k, i) * v[i];
      t[step + 2] = -dot;
      if (step + 3 <= r) {
        std::vector<BigInt> w(k);
        for (std::uint32_t i = 0; i < k; ++i) {
          BigInt acc = 0;
          for (std::uint32_t j = 0; j < k; ++j) acc += a.at(i, j) * v[j];
          w[i] = std::move(acc);
        }
        v = std::move(w);
      }
    }
    std::vector<BigInt> next(r + 1);
    for (std::uint32_t row = 0; row <= r; ++row) {
      BigInt acc = 0;
      for (std::uint32_t col = 0; col < r && col <= row; ++col)
        if (row - col <= r) acc += t[row - col] * coeff[col];
      next[row] = std::move(acc);
    }
    coeff = std::move(next);
  }
  assert(coeff.size() == static_cast<std::size_t>(n) + 1 && coeff[0] == 1);
  return coeff;
}

std::uint32_t integer_matrix_rank(std::vector<BigInt> cells, std::uint32_t n) {
  if (cells.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("cell count does not match dimension");
  auto at = [&](std::uint32_t i, std::uint32_t j) -> BigInt& {
    return cells[static_cast<std::size_t>(i) * n + j];
  };
  std::uint32_t rank = 0;
  BigInt prev = 1;
  for (std::uint32_t col = 0; col < n && rank < n; ++col) {
    std::uint32_t pivot = rank;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::uint32_t j = 0; j < n; ++j)
        std::swap(at(pivot, j), at(rank, j));
    for (std::uint32_t i = rank + 1; i < n; ++i) {
      for (std::uint32_t j = col + 1; j < n; ++j) {
        BigInt num = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        // Bareiss: the previous pivot divides exactly.
        assert(prev == 1 || num % prev == 0);
        at(i, j) = num / prev;
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace monodyn
