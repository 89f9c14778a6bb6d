#include "monodyn/reduction.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace monodyn {

ExtendedSystem::ExtendedSystem(ExtExponentMatrix matrix)
    : matrix_(std::move(matrix)) {
  for (std::uint32_t i = 0; i < matrix_.dim(); ++i)
    if (matrix_.row_has_bottom(i) && !matrix_.row_is_bottom(i))
      throw std::invalid_argument(
          "row " + std::to_string(i) +
          " mixes bottom and plain entries; a zero component must have an "
          "all-bottom row");
}

bool ExtendedSystem::has_zero_components() const {
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (component_is_zero(i)) return true;
  return false;
}

State ExtendedSystem::evaluate(const State& x) const {
  if (x.field != field())
    throw std::invalid_argument("state and system field sizes differ");
  if (x.dim() != dim())
    throw std::invalid_argument("state dimension does not match system");
  const std::uint32_t n = dim();
  const std::uint64_t m = field().unit_order();
  State y{field(), std::vector<std::uint32_t>(n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (component_is_zero(i)) continue;  // literal constant 0
    bool zero = false;
    std::uint64_t log_acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t e = *matrix_.at(i, j);
      if (e == 0) continue;
      if (x.digits[j] == 0) {
        zero = true;
        break;
      }
      log_acc =
          (log_acc + static_cast<std::uint64_t>(e) * (x.digits[j] - 1)) % m;
    }
    y.digits[i] = zero ? 0 : 1 + static_cast<std::uint32_t>(log_acc);
  }
  return y;
}

ReductionResult reduce_zero_components(const ExtendedSystem& system,
                                       bool skip_dead_rows) {
  const std::uint32_t n = system.dim();
  const ExtExponentMatrix& original = system.matrix();
  ExtExponentMatrix work = original;

  ReductionResult result;
  ReductionOps& ops = result.ops;
  std::vector<char> marked(n, 0);
  ops.initializations += n + 2;  // the two counters and the mark vector

  std::uint64_t previous_marks = 0;
  for (;;) {
    // Count the currently dead rows.  The first column is a faithful proxy:
    // a row of any power is either bottom-free or entirely bottom.
    std::uint64_t current_marks = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      ops.comparisons += 1;
      if (!work.at(k, 0)) {
        assert(work.row_is_bottom(k));
        ops.additions += 1;
        ++current_marks;
        ops.assignments += 1;
        marked[k] = 1;
      }
    }
    ops.comparisons += 2;
    if (current_marks == previous_marks || current_marks == n) break;

    work = ext_multiply(work, work, &ops.semiring, skip_dead_rows);
    ops.assignments += 1;
    ++result.rounds;
    previous_marks = current_marks;
#ifndef NDEBUG
    // Dead rows stay dead under squaring.
    for (std::uint32_t k = 0; k < n; ++k)
      if (marked[k]) assert(work.row_is_bottom(k));
#endif
  }

  for (std::uint32_t k = 0; k < n; ++k) {
    ops.comparisons += 1;
    if (!marked[k]) result.kept.push_back(k);
  }
  if (result.kept.empty()) return result;

#ifndef NDEBUG
  // At stability a surviving row never references a deleted component, so
  // restricting the original matrix loses nothing.
  for (std::uint32_t i : result.kept)
    for (std::uint32_t j = 0; j < n; ++j)
      if (marked[j]) assert(original.at(i, j) == 0u);
#endif

  const auto kept_n = static_cast<std::uint32_t>(result.kept.size());
  ExponentMatrix reduced(system.field(), kept_n);
  for (std::uint32_t i = 0; i < kept_n; ++i)
    for (std::uint32_t j = 0; j < kept_n; ++j) {
      const auto cell = original.at(result.kept[i], result.kept[j]);
      assert(cell.has_value());
      reduced.set(i, j, *cell);
      ops.assignments += 1;
    }
  result.reduced = std::move(reduced);
  return result;
}

std::uint64_t reduction_op_budget(std::uint64_t n) {
  return 2 * n * n * n * n - 3 * n * n * n + 6 * n * n + 4 * n + 1;
}

}  // namespace monodyn
