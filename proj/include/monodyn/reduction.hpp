#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monodyn/matrix.hpp"
#include "monodyn/system.hpp"

namespace monodyn {

// Monomial system in which some components may be the constant zero
// function.  Zero components are encoded as all-bottom rows; every other row
// is bottom-free.
class ExtendedSystem {
 public:
  explicit ExtendedSystem(ExtExponentMatrix matrix);

  const ExtExponentMatrix& matrix() const noexcept { return matrix_; }
  const FieldSize& field() const noexcept { return matrix_.field(); }
  std::uint32_t dim() const noexcept { return matrix_.dim(); }

  bool component_is_zero(std::uint32_t i) const {
    return matrix_.row_is_bottom(i);
  }
  bool has_zero_components() const;

  // Evaluate with zero components taken literally as the constant 0.
  State evaluate(const State& x) const;

 private:
  ExtExponentMatrix matrix_;
};

// Operation tally of one reduction run, grouped the way the worst-case
// budget counts them.
struct ReductionOps {
  std::uint64_t initializations = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;
  std::uint64_t assignments = 0;
  std::uint64_t semiring = 0;  // extended-semiring ops inside squarings
  std::uint64_t total() const noexcept {
    return initializations + comparisons + additions + assignments + semiring;
  }
};

struct ReductionResult {
  std::vector<std::uint32_t> kept;  // surviving component indices, ascending
  std::optional<ExponentMatrix> reduced;  // empty when every component dies
  std::uint32_t rounds = 0;               // squarings performed
  ReductionOps ops;

  bool empty() const noexcept { return !reduced.has_value(); }

  // Instrumentation is not part of the reduction's identity.
  friend bool operator==(const ReductionResult& a, const ReductionResult& b) {
    return a.kept == b.kept && a.reduced == b.reduced && a.rounds == b.rounds;
  }
  friend bool operator!=(const ReductionResult& a, const ReductionResult& b) {
    return !(a == b);
  }
};

// Strip the components that eventually become constantly zero.  Repeated
// squaring over the extended semiring exposes them: a component is doomed
// exactly when its row turns all-bottom in some power of the matrix.  The
// returned matrix is the restriction of the ORIGINAL exponent matrix to the
// surviving components, which by stability never reference a doomed one; it
// generates the same long-term dynamics as the input.  An empty result means
// the input is a fixed point system whose unique fixed point is the origin.
//
// With skip_dead_rows the squarings copy all-bottom rows through instead of
// recomputing them; the result is identical.
ReductionResult reduce_zero_components(const ExtendedSystem& system,
                                       bool skip_dead_rows = false);

// Worst-case ceiling for ReductionOps::total(): 2n^4 - 3n^3 + 6n^2 + 4n + 1.
std::uint64_t reduction_op_budget(std::uint64_t n);

}  // namespace monodyn
