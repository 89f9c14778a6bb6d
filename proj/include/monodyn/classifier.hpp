#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monodyn/graph.hpp"
#include "monodyn/matrix.hpp"
#include "monodyn/phase_space.hpp"

namespace monodyn {

// Outcome of a structural screen.  Screens are one-sided: a Pass from a
// sufficient screen certifies a fixed point system, a Fail from a necessary
// screen refutes one, and every other combination is informative only.
enum class ScreenVerdict { Pass, Fail, Inconclusive };

std::string to_string(ScreenVerdict v);

struct ScreenResult {
  std::string name;
  ScreenVerdict verdict;
  std::string reason;
  std::optional<std::uint32_t> witness_component;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_edge;
};

// Exact characteristic polynomial data for the advisory spectral check.
// sufficient == true certifies a fixed point system; false proves nothing.
struct CharpolyReport {
  std::vector<BigInt> coefficients;  // monic, descending degree
  std::uint32_t mult0;               // algebraic multiplicity of 0
  std::uint32_t mult1;               // algebraic multiplicity of 1
  std::uint32_t geo0;                // geometric multiplicity of 0
  std::uint32_t geo1;                // geometric multiplicity of 1
  bool form_ok;                      // charpoly == (x-1)^mult1 * x^mult0
  bool sufficient;
};

struct BruteStats {
  std::uint64_t states;
  std::uint64_t fixed_points;
  std::uint64_t cycle_count;
  std::uint64_t longest_cycle;
  std::uint64_t transient_count;
};

struct ClassificationReport {
  FieldSize field;
  std::uint32_t n;
  bool fixed_point_system;
  std::string decided_by;
  std::uint32_t t_used;       // squarings performed by the power decider
  std::uint64_t op_count;     // reduced-semiring operations it spent
  std::uint64_t op_budget;    // proven ceiling for those operations
  std::vector<ScreenResult> screens;
  std::optional<CharpolyReport> charpoly;
  std::optional<BruteStats> brute;
};

enum class Method { Power, BooleanGraph, Screens, BruteForce, All };

Method method_from_string(const std::string& name);
std::string to_string(Method m);

// Raised when independent classification methods disagree; this indicates a
// bug, not a property of the input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Ceiling on the reduced-semiring operations of decide_power:
// (2n^3 - n^2) * (n * ceil(log2 q) + 2) + n^2.
std::uint64_t power_op_budget(std::uint32_t n, const FieldSize& field);

// Decide whether the system is a fixed point system by repeated squaring:
// with t the smallest integer such that 2^t >= q^n - 1, the system is a
// fixed point system exactly when the reduced powers F^(2^t) and
// F^(2^t + 1) coincide.  Uses t+1 matrix products in total.
ClassificationReport decide_power(const ExponentMatrix& m);

// Sufficient: all strongly connected components trivial.  On Pass the map is
// a fixed point system whose unique fixed point is the all-ones state, and
// the reduced matrix is nilpotent within n steps.
ScreenResult screen_trivial_sccs(const ExponentMatrix& m,
                                 const SccPartition& partition);

// Necessary for systems with a nontrivial component: every nontrivial
// component must have loop number 1.  For q = 2 this is also sufficient, so
// the screen is decisive in both directions there.
ScreenResult screen_loop_numbers(const FieldSize& field,
                                 const SccPartition& partition);

// Sufficient: every vertex recurrently connected to some vertex carries
// exactly q-1 self-loops, and no nontrivial component has more than one
// vertex.  (Without the single-vertex restriction the condition does not
// certify a fixed point system; see the regression tests for a 2x2
// counterexample with q = 3.)
ScreenResult screen_selfloop_multiplicity(const ExponentMatrix& m,
                                          const SccPartition& partition);

// Sufficient: every nontrivial component has loop number 1 and every edge
// inside a component has multiplicity exactly q-1.  Subsumes lifting a
// Boolean fixed point system by replacing its edges with q-1 parallel ones.
ScreenResult screen_scc_edge_multiplicity(const ExponentMatrix& m,
                                          const SccPartition& partition);

// Advisory spectral check.  Certifies a fixed point system when the
// characteristic polynomial is (x-1)^s * x^t and both eigenvalues have full
// geometric multiplicity (the matrix is then idempotent over the integers).
// The shape of the polynomial alone certifies nothing.
CharpolyReport charpoly_check(const ExponentMatrix& m);

ClassificationReport classify(const ExponentMatrix& m, Method method,
                              std::uint64_t state_cap = kDefaultStateCap);

}  // namespace monodyn
