#include "monodyn/classifier.hpp"

#include <algorithm>

#include "monodyn/charpoly.hpp"
#include "monodyn/system.hpp"

namespace monodyn {

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::Pass:
      return "pass";
    case ScreenVerdict::Fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

Method method_from_string(const std::string& name) {
  if (name == "power") return Method::Power;
  if (name == "boolean-graph") return Method::BooleanGraph;
  if (name == "screens") return Method::Screens;
  if (name == "brute") return Method::BruteForce;
  if (name == "all") return Method::All;
  throw std::invalid_argument("unknown method: " + name);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Power:
      return "power";
    case Method::BooleanGraph:
      return "boolean-graph";
    case Method::Screens:
      return "screens";
    case Method::BruteForce:
      return "brute";
    default:
      return "all";
  }
}

namespace {

std::uint32_t ceil_log2(std::uint64_t x) {
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

std::string vertex_name(std::uint32_t v) {
  return "x" + std::to_string(v + 1);
}

std::string component_vertices(const SccPartition& p, std::uint32_t c) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.components[c].size(); ++i) {
    if (i > 0) out += ",";
    out += vertex_name(p.components[c][i]);
  }
  return out + "}";
}

}  // namespace

std::uint64_t power_op_budget(std::uint32_t n, const FieldSize& field) {
  const std::uint64_t nn = n;
  const std::uint64_t per_product = 2 * nn * nn * nn - nn * nn;
  const std::uint64_t products = nn * ceil_log2(field.value()) + 2;
  return per_product * products + nn * nn;
}

ClassificationReport decide_power(const ExponentMatrix& m) {
  const std::uint32_t n = m.dim();
  const FieldSize& field = m.field();

  // Smallest t with 2^t >= q^n - 1, in exact arithmetic.
  BigInt target = 1;
  for (std::uint32_t i = 0; i < n; ++i) target *= field.value();
  target -= 1;
  std::uint32_t t = 0;
  BigInt pow2 = 1;
  while (pow2 < target) {
    pow2 <<= 1;
    ++t;
  }

  OpCounter ops;
  ExponentMatrix a = m;
  for (std::uint32_t i = 0; i < t; ++i) a = multiply(a, a, &ops);
  const ExponentMatrix b = multiply(m, a, &ops);

  ClassificationReport report{field,
                              n,
                              a == b,
                              "power-decider",
                              t,
                              ops.total(),
                              power_op_budget(n, field),
                              {},
                              std::nullopt,
                              std::nullopt};
  return report;
}

ScreenResult screen_trivial_sccs(const ExponentMatrix& m,
                                 const SccPartition& partition) {
  ScreenResult r{"trivial-sccs", ScreenVerdict::Pass, "", std::nullopt,
                 std::nullopt};
  for (std::uint32_t c = 0; c < partition.count(); ++c)
    if (!partition.trivial[c]) {
      r.verdict = ScreenVerdict::Fail;
      r.reason = "nontrivial strongly connected component " +
                 component_vertices(partition, c);
      r.witness_component = c;
      return r;
    }
  r.reason =
      "all components trivial: fixed point system with the all-ones state as "
      "unique fixed point; the exponent matrix is nilpotent within " +
      std::to_string(m.dim()) + " steps";
  return r;
}

ScreenResult screen_loop_numbers(const FieldSize& field,
                                 const SccPartition& partition) {
  ScreenResult r{"loop-numbers", ScreenVerdict::Inconclusive, "", std::nullopt,
                 std::nullopt};
  for (std::uint32_t c = 0; c < partition.count(); ++c) {
    if (partition.trivial[c]) continue;
    if (partition.loop_numbers[c] != 1) {
      r.verdict = ScreenVerdict::Fail;
      r.reason = "component " + component_vertices(partition, c) +
                 " has loop number " +
                 std::to_string(partition.loop_numbers[c]) +
                 "; loop number 1 is necessary";
      r.witness_component = c;
      return r;
    }
  }
  if (field.value() == 2) {
    r.verdict = ScreenVerdict::Pass;
    r.reason =
        "every nontrivial component has loop number 1, which is equivalent "
        "to a fixed point system over the two-element field";
  } else {
    r.reason =
        "every nontrivial component has loop number 1 (necessary but not "
        "sufficient for q > 2)";
  }
  return r;
}

ScreenResult screen_selfloop_multiplicity(const ExponentMatrix& m,
                                          const SccPartition& partition) {
  ScreenResult r{"selfloop-multiplicity", ScreenVerdict::Pass, "",
                 std::nullopt, std::nullopt};
  const std::uint32_t q1 = m.field().unit_order();
  const auto recurrent = recurrent_vertices(m, partition);
  for (std::uint32_t v = 0; v < m.dim(); ++v) {
    if (!recurrent[v] || m.at(v, v) == q1) continue;
    r.verdict = ScreenVerdict::Inconclusive;
    r.reason = "vertex " + vertex_name(v) +
               " is recurrently connected but carries " +
               std::to_string(m.at(v, v)) + " self-loops instead of " +
               std::to_string(q1);
    r.witness_edge = {v, v};
    return r;
  }
  for (std::uint32_t c = 0; c < partition.count(); ++c) {
    if (partition.trivial[c] || partition.components[c].size() == 1) continue;
    r.verdict = ScreenVerdict::Inconclusive;
    r.reason = "component " + component_vertices(partition, c) +
               " couples several vertices; full self-loops certify a fixed "
               "point system only for single-vertex components";
    r.witness_component = c;
    return r;
  }
  r.reason = "every recurrently connected vertex is a single-vertex component "
             "with exactly " +
             std::to_string(q1) + " self-loops";
  return r;
}

ScreenResult screen_scc_edge_multiplicity(const ExponentMatrix& m,
                                          const SccPartition& partition) {
  ScreenResult r{"scc-edge-multiplicity", ScreenVerdict::Pass, "",
                 std::nullopt, std::nullopt};
  const std::uint32_t q1 = m.field().unit_order();
  for (std::uint32_t c = 0; c < partition.count(); ++c) {
    if (partition.trivial[c]) continue;
    if (partition.loop_numbers[c] != 1) {
      r.verdict = ScreenVerdict::Inconclusive;
      r.reason = "component " + component_vertices(partition, c) +
                 " has loop number " +
                 std::to_string(partition.loop_numbers[c]);
      r.witness_component = c;
      return r;
    }
    for (std::uint32_t u : partition.components[c])
      for (std::uint32_t v : partition.components[c]) {
        const std::uint32_t mult = m.at(u, v);
        if (mult == 0 || mult == q1) continue;
        r.verdict = ScreenVerdict::Inconclusive;
        r.reason = "edge " + vertex_name(u) + "->" + vertex_name(v) +
                   " inside component " + component_vertices(partition, c) +
                   " has multiplicity " + std::to_string(mult) +
                   ", expected 0 or " + std::to_string(q1);
        r.witness_edge = {u, v};
        return r;
      }
  }
  r.reason = "every nontrivial component has loop number 1 and every "
             "intra-component edge has multiplicity " +
             std::to_string(q1);
  return r;
}

CharpolyReport charpoly_check(const ExponentMatrix& m) {
  const std::uint32_t n = m.dim();
  CharpolyReport rep{};
  rep.coefficients = characteristic_polynomial(CountMatrix::from(m));

  // Multiplicity of the root 0: trailing zero coefficients.
  std::uint32_t mult0 = 0;
  while (mult0 < n && rep.coefficients[n - mult0] == 0) ++mult0;
  rep.mult0 = mult0;

  // Multiplicity of the root 1 via repeated synthetic division by (x - 1).
  std::vector<BigInt> poly(rep.coefficients.begin(),
                           rep.coefficients.end() - mult0);
  std::uint32_t mult1 = 0;
  for (;;) {
    BigInt value = 0;
    for (const auto& c : poly) value += c;
    if (value != 0 || poly.size() == 1) break;
    std::vector<BigInt> quotient(poly.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
      carry += poly[i];
      quotient[i] = carry;
    }
    poly = std::move(quotient);
    ++mult1;
  }
  rep.mult1 = mult1;
  rep.form_ok = poly.size() == 1 && poly[0] == 1;

  std::vector<BigInt> f_cells, f_minus_i;
  f_cells.reserve(static_cast<std::size_t>(n) * n);
  f_minus_i.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      f_cells.emplace_back(m.at(i, j));
      f_minus_i.emplace_back(BigInt(m.at(i, j)) - (i == j ? 1 : 0));
    }
  rep.geo0 = n - integer_matrix_rank(std::move(f_cells), n);
  rep.geo1 = n - integer_matrix_rank(std::move(f_minus_i), n);

  rep.sufficient =
      rep.form_ok && rep.geo0 == rep.mult0 && rep.geo1 == rep.mult1;
  return rep;
}

namespace {

void run_screens(ClassificationReport& report, const ExponentMatrix& m,
                 const SccPartition& partition) {
  report.screens.push_back(screen_trivial_sccs(m, partition));
  if (partition.has_nontrivial()) {
    report.screens.push_back(screen_loop_numbers(m.field(), partition));
    report.screens.push_back(screen_selfloop_multiplicity(m, partition));
    report.screens.push_back(screen_scc_edge_multiplicity(m, partition));
    report.charpoly = charpoly_check(m);
  }
}

// Verdict implied by the screens alone, when decisive.
std::optional<std::pair<bool, std::string>> screens_decision(
    const ClassificationReport& report) {
  for (const auto& s : report.screens) {
    if (s.name == "trivial-sccs" && s.verdict == ScreenVerdict::Pass)
      return {{true, s.name}};
    if (s.name == "loop-numbers" && s.verdict == ScreenVerdict::Fail)
      return {{false, s.name}};
    if (s.name == "loop-numbers" && s.verdict == ScreenVerdict::Pass)
      return {{true, s.name}};
    if ((s.name == "selfloop-multiplicity" ||
         s.name == "scc-edge-multiplicity") &&
        s.verdict == ScreenVerdict::Pass)
      return {{true, s.name}};
  }
  if (report.charpoly && report.charpoly->sufficient)
    return {{true, "charpoly"}};
  return std::nullopt;
}

BruteStats brute_stats(const PhaseSpace& ps) {
  std::uint64_t longest = 0;
  for (const auto& c : ps.cycles)
    longest = std::max(longest, c.length);
  return BruteStats{ps.num_states, ps.fixed_point_count(), ps.cycles.size(),
                    longest, ps.transient_count};
}

// Every screen outcome must be compatible with the established verdict.
void check_screen_consistency(const ClassificationReport& report) {
  for (const auto& s : report.screens) {
    const bool sufficient_pass =
        (s.name == "trivial-sccs" || s.name == "selfloop-multiplicity" ||
         s.name == "scc-edge-multiplicity" ||
         (s.name == "loop-numbers" && report.field.value() == 2)) &&
        s.verdict == ScreenVerdict::Pass;
    if (sufficient_pass && !report.fixed_point_system)
      throw InconsistencyError("screen " + s.name +
                               " certified a system the decider rejected");
    if (s.name == "loop-numbers" && s.verdict == ScreenVerdict::Fail &&
        report.fixed_point_system)
      throw InconsistencyError(
          "necessary screen loop-numbers failed on a fixed point system");
  }
  if (report.charpoly && report.charpoly->sufficient &&
      !report.fixed_point_system)
    throw InconsistencyError(
        "charpoly check certified a system the decider rejected");
}

}  // namespace

ClassificationReport classify(const ExponentMatrix& m, Method method,
                              std::uint64_t state_cap) {
  const FieldSize& field = m.field();
  const std::uint32_t n = m.dim();

  switch (method) {
    case Method::Power:
      return decide_power(m);

    case Method::BooleanGraph: {
      if (field.value() != 2)
        throw std::invalid_argument(
            "the boolean-graph method requires q = 2, got q = " +
            std::to_string(field.value()));
      const SccPartition partition = analyze_graph(m);
      bool verdict = true;
      for (std::uint32_t c = 0; c < partition.count(); ++c)
        if (!partition.trivial[c] && partition.loop_numbers[c] != 1)
          verdict = false;
      ClassificationReport report{
          field, n,  verdict,      "boolean-graph", 0,
          0,     0,  {},           std::nullopt,    std::nullopt};
      if (partition.has_nontrivial())
        report.screens.push_back(screen_loop_numbers(field, partition));
      else
        report.screens.push_back(screen_trivial_sccs(m, partition));
      return report;
    }

    case Method::BruteForce: {
      const PhaseSpace ps = build_phase_space(MonomialSystem(m), state_cap);
      ClassificationReport report{
          field, n, ps.all_fixed_points(), "brute-force", 0,
          0,     0, {},                    std::nullopt,  brute_stats(ps)};
      return report;
    }

    case Method::Screens: {
      const SccPartition partition = analyze_graph(m);
      ClassificationReport report{field, n,  false,        "", 0, 0, 0,
                                  {},    std::nullopt, std::nullopt};
      run_screens(report, m, partition);
      if (const auto decision = screens_decision(report)) {
        report.fixed_point_system = decision->first;
        report.decided_by = "screen:" + decision->second;
        return report;
      }
      ClassificationReport powered = decide_power(m);
      powered.screens = std::move(report.screens);
      powered.charpoly = std::move(report.charpoly);
      check_screen_consistency(powered);
      return powered;
    }

    case Method::All: {
      ClassificationReport report = decide_power(m);
      const SccPartition partition = analyze_graph(m);
      run_screens(report, m, partition);
      check_screen_consistency(report);

      if (field.value() == 2) {
        bool graph_verdict = true;
        for (std::uint32_t c = 0; c < partition.count(); ++c)
          if (!partition.trivial[c] && partition.loop_numbers[c] != 1)
            graph_verdict = false;
        if (graph_verdict != report.fixed_point_system)
          throw InconsistencyError(
              "boolean-graph and power-decider verdicts disagree");
      }

      bool within_cap = true;
      try {
        within_cap = state_count(field, n) <= state_cap;
      } catch (const std::overflow_error&) {
        within_cap = false;
      }
      if (within_cap) {
        const PhaseSpace ps = build_phase_space(MonomialSystem(m), state_cap);
        report.brute = brute_stats(ps);
        if (ps.all_fixed_points() != report.fixed_point_system)
          throw InconsistencyError(
              "brute-force and power-decider verdicts disagree");
      }
      return report;
    }
  }
  throw std::logic_error("unreachable classification method");
}

}  // namespace monodyn
