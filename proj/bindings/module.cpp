#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monodyn/classifier.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/io.hpp"
#include "monodyn/phase_space.hpp"
#include "monodyn/reduction.hpp"
#include "monodyn/system.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

monodyn::ExponentMatrix rows_to_matrix(const Rows& rows, std::uint64_t q) {
  return monodyn::ExponentMatrix::from_rows(monodyn::FieldSize(q), rows);
}

Rows matrix_to_rows(const monodyn::ExponentMatrix& m) {
  Rows rows(m.dim(), std::vector<std::uint32_t>(m.dim()));
  for (std::uint32_t i = 0; i < m.dim(); ++i)
    for (std::uint32_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

py::object big_to_py(const monodyn::BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object json_to_py(const monodyn::OrderedJson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object classify_text(const std::string& text, const std::string& method,
                         std::uint64_t state_cap) {
  const auto parsed = monodyn::parse_system(text);
  const auto m = monodyn::method_from_string(method);
  std::optional<monodyn::ReductionResult> reduction;
  std::optional<monodyn::ClassificationReport> report;
  if (parsed.has_zero_rows) {
    reduction = monodyn::reduce_zero_components(parsed.extended());
    if (reduction->empty()) {
      report = monodyn::ClassificationReport{
          parsed.field(), parsed.dim(), true, "reduction-empty", 0, 0, 0,
          {},             std::nullopt, std::nullopt};
    } else {
      report = monodyn::classify(*reduction->reduced, m, state_cap);
    }
  } else {
    report = monodyn::classify(parsed.plain(), m, state_cap);
  }
  return json_to_py(monodyn::classification_to_json(
      *report, parsed.field(), parsed.dim(), monodyn::to_string(m),
      reduction));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "monomial dynamical systems over finite fields";

  py::register_exception<monodyn::ParseError>(m, "ParseError",
                                              PyExc_ValueError);
  py::register_exception<monodyn::StateCapError>(m, "StateCapError",
                                                 PyExc_RuntimeError);
  py::register_exception<monodyn::InconsistencyError>(m, "InconsistencyError",
                                                      PyExc_RuntimeError);

  m.def(
      "reduce_exponent",
      [](std::uint64_t c, std::uint64_t q) {
        return monodyn::reduce_exponent(c, monodyn::FieldSize(q));
      },
      py::arg("c"), py::arg("q"),
      "Reduce an exponent to its canonical value in {0, ..., q-1}.");

  m.def(
      "multiply",
      [](const Rows& a, const Rows& b, std::uint64_t q) {
        return matrix_to_rows(
            monodyn::multiply(rows_to_matrix(a, q), rows_to_matrix(b, q)));
      },
      py::arg("a"), py::arg("b"), py::arg("q"),
      "Reduced product of two exponent matrices.");

  m.def(
      "power",
      [](const Rows& a, std::uint64_t exponent, std::uint64_t q) {
        return matrix_to_rows(rows_to_matrix(a, q).power(exponent));
      },
      py::arg("a"), py::arg("m"), py::arg("q"),
      "Reduced m-th power of an exponent matrix.");

  m.def(
      "compose",
      [](const Rows& outer, const Rows& inner, std::uint64_t q) {
        return matrix_to_rows(
            monodyn::compose(
                monodyn::MonomialSystem(rows_to_matrix(outer, q)),
                monodyn::MonomialSystem(rows_to_matrix(inner, q)))
                .matrix());
      },
      py::arg("outer"), py::arg("inner"), py::arg("q"),
      "Exponent matrix of the composition outer(inner(x)).");

  m.def(
      "evaluate",
      [](const Rows& rows, std::uint64_t q,
         const std::vector<std::uint32_t>& state) {
        const auto matrix = rows_to_matrix(rows, q);
        const monodyn::MonomialSystem system(matrix);
        monodyn::State s{matrix.field(), state};
        return system.evaluate(s).digits;
      },
      py::arg("rows"), py::arg("q"), py::arg("state"),
      "Apply the system to a state given as base-q digits (0 is the field "
      "zero, d >= 1 is the (d-1)-th power of a fixed generator).");

  m.def(
      "walk_counts",
      [](const Rows& rows, std::uint64_t q, std::uint64_t length) {
        const auto counts =
            monodyn::walk_counts(rows_to_matrix(rows, q), length);
        py::list out;
        for (std::uint32_t i = 0; i < counts.dim(); ++i) {
          py::list row;
          for (std::uint32_t j = 0; j < counts.dim(); ++j)
            row.append(big_to_py(counts.at(i, j)));
          out.append(row);
        }
        return out;
      },
      py::arg("rows"), py::arg("q"), py::arg("length"),
      "Matrix of walk counts of the given length in the dependency graph.");

  m.def(
      "sccs",
      [](const Rows& rows, std::uint64_t q) {
        const auto partition = monodyn::analyze_graph(rows_to_matrix(rows, q));
        py::dict out;
        out["components"] = partition.components;
        out["trivial"] = partition.trivial;
        out["loop_numbers"] = partition.loop_numbers;
        return out;
      },
      py::arg("rows"), py::arg("q"),
      "Strongly connected components (0-based vertex lists), triviality "
      "flags, and loop numbers of the dependency graph.");

  m.def(
      "decide",
      [](const Rows& rows, std::uint64_t q) {
        return monodyn::decide_power(rows_to_matrix(rows, q))
            .fixed_point_system;
      },
      py::arg("rows"), py::arg("q"),
      "True when the system is a fixed point system (repeated squaring "
      "decider).");

  m.def("classify", &classify_text, py::arg("text"),
        py::arg("method") = "power",
        py::arg("state_cap") = monodyn::kDefaultStateCap,
        "Classify a system file; returns the same report the CLI prints as "
        "JSON.  Systems with zero components are reduced first.");

  m.def(
      "phase",
      [](const std::string& text, std::uint64_t state_cap) {
        const auto parsed = monodyn::parse_system(text);
        monodyn::PhaseSpace ps = [&] {
          if (parsed.has_zero_rows) {
            const monodyn::ExtendedSystem ext = parsed.extended();
            const auto field = parsed.field();
            const auto n = parsed.dim();
            return monodyn::build_phase_space(
                field, n,
                [&](std::uint64_t index) {
                  return monodyn::encode_state(
                      ext.evaluate(monodyn::decode_state(field, n, index)));
                },
                state_cap);
          }
          return monodyn::build_phase_space(
              monodyn::MonomialSystem(parsed.plain()), state_cap);
        }();
        return json_to_py(monodyn::phase_to_json(ps));
      },
      py::arg("text"), py::arg("state_cap") = monodyn::kDefaultStateCap,
      "Phase space summary of a system file: cycle histogram, fixed points, "
      "transient count.");

  m.def(
      "reduce_system",
      [](const std::string& text) {
        const auto parsed = monodyn::parse_system(text);
        const auto result =
            monodyn::reduce_zero_components(parsed.extended());
        return json_to_py(monodyn::reduction_to_json(result, parsed.field(),
                                                     parsed.dim()));
      },
      py::arg("text"),
      "Strip components that are eventually constant zero; returns kept "
      "indices (1-based) and the reduced system.");

  m.def(
      "canonicalize",
      [](const std::string& text) {
        return monodyn::serialize_system(monodyn::parse_system(text));
      },
      py::arg("text"), "Parse a system file and re-serialize it canonically.");

  m.def(
      "graph_dot",
      [](const std::string& text) {
        const auto parsed = monodyn::parse_system(text);
        const auto matrix = parsed.plain();
        return monodyn::dependency_graph_dot(matrix,
                                             monodyn::analyze_graph(matrix));
      },
      py::arg("text"),
      "DOT rendering of the dependency graph with SCC clusters and loop "
      "number labels.");
}
