#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monodyn/classifier.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/phase_space.hpp"
#include "monodyn/reduction.hpp"

namespace monodyn {

using OrderedJson = nlohmann::ordered_json;

// Error with the 1-based line number of the offending input line; 0 marks
// end-of-input errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parsed system file.  The text format is
//
//   # comment, runs to end of line
//   q <int> n <int>
//   <n rows: either n exponents in [0, q-1], or the single token "zero">
//
// Blank lines are ignored.  A "zero" row declares the component to be the
// constant zero function.
struct ParsedSystem {
  ExtExponentMatrix matrix;
  bool has_zero_rows;

  const FieldSize& field() const noexcept { return matrix.field(); }
  std::uint32_t dim() const noexcept { return matrix.dim(); }

  // The plain exponent matrix; throws when a zero row is present.
  ExponentMatrix plain() const;
  ExtendedSystem extended() const { return ExtendedSystem(matrix); }
};

ParsedSystem parse_system(std::string_view text);

std::string serialize_system(const ParsedSystem& system);
std::string serialize_system(const ExponentMatrix& matrix);
std::string serialize_system(const ExtExponentMatrix& matrix);

// Round-trip helper: parse, then serialize canonically.

// JSON renderings.  All objects carry "schema": 1 and a fixed key order so
// they can be compared bytewise.
OrderedJson screen_to_json(const ScreenResult& screen);
OrderedJson charpoly_to_json(const CharpolyReport& report);
OrderedJson reduction_to_json(const ReductionResult& result,
                              const FieldSize& field,
                              std::uint32_t original_n);
OrderedJson classification_to_json(
    const ClassificationReport& report, const FieldSize& original_field,
    std::uint32_t original_n, const std::string& method,
    const std::optional<ReductionResult>& reduction);
OrderedJson phase_to_json(const PhaseSpace& ps);

// DOT renderings.
std::string dependency_graph_dot(const ExponentMatrix& matrix,
                                 const SccPartition& partition);
std::string phase_space_dot(const PhaseSpace& ps);

}  // namespace monodyn
