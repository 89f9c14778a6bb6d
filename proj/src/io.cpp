#include "monodyn/io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace monodyn {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

std::uint64_t parse_uint(const std::string& token, std::size_t line,
                         const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "invalid " + what + ": '" + token + "'");
  return value;
}

}  // namespace

ExponentMatrix ParsedSystem::plain() const {
  if (has_zero_rows)
    throw std::logic_error(
        "system has zero components; reduce it before requesting the plain "
        "matrix");
  ExponentMatrix out(field(), dim());
  for (std::uint32_t i = 0; i < dim(); ++i)
    for (std::uint32_t j = 0; j < dim(); ++j) out.set(i, j, *matrix.at(i, j));
  return out;
}

ParsedSystem parse_system(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input: missing header");

  const Line& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "q" ||
      header.tokens[2] != "n")
    throw ParseError(header.number, "expected header 'q <int> n <int>'");
  const std::uint64_t q_raw = parse_uint(header.tokens[1], header.number, "q");
  std::optional<FieldSize> field;
  try {
    field.emplace(q_raw);
  } catch (const std::invalid_argument& e) {
    throw ParseError(header.number, e.what());
  }
  const std::uint64_t n_raw = parse_uint(header.tokens[3], header.number, "n");
  if (n_raw == 0 || n_raw > 4096)
    throw ParseError(header.number,
                     "n must lie in [1, 4096]: got " + std::to_string(n_raw));
  const auto n = static_cast<std::uint32_t>(n_raw);

  ExtExponentMatrix matrix(*field, n);
  bool has_zero_rows = false;
  std::uint32_t row = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "q")
      throw ParseError(line.number, "duplicate header");
    if (row == n)
      throw ParseError(line.number, "unexpected content after " +
                                        std::to_string(n) + " rows");
    if (line.tokens.size() == 1 && line.tokens[0] == "zero") {
      for (std::uint32_t j = 0; j < n; ++j)
        matrix.set(row, j, std::nullopt);
      has_zero_rows = true;
      ++row;
      continue;
    }
    if (line.tokens.size() != n)
      throw ParseError(line.number,
                       "expected " + std::to_string(n) + " exponents or "
                       "'zero', got " + std::to_string(line.tokens.size()) +
                       " tokens");
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint64_t v =
          parse_uint(line.tokens[j], line.number, "exponent");
      if (v >= field->value())
        throw ParseError(line.number,
                         "exponent " + std::to_string(v) +
                             " out of range [0, " +
                             std::to_string(field->value() - 1) + "]");
      matrix.set(row, j, static_cast<std::uint32_t>(v));
    }
    ++row;
  }
  if (row != n)
    throw ParseError(0, "unexpected end of input: expected " +
                            std::to_string(n) + " rows, found " +
                            std::to_string(row));
  return ParsedSystem{std::move(matrix), has_zero_rows};
}

std::string serialize_system(const ExtExponentMatrix& matrix) {
  std::string out = "q " + std::to_string(matrix.field().value()) + " n " +
                    std::to_string(matrix.dim()) + "\n";
  for (std::uint32_t i = 0; i < matrix.dim(); ++i) {
    if (matrix.row_is_bottom(i)) {
      out += "zero\n";
      continue;
    }
    for (std::uint32_t j = 0; j < matrix.dim(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(*matrix.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_system(const ParsedSystem& system) {
  return serialize_system(system.matrix);
}

std::string serialize_system(const ExponentMatrix& matrix) {
  return serialize_system(ExtExponentMatrix::lift(matrix));
}

OrderedJson screen_to_json(const ScreenResult& screen) {
  OrderedJson j;
  j["name"] = screen.name;
  j["verdict"] = to_string(screen.verdict);
  j["reason"] = screen.reason;
  if (screen.witness_component)
    j["witness"] = OrderedJson{{"component", *screen.witness_component}};
  else if (screen.witness_edge)
    j["witness"] = OrderedJson{
        {"edge", {screen.witness_edge->first + 1,
                  screen.witness_edge->second + 1}}};
  else
    j["witness"] = nullptr;
  return j;
}

OrderedJson charpoly_to_json(const CharpolyReport& report) {
  OrderedJson j;
  auto coeffs = OrderedJson::array();
  for (const auto& c : report.coefficients) coeffs.push_back(c.str());
  j["coefficients"] = std::move(coeffs);
  j["mult0"] = report.mult0;
  j["mult1"] = report.mult1;
  j["geo0"] = report.geo0;
  j["geo1"] = report.geo1;
  j["form_ok"] = report.form_ok;
  j["sufficient"] = report.sufficient;
  return j;
}

OrderedJson reduction_to_json(const ReductionResult& result,
                              const FieldSize& field,
                              std::uint32_t original_n) {
  OrderedJson j;
  j["empty"] = result.empty();
  auto kept = OrderedJson::array();
  for (auto k : result.kept) kept.push_back(k + 1);  // 1-based like x1..xn
  j["kept"] = std::move(kept);
  j["rounds"] = result.rounds;
  j["op_count"] = result.ops.total();
  j["op_budget"] = reduction_op_budget(original_n);
  if (result.reduced) {
    OrderedJson m;
    m["q"] = field.value();
    m["n"] = result.reduced->dim();
    m["rows"] = result.reduced->rows();
    j["reduced"] = std::move(m);
  } else {
    j["reduced"] = nullptr;
  }
  return j;
}

OrderedJson classification_to_json(
    const ClassificationReport& report, const FieldSize& original_field,
    std::uint32_t original_n, const std::string& method,
    const std::optional<ReductionResult>& reduction) {
  OrderedJson j;
  j["schema"] = 1;
  j["command"] = "classify";
  j["q"] = original_field.value();
  j["n"] = original_n;
  j["method"] = method;
  j["fixed_point_system"] = report.fixed_point_system;
  j["decided_by"] = report.decided_by;
  j["t_used"] = report.t_used;
  j["op_count"] = report.op_count;
  j["op_budget"] = report.op_budget;
  auto screens = OrderedJson::array();
  for (const auto& s : report.screens) screens.push_back(screen_to_json(s));
  j["screens"] = std::move(screens);
  j["charpoly"] =
      report.charpoly ? charpoly_to_json(*report.charpoly) : OrderedJson();
  if (report.brute) {
    OrderedJson b;
    b["states"] = report.brute->states;
    b["fixed_points"] = report.brute->fixed_points;
    b["cycle_count"] = report.brute->cycle_count;
    b["longest_cycle"] = report.brute->longest_cycle;
    b["transient_count"] = report.brute->transient_count;
    j["brute"] = std::move(b);
  } else {
    j["brute"] = nullptr;
  }
  j["reduction"] = reduction
                       ? reduction_to_json(*reduction, original_field, original_n)
                       : OrderedJson();
  return j;
}

OrderedJson phase_to_json(const PhaseSpace& ps) {
  OrderedJson j;
  j["schema"] = 1;
  j["command"] = "phase";
  j["q"] = ps.field.value();
  j["n"] = ps.n;
  j["states"] = ps.num_states;
  // Histogram of cycle lengths >= 2, ascending.
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& c : ps.cycles)
    if (c.length >= 2) ++histogram[c.length];
  auto cycles = OrderedJson::array();
  for (const auto& [length, count] : histogram)
    cycles.push_back(OrderedJson{{"length", length}, {"count", count}});
  j["cycles"] = std::move(cycles);
  auto fixed = OrderedJson::array();
  for (const auto& c : ps.cycles)
    if (c.length == 1)
      fixed.push_back(
          state_digits(decode_state(ps.field, ps.n, c.representative)));
  j["fixed_points"] = std::move(fixed);
  j["fixed_count"] = ps.fixed_point_count();
  j["transient_count"] = ps.transient_count;
  return j;
}

std::string dependency_graph_dot(const ExponentMatrix& matrix,
                                 const SccPartition& partition) {
  std::ostringstream out;
  out << "digraph dependency {\n";
  out << "  rankdir=LR;\n";
  for (std::uint32_t c = 0; c < partition.count(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"\xe2\x84\x92=" << partition.loop_numbers[c]
        << "\";\n";
    for (std::uint32_t v : partition.components[c])
      out << "    x" << v + 1 << ";\n";
    out << "  }\n";
  }
  for (std::uint32_t i = 0; i < matrix.dim(); ++i)
    for (std::uint32_t j = 0; j < matrix.dim(); ++j) {
      const std::uint32_t mult = matrix.at(i, j);
      if (mult == 0) continue;
      out << "  x" << i + 1 << " -> x" << j + 1;
      if (mult > 1) out << " [label=\"\xc3\x97" << mult << "\"]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string phase_space_dot(const PhaseSpace& ps) {
  std::ostringstream out;
  out << "digraph phase {\n";
  for (std::uint64_t idx = 0; idx < ps.num_states; ++idx) {
    out << "  \"" << state_digits(decode_state(ps.field, ps.n, idx))
        << "\" -> \""
        << state_digits(decode_state(ps.field, ps.n, ps.successor[idx]))
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monodyn
