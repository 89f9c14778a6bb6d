#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodyn/classifier.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/io.hpp"
#include "monodyn/phase_space.hpp"
#include "monodyn/reduction.hpp"
#include "monodyn/system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitCap = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t state_cap_from_env() {
  const char* raw = std::getenv("MONODYN_STATE_CAP");
  if (raw == nullptr || *raw == '\0') return monodyn::kDefaultStateCap;
  std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid MONODYN_STATE_CAP: " + text);
  }
  if (used != text.size() || value == 0)
    throw std::invalid_argument("invalid MONODYN_STATE_CAP: " + text);
  return static_cast<std::uint64_t>(value);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

std::string variable_name(std::uint32_t index) {
  return "x" + std::to_string(index + 1);
}

void print_screen_lines(std::ostream& os,
                        const std::vector<monodyn::ScreenResult>& screens) {
  for (const auto& s : screens) {
    os << "screen " << s.name << ": " << monodyn::to_string(s.verdict) << " ("
       << s.reason << ")\n";
  }
}

void print_classification_text(
    std::ostream& os, const monodyn::ClassificationReport& report,
    const std::optional<monodyn::ReductionResult>& reduction) {
  os << "fixed-point-system: " << (report.fixed_point_system ? "true" : "false")
     << "\n";
  os << "decided-by: " << report.decided_by << "\n";
  if (report.t_used > 0 || report.decided_by == "power-decider") {
    os << "t-used: " << report.t_used << "\n";
  }
  os << "op-count: " << report.op_count << " (budget " << report.op_budget
     << ")\n";
  print_screen_lines(os, report.screens);
  if (report.charpoly) {
    const auto& cp = *report.charpoly;
    os << "charpoly: [";
    for (std::size_t i = 0; i < cp.coefficients.size(); ++i) {
      if (i > 0) os << " ";
      os << cp.coefficients[i].str();
    }
    os << "] mult0=" << cp.mult0 << " mult1=" << cp.mult1
       << " geo0=" << cp.geo0 << " geo1=" << cp.geo1 << " "
       << (cp.sufficient ? "sufficient" : "inconclusive") << "\n";
  }
  if (report.brute) {
    const auto& b = *report.brute;
    os << "brute: states=" << b.states << " fixed-points=" << b.fixed_points
       << " cycles=" << b.cycle_count << " longest-cycle=" << b.longest_cycle
       << " transient=" << b.transient_count << "\n";
  }
  if (reduction) {
    if (reduction->empty()) {
      os << "reduction: all components zero (rounds " << reduction->rounds
         << ")\n";
    } else {
      os << "reduction: kept";
      for (auto k : reduction->kept) os << " " << variable_name(k);
      os << " (rounds " << reduction->rounds << ")\n";
    }
  }
}

int cmd_classify(const std::string& path, const std::string& method_name,
                 bool as_json) {
  const auto parsed = monodyn::parse_system(read_input(path));
  const auto method = monodyn::method_from_string(method_name);
  const std::uint64_t cap = state_cap_from_env();

  std::optional<monodyn::ReductionResult> reduction;
  std::optional<monodyn::ClassificationReport> report;
  if (parsed.has_zero_rows) {
    reduction = monodyn::reduce_zero_components(parsed.extended());
    if (reduction->empty()) {
      report = monodyn::ClassificationReport{
          parsed.field(), parsed.dim(), true, "reduction-empty", 0, 0, 0,
          {},             std::nullopt, std::nullopt};
    } else {
      report = monodyn::classify(*reduction->reduced, method, cap);
    }
  } else {
    report = monodyn::classify(parsed.plain(), method, cap);
  }

  if (as_json) {
    std::cout << monodyn::classification_to_json(*report, parsed.field(),
                                                 parsed.dim(),
                                                 monodyn::to_string(method),
                                                 reduction)
                     .dump(2)
              << "\n";
  } else {
    print_classification_text(std::cout, *report, reduction);
  }
  return kExitOk;
}

int cmd_phase(const std::string& path, bool as_json,
              const std::string& dot_path) {
  const auto parsed = monodyn::parse_system(read_input(path));
  const std::uint64_t cap = state_cap_from_env();

  std::optional<monodyn::PhaseSpace> ps;
  if (parsed.has_zero_rows) {
    const monodyn::ExtendedSystem ext = parsed.extended();
    const auto field = parsed.field();
    const auto n = parsed.dim();
    ps = monodyn::build_phase_space(
        field, n,
        [&](std::uint64_t index) {
          return monodyn::encode_state(
              ext.evaluate(monodyn::decode_state(field, n, index)));
        },
        cap);
  } else {
    ps = monodyn::build_phase_space(monodyn::MonomialSystem(parsed.plain()),
                                    cap);
  }

  if (!dot_path.empty()) write_output(dot_path, monodyn::phase_space_dot(*ps));
  if (as_json) {
    std::cout << monodyn::phase_to_json(*ps).dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "states: " << ps->num_states << "\n";
  std::cout << "cycles:";
  // histogram over cycle lengths >= 2, ascending
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& c : ps->cycles)
    if (c.length >= 2) ++histogram[c.length];
  for (const auto& [length, count] : histogram)
    std::cout << " " << count << "\xc3\x97" << length;
  std::cout << " fixed:" << ps->fixed_point_count()
            << " transient:" << ps->transient_count << "\n";

  constexpr std::uint64_t kMaxListed = 100;
  std::cout << "fixed points:";
  std::uint64_t listed = 0;
  for (const auto& c : ps->cycles) {
    if (c.length != 1) continue;
    if (listed == kMaxListed) break;
    std::cout << " "
              << monodyn::state_digits(monodyn::decode_state(
                     parsed.field(), parsed.dim(), c.representative));
    ++listed;
  }
  if (ps->fixed_point_count() > kMaxListed)
    std::cout << " ... (+" << (ps->fixed_point_count() - kMaxListed)
              << " more)";
  std::cout << "\n";
  return kExitOk;
}

int cmd_graph(const std::string& path, const std::string& dot_path) {
  const auto parsed = monodyn::parse_system(read_input(path));
  if (parsed.has_zero_rows)
    throw std::invalid_argument(
        "zero components have no dependency graph; run reduce first");
  const auto matrix = parsed.plain();
  const auto partition = monodyn::analyze_graph(matrix);
  write_output(dot_path, monodyn::dependency_graph_dot(matrix, partition));
  return kExitOk;
}

int cmd_reduce(const std::string& path, bool as_json) {
  const auto parsed = monodyn::parse_system(read_input(path));
  const auto result = monodyn::reduce_zero_components(parsed.extended());

  if (as_json) {
    monodyn::OrderedJson j;
    j["schema"] = 1;
    j["command"] = "reduce";
    j["q"] = parsed.field().value();
    j["n"] = parsed.dim();
    j["reduction"] =
        monodyn::reduction_to_json(result, parsed.field(), parsed.dim());
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  if (result.empty()) {
    std::cout << "EMPTY: fixed point system, unique fixed point = origin\n";
    return kExitOk;
  }
  std::cout << "# kept:";
  for (auto k : result.kept) std::cout << " " << variable_name(k);
  std::cout << "\n# rounds: " << result.rounds << "\n";
  std::cout << monodyn::serialize_system(*result.reduced);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "monodyn: analyze monomial dynamical systems over finite fields"};
  app.require_subcommand(1);
  app.footer(
      "Input files use the text format\n"
      "    q <prime power> n <dimension>\n"
      "followed by n rows, each either n exponents in [0, q-1] or the single\n"
      "token 'zero' for a constant-zero component.  '#' starts a comment.\n"
      "\n"
      "States print as base-q digit strings, least significant coordinate\n"
      "first: digit 0 is the field zero and digit d >= 1 is g^(d-1) for a\n"
      "fixed generator g of the multiplicative group.\n"
      "\n"
      "MONODYN_STATE_CAP overrides the default 2^20 bound on the number of\n"
      "states enumerated by 'phase' and '--method brute'.\n"
      "\n"
      "Exit codes: 0 ok, 2 bad input, 3 internal inconsistency, 4 state cap\n"
      "exceeded.");

  std::string classify_file;
  std::string classify_method = "power";
  bool classify_json = false;
  auto* classify = app.add_subcommand(
      "classify", "Decide whether the system is a fixed point system");
  classify->add_option("file", classify_file, "system file ('-' for stdin)")
      ->required();
  classify->add_option("--method", classify_method,
                       "power, boolean-graph, screens, brute, or all");
  classify->add_flag("--json", classify_json, "emit a JSON report");

  std::string phase_file;
  std::string phase_dot;
  bool phase_json = false;
  auto* phase = app.add_subcommand(
      "phase", "Enumerate the phase space: cycles, fixed points, transients");
  phase->add_option("file", phase_file, "system file ('-' for stdin)")
      ->required();
  phase->add_option("--dot", phase_dot, "write the functional graph as DOT");
  phase->add_flag("--json", phase_json, "emit a JSON report");

  std::string graph_file;
  std::string graph_dot;
  auto* graph = app.add_subcommand(
      "graph", "Export the dependency graph with SCC and loop number labels");
  graph->add_option("file", graph_file, "system file ('-' for stdin)")
      ->required();
  graph->add_option("--dot", graph_dot, "output path (default stdout)");

  std::string reduce_file;
  bool reduce_json = false;
  auto* reduce = app.add_subcommand(
      "reduce", "Strip components that are eventually constant zero");
  reduce->add_option("file", reduce_file, "system file ('-' for stdin)")
      ->required();
  reduce->add_flag("--json", reduce_json, "emit a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed())
      return cmd_classify(classify_file, classify_method, classify_json);
    if (phase->parsed()) return cmd_phase(phase_file, phase_json, phase_dot);
    if (graph->parsed()) return cmd_graph(graph_file, graph_dot);
    if (reduce->parsed()) return cmd_reduce(reduce_file, reduce_json);
  } catch (const monodyn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const monodyn::StateCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const monodyn::InconsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
