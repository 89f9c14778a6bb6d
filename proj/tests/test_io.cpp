#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "monodyn/classifier.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/io.hpp"
#include "monodyn/phase_space.hpp"
#include "monodyn/reduction.hpp"

using monodyn::FieldSize;
using monodyn::OrderedJson;
using monodyn::ParseError;
using monodyn::parse_system;
using monodyn::serialize_system;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error for: ", text);
  return static_cast<std::size_t>(-1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string kDataDir = MONODYN_TEST_DATA_DIR;

}  // namespace

TEST_CASE("parsing the plain format") {
  const auto swap = parse_system("q 2 n 2\n0 1\n1 0\n");
  CHECK(swap.field().value() == 2);
  CHECK(swap.dim() == 2);
  CHECK(!swap.has_zero_rows);
  const auto plain = swap.plain();
  CHECK(plain.at(0, 0) == 0);
  CHECK(plain.at(0, 1) == 1);
  CHECK(plain.at(1, 0) == 1);
  CHECK(plain.at(1, 1) == 0);
}

TEST_CASE("comments, blank lines, and loose whitespace are ignored") {
  const auto parsed = parse_system(
      "# a comment\n"
      "\n"
      "  q 2 n 2   # trailing comment\n"
      "\t0   1\n"
      "# interleaved\n"
      "1 0\n"
      "\n");
  CHECK(parsed.plain() ==
        parse_system("q 2 n 2\n0 1\n1 0\n").plain());
}

TEST_CASE("zero rows parse into bottom rows") {
  const auto parsed = parse_system("q 2 n 2\nzero\n1 0\n");
  CHECK(parsed.has_zero_rows);
  CHECK(parsed.matrix.row_is_bottom(0));
  CHECK(!parsed.matrix.row_is_bottom(1));
  CHECK_THROWS_AS(parsed.plain(), std::logic_error);
  CHECK_NOTHROW(parsed.extended());
}

TEST_CASE("parse errors carry the offending line number") {
  CHECK(error_line("") == 0);
  CHECK(error_line("# only comments\n\n") == 0);
  CHECK(error_line("q 6 n 2\n0 1\n1 0\n") == 1);      // not a prime power
  CHECK(error_line("q 2 n 0\n") == 1);                // dimension
  CHECK(error_line("q 2 n 9999\n") == 1);             // dimension too large
  CHECK(error_line("q 2\n") == 1);                    // short header
  CHECK(error_line("p 2 n 2\n0 1\n1 0\n") == 1);      // malformed header
  CHECK(error_line("q 3 n 2\n0 1\n0 3\n") == 3);      // exponent >= q
  CHECK(error_line("q 3 n 2\n0 1 2\n0 0\n") == 2);    // row too long
  CHECK(error_line("q 3 n 2\n0\n0 0\n") == 2);        // row too short
  CHECK(error_line("q 2 n 2\n0 1\nq 2 n 2\n") == 3);  // duplicate header
  CHECK(error_line("q 2 n 2\n0 1\n") == 0);           // missing rows
  CHECK(error_line("q 2 n 2\n0 1\n1 0\n0 0\n") == 4); // extra rows
  CHECK(error_line("q 2 n 2\nzero zero\n1 0\n") == 2);
  CHECK(error_line("q 2 n 2\n0 x\n1 0\n") == 2);      // not a number
  CHECK(error_line("q 2 n 2\n0 -1\n1 0\n") == 2);     // negative
}

TEST_CASE("serialization is canonical and round-trips") {
  CHECK(serialize_system(parse_system("q 2 n 2\n0 1\n1 0\n")) ==
        "q 2 n 2\n0 1\n1 0\n");
  CHECK(serialize_system(parse_system("# c\n q 2 n 2 \n 0   1\n1 0")) ==
        "q 2 n 2\n0 1\n1 0\n");
  CHECK(serialize_system(parse_system("q 3 n 2\nzero\n0 2\n")) ==
        "q 3 n 2\nzero\n0 2\n");

  for (const auto* text : {"q 2 n 2\n0 1\n1 0\n", "q 3 n 2\nzero\n0 2\n",
                           "q 16 n 1\n15\n", "q 5 n 3\nzero\nzero\nzero\n"}) {
    const auto once = parse_system(text);
    const auto twice = parse_system(serialize_system(once));
    CHECK(once.matrix == twice.matrix);
  }
}

TEST_CASE("fixture files parse and round trip") {
  for (const auto* name :
       {"swap.mds", "identity2.mds", "chain5.mds", "zero_only.mds",
        "mixed_zero.mds", "triangular3.mds", "counterexample.mds",
        "swapchain.mds"}) {
    const auto text = read_file(kDataDir + "/" + name);
    const auto parsed = parse_system(text);
    CHECK(parse_system(serialize_system(parsed)).matrix == parsed.matrix);
  }
}

TEST_CASE("dependency graph DOT output") {
  const auto parsed = parse_system("q 3 n 2\n2 1\n0 2\n");
  const auto matrix = parsed.plain();
  const auto dot =
      monodyn::dependency_graph_dot(matrix, monodyn::analyze_graph(matrix));
  CHECK(dot.find("digraph dependency") != std::string::npos);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  CHECK(dot.find("\xe2\x84\x92=1") != std::string::npos);  // loop number label
  CHECK(dot.find("x1 -> x1 [label=\"\xc3\x97" "2\"]") != std::string::npos);
  CHECK(dot.find("x1 -> x2;") != std::string::npos);

  // swap: one cluster with loop number 2, no multiplicity labels
  const auto swap = parse_system("q 2 n 2\n0 1\n1 0\n").plain();
  const auto swap_dot =
      monodyn::dependency_graph_dot(swap, monodyn::analyze_graph(swap));
  CHECK(swap_dot.find("\xe2\x84\x92=2") != std::string::npos);
  CHECK(swap_dot.find("label=\"\xc3\x97") == std::string::npos);
}

TEST_CASE("phase space DOT output lists every transition") {
  const auto swap = parse_system("q 2 n 2\n0 1\n1 0\n").plain();
  const auto ps = monodyn::build_phase_space(monodyn::MonomialSystem(swap));
  const auto dot = monodyn::phase_space_dot(ps);
  CHECK(dot == "digraph phase {\n"
               "  \"00\" -> \"00\";\n"
               "  \"10\" -> \"01\";\n"
               "  \"01\" -> \"10\";\n"
               "  \"11\" -> \"11\";\n"
               "}\n");
}

TEST_CASE("classification report JSON matches the golden file") {
  const auto parsed = parse_system(read_file(kDataDir + "/swap.mds"));
  const auto report =
      monodyn::classify(parsed.plain(), monodyn::Method::All);
  const auto j = monodyn::classification_to_json(report, parsed.field(),
                                                 parsed.dim(), "all",
                                                 std::nullopt);
  CHECK(j.dump(2) + "\n" ==
        read_file(kDataDir + "/golden/classify_swap_all.json"));
}

TEST_CASE("reduction report JSON matches the golden file") {
  const auto parsed = parse_system(read_file(kDataDir + "/mixed_zero.mds"));
  const auto result = monodyn::reduce_zero_components(parsed.extended());
  OrderedJson j;
  j["schema"] = 1;
  j["command"] = "reduce";
  j["q"] = parsed.field().value();
  j["n"] = parsed.dim();
  j["reduction"] =
      monodyn::reduction_to_json(result, parsed.field(), parsed.dim());
  CHECK(j.dump(2) + "\n" ==
        read_file(kDataDir + "/golden/reduce_mixed_zero.json"));
}

TEST_CASE("phase report JSON matches the golden file") {
  const auto parsed = parse_system(read_file(kDataDir + "/swap.mds"));
  const auto ps = monodyn::build_phase_space(
      monodyn::MonomialSystem(parsed.plain()));
  CHECK(monodyn::phase_to_json(ps).dump(2) + "\n" ==
        read_file(kDataDir + "/golden/phase_swap.json"));
}

TEST_CASE("classification JSON embeds the reduction for extended input") {
  const auto parsed = parse_system("q 3 n 2\nzero\n0 2\n");
  const auto reduction = monodyn::reduce_zero_components(parsed.extended());
  REQUIRE(!reduction.empty());
  const auto report =
      monodyn::classify(*reduction.reduced, monodyn::Method::Power);
  const auto j = monodyn::classification_to_json(
      report, parsed.field(), parsed.dim(), "power", reduction);
  CHECK(j["n"] == 2);
  CHECK(j["reduction"]["kept"] == OrderedJson::array({2}));
  CHECK(j["reduction"]["reduced"]["n"] == 1);
  CHECK(j["fixed_point_system"] == true);
}

TEST_CASE("screen JSON carries witnesses") {
  const auto swap = parse_system("q 2 n 2\n0 1\n1 0\n").plain();
  const auto partition = monodyn::analyze_graph(swap);
  const auto screen = monodyn::screen_loop_numbers(swap.field(), partition);
  const auto j = monodyn::screen_to_json(screen);
  CHECK(j["name"] == "loop-numbers");
  CHECK(j["verdict"] == "fail");
  CHECK(j["witness"]["component"] == 0);
}
