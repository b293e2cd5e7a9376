#include <doctest.h>

#include <filesystem>
#include <random>

#include "chainbands/builders.hpp"
#include "chainbands/io.hpp"

using namespace chainbands;

namespace {

std::filesystem::path graph_file(const char* name) {
  return std::filesystem::path(CHAINBANDS_GRAPH_DIR) / name;
}

std::string parse_error(std::string_view text) {
  try {
    io::parse_graph_description(text, "test.json");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("text was accepted");
  return {};
}

}  // namespace

TEST_CASE("shipped graph files match the builders") {
  CHECK(validate(io::read_graph_file(graph_file("folded_hksw.json"))) == folded_hksw_graph());
  CHECK(validate(io::read_graph_file(graph_file("line.json"))) == line_graph());
  CHECK(validate(io::read_graph_file(graph_file("triangle_chain.json"))) == triangle_chain());
  CHECK(validate(io::read_graph_file(graph_file("parallel_path_chain.json"))) ==
        parallel_path_chain());
  // extension is optional
  CHECK(validate(io::read_graph_file(graph_file("line"))) == line_graph());
}

TEST_CASE("missing file") {
  try {
    io::read_graph_file(graph_file("no_such_graph"));
    FAIL("expected FileError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FileError);
  }
}

TEST_CASE("parse errors report position or element") {
  CHECK(parse_error("{\n  \"vertices\": 2,\n  \"edges\": [[0, 1, 0],,]\n}").find("line 3") !=
        std::string::npos);
  CHECK(parse_error(R"({"vertices": 2, "edges": [[0, 1, 0], [0, 1]]})").find("edges[1]") !=
        std::string::npos);
  CHECK(parse_error(R"({"vertices": 2, "edges": [[0, 1, 0], [0, "a", 1]]})").find("edges[1][1]") !=
        std::string::npos);
  CHECK(parse_error(R"({"vertices": 2.5, "edges": []})").find("vertices") != std::string::npos);
  CHECK(parse_error(R"({"edges": []})").find("vertices") != std::string::npos);
  CHECK(parse_error(R"({"vertices": 1, "edges": [], "extra": 1})").find("extra") !=
        std::string::npos);
  CHECK(parse_error("[1, 2]").find("object") != std::string::npos);
}

TEST_CASE("comments are allowed") {
  const auto d = io::parse_graph_description("// the line\n{\"vertices\": 1, /* loop */ \"edges\": [[0,0,1]]}");
  CHECK(validate(d) == line_graph());
}

TEST_CASE("to_json round trips through the parser") {
  std::vector<GraphDescription> descriptions{folded_hksw_graph().description()};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) descriptions.push_back(random_m1_chain(seed).description());
  for (const auto& d : descriptions) CHECK(io::parse_graph_description(io::to_json(d)) == d);
}

TEST_CASE("format_real") {
  CHECK(io::format_real(0.0) == "0.0");
  CHECK(io::format_real(1.0) == "1.0");
  CHECK(io::format_real(-2.0) == "-2.0");
  CHECK(io::format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(io::format_real(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("band table csv") {
  const std::vector<double> grid{0.0, 1.0};
  const auto csv = io::band_table_csv(sample_bands(line_graph(), grid));
  CHECK(csv == "k,lambda_1\n0.0,1.0\n1.0,0.54030230586813977\n");
  const auto wide = io::band_table_csv(sample_bands(folded_hksw_graph(), grid));
  CHECK(wide.substr(0, wide.find('\n')) == "k,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5");
}

TEST_CASE("edge report") {
  const auto edges = locate_all_band_edges(line_graph());
  CHECK(io::band_edges_report(edges) ==
        "band,kind,value,k_attained,classification\n"
        "1,min,-1.0,3.1415926535897931,SymmetryPoint\n"
        "1,max,1.0,0.0,SymmetryPoint\n"
        "ALL_EDGES_AT_SYMMETRY_POINTS: yes\n");
  const auto folded = io::band_edges_report(locate_all_band_edges(folded_hksw_graph()));
  CHECK(folded.find("3,min,") != std::string::npos);
  CHECK(folded.find("Interior") != std::string::npos);
  CHECK(folded.ends_with("ALL_EDGES_AT_SYMMETRY_POINTS: no\n"));
}

TEST_CASE("flat report and quantum csv") {
  const std::vector<double> flat{0.0, 0.5};
  CHECK(io::flat_band_report(flat) == "0.0\n0.5\n");
  CHECK(io::flat_band_report(std::span<const double>{}).empty());

  const std::vector<QuantumBandPoint> points{quantum_bands(line_graph(), 0.0, {15})};
  CHECK(io::quantum_csv(points) == "# unresolved at E=(1pi)^2=9.869604401089358\nk,E\n0.0,0.0\n");
}

TEST_CASE("svg plot has one polyline per band and balanced tags") {
  const auto svg = io::band_plot_svg(sample_bands(folded_hksw_graph(), half_zone_grid(21)));
  std::size_t count = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++count;
  CHECK(count == 5);
  CHECK(svg.starts_with("<?xml"));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  // every element is either self-closing or closed
  std::size_t opens = 0;
  std::size_t closes = 0;
  for (std::size_t i = 0; i + 1 < svg.size(); ++i) {
    if (svg[i] == '<' && svg[i + 1] != '/' && svg[i + 1] != '?') ++opens;
    if ((svg[i] == '<' && svg[i + 1] == '/') || (svg[i] == '/' && svg[i + 1] == '>')) ++closes;
  }
  CHECK(opens == closes);
  CHECK(svg.find(">k</text>") != std::string::npos);
  CHECK(svg.find(">&#955;</text>") != std::string::npos);
}
