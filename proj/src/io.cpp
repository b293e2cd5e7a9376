#include "chainbands/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace chainbands::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_failure(std::string_view source, const std::string& what) {
  throw Error(ErrorCode::ParseError, std::string(source) + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::int64_t integer_field(const json& value, std::string_view source, const std::string& where) {
  if (!value.is_number_integer()) parse_failure(source, where + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

GraphDescription parse_graph_description(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the failure point.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    parse_failure(source, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": malformed JSON");
  }
  if (!doc.is_object()) parse_failure(source, "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "vertices" || key == "edges") continue;
    if ((key == "name" || key == "comment") && value.is_string()) continue;
    parse_failure(source, "unexpected key \"" + key + "\"");
  }
  if (!doc.contains("vertices")) parse_failure(source, "missing key \"vertices\"");
  if (!doc.contains("edges")) parse_failure(source, "missing key \"edges\"");

  GraphDescription description;
  description.vertices = integer_field(doc["vertices"], source, "\"vertices\"");
  const json& edges = doc["edges"];
  if (!edges.is_array()) parse_failure(source, "\"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& triple = edges[i];
    if (!triple.is_array() || triple.size() != 3) {
      parse_failure(source, where + " must be a triple [u, v, shift]");
    }
    description.edges.push_back({integer_field(triple[0], source, where + "[0]"),
                                 integer_field(triple[1], source, where + "[1]"),
                                 integer_field(triple[2], source, where + "[2]")});
  }
  return description;
}

GraphDescription read_graph_file(const std::filesystem::path& path) {
  std::filesystem::path actual = path;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(actual, ec)) {
    std::filesystem::path with_extension = path;
    with_extension += ".json";
    if (!std::filesystem::is_regular_file(with_extension, ec)) {
      throw Error(ErrorCode::FileError, "cannot open graph file " + path.string());
    }
    actual = with_extension;
  }
  std::ifstream in(actual, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot open graph file " + actual.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_description(buffer.str(), actual.string());
}

std::string to_json(const GraphDescription& description) {
  std::ostringstream out;
  out << "{\n  \"vertices\": " << description.vertices << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < description.edges.size(); ++i) {
    const auto& e = description.edges[i];
    out << (i == 0 ? "\n    " : ",\n    ") << '[' << e.u << ", " << e.v << ", " << e.shift << ']';
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string format_real(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  std::string text(buffer, result.ptr);
  if (std::isfinite(value) && text.find_first_of(".e") == std::string::npos) text += ".0";
  return text;
}

std::string band_table_csv(const BandTable& table) {
  std::string out = "k";
  for (Eigen::Index j = 0; j < table.band_count(); ++j) out += ",lambda_" + std::to_string(j + 1);
  out += '\n';
  for (Eigen::Index i = 0; i < table.size(); ++i) {
    out += format_real(table.grid[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < table.band_count(); ++j) {
      out += ',' + format_real(table.values(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string band_edges_report(std::span<const BandEdges> edges) {
  std::string out = "band,kind,value,k_attained,classification\n";
  bool all_symmetric = true;
  for (const auto& pair : edges) {
    for (const BandEdge* edge : {&pair.min, &pair.max}) {
      std::string ks;
      for (std::size_t i = 0; i < edge->attained_at.size(); ++i) {
        if (i > 0) ks += ';';
        ks += format_real(edge->attained_at[i]);
      }
      out += std::to_string(edge->band) + ',' + to_string(edge->kind) + ',' +
             format_real(edge->value) + ',' + ks + ',' + to_string(edge->classification) + '\n';
      all_symmetric = all_symmetric && edge->classification != EdgeClass::Interior;
    }
  }
  out += std::string("ALL_EDGES_AT_SYMMETRY_POINTS: ") + (all_symmetric ? "yes" : "no") + '\n';
  return out;
}

std::string flat_band_report(std::span<const double> values) {
  std::string out;
  for (double v : values) out += format_real(v) + '\n';
  return out;
}

std::string quantum_csv(std::span<const QuantumBandPoint> points) {
  std::string out;
  if (!points.empty()) {
    for (std::size_t n = 0; n < points.front().dirichlet_energies.size(); ++n) {
      out += "# unresolved at E=(" + std::to_string(n + 1) + "pi)^2=" +
             format_real(points.front().dirichlet_energies[n]) + '\n';
    }
  }
  out += "k,E\n";
  for (const auto& point : points) {
    for (double e : point.energies) out += format_real(point.k) + ',' + format_real(e) + '\n';
  }
  return out;
}

std::string band_plot_svg(const BandTable& table) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 480.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 20.0;
  constexpr double kBottom = 60.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const double k_lo = table.grid.front();
  const double k_hi = table.grid.size() > 1 ? table.grid.back() : k_lo + 1.0;
  double y_lo = table.values.minCoeff();
  double y_hi = table.values.maxCoeff();
  if (y_hi - y_lo < 1e-12) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;
  auto x_of = [&](double k) { return kLeft + plot_w * (k - k_lo) / (k_hi - k_lo); };
  auto y_of = [&](double y) { return kTop + plot_h * (y_hi - y) / (y_hi - y_lo); };
  auto num = [](double v) {
    char buffer[32];
    const auto r = std::to_chars(buffer, buffer + sizeof buffer, v, std::chars_format::fixed, 2);
    return std::string(buffer, r.ptr);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const double y = y_lo + (y_hi - y_lo) * t / 4.0;
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y_of(y) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << num(y) << "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double k = k_lo + (k_hi - k_lo) * t / 4.0;
    out << "<text x=\"" << num(x_of(k)) << "\" y=\"" << num(kTop + plot_h + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << num(k) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">k</text>\n"
      << "<text x=\"20\" y=\"" << num(kTop + plot_h / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\">&#955;</text>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  for (Eigen::Index j = 0; j < table.band_count(); ++j) {
    out << "<polyline data-band=\"" << (j + 1) << "\" fill=\"none\" stroke=\""
        << kColors[j % 8] << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index i = 0; i < table.size(); ++i) {
      if (i > 0) out << ' ';
      out << num(x_of(table.grid[static_cast<std::size_t>(i)])) << ','
          << num(y_of(table.values(i, j)));
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chainbands::io
