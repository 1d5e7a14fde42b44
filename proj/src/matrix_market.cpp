#include "fgraph/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fgraph {

namespace {

enum class Field { Pattern, Integer, Real };

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

EdgeList load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty input, expected %%MatrixMarket header");
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, format, field_name, symmetry;
  header >> banner >> object >> format >> field_name >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError(line_no, "missing %%MatrixMarket banner");
  object = lowercase(object);
  format = lowercase(format);
  field_name = lowercase(field_name);
  symmetry = lowercase(symmetry);
  if (object != "matrix") throw ParseError(line_no, "unsupported object '" + object + "'");
  if (format != "coordinate") throw ParseError(line_no, "only coordinate format is supported, got '" + format + "'");

  Field field;
  if (field_name == "pattern") {
    field = Field::Pattern;
  } else if (field_name == "integer") {
    field = Field::Integer;
  } else if (field_name == "real" || field_name == "double") {
    field = Field::Real;
  } else {
    throw ParseError(line_no, "unsupported field '" + field_name + "'");
  }
  bool symmetric;
  if (symmetry == "general") {
    symmetric = false;
  } else if (symmetry == "symmetric") {
    symmetric = true;
  } else {
    throw ParseError(line_no, "unsupported symmetry '" + symmetry + "'");
  }

  // Skip comments up to the size line.
  long long rows = -1, cols = -1, entries = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> entries) || rows < 0 || cols < 0 || entries < 0) {
      throw ParseError(line_no, "malformed size line '" + line + "'");
    }
    break;
  }
  if (entries < 0) throw ParseError(line_no, "missing size line");

  EdgeList out;
  out.num_vertices = static_cast<vertex_t>(std::max(rows, cols));
  out.weighted = field != Field::Pattern;
  out.edges.reserve(static_cast<std::size_t>(symmetric ? 2 * entries : entries));

  long long seen = 0;
  while (seen < entries && std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    if (!(entry >> i >> j)) throw ParseError(line_no, "malformed entry '" + line + "'");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(line_no, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") outside 1-indexed bounds " + std::to_string(rows) + " x " +
                                    std::to_string(cols));
    }
    weight_t w = 0;
    if (field == Field::Integer) {
      long long value;
      if (!(entry >> value)) throw ParseError(line_no, "missing integer value");
      if (value < 0) throw ParseError(line_no, "negative edge weight " + std::to_string(value));
      w = value;
    } else if (field == Field::Real) {
      double value;
      if (!(entry >> value)) throw ParseError(line_no, "missing real value");
      w = std::max<weight_t>(1, std::llround(value));
    }
    const auto src = static_cast<vertex_t>(i - 1);
    const auto dst = static_cast<vertex_t>(j - 1);
    out.edges.push_back({src, dst, w});
    if (symmetric && src != dst) out.edges.push_back({dst, src, w});
    ++seen;
  }
  if (seen < entries) {
    throw ParseError(line_no, "expected " + std::to_string(entries) + " entries, found " + std::to_string(seen));
  }
  return out;
}

EdgeList load_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return load_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const EdgeList& list) {
  out << "%%MatrixMarket matrix coordinate " << (list.weighted ? "integer" : "pattern") << " general\n";
  out << list.num_vertices << ' ' << list.num_vertices << ' ' << list.edges.size() << '\n';
  for (const Edge& e : list.edges) {
    out << e.src + 1 << ' ' << e.dst + 1;
    if (list.weighted) out << ' ' << e.weight;
    out << '\n';
  }
}

}  // namespace fgraph
