#include "treecross/points_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "treecross/errors.hpp"

namespace treecross {
namespace {

bool is_blank(const std::string& line) {
  for (unsigned char ch : line)
    if (!std::isspace(ch)) return false;
  return true;
}

}  // namespace

PointConfig parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line.front() == '#') continue;
    std::int64_t values[2];
    int found = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (found == 2) throw ParseError("line " + std::to_string(line_no) + ": more than two values", line_no);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + line.substr(i, j - i) +
                             "' is not an integer",
                         line_no);
      }
      if (v < -kCoordinateBound || v > kCoordinateBound) {
        throw ParseError("line " + std::to_string(line_no) + ": coordinate exceeds 2^26", line_no);
      }
      values[found++] = v;
      i = j;
    }
    if (found != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two integers", line_no);
    pts.push_back({values[0], values[1]});
  }
  if (pts.empty()) throw ParseError("point file has no points", line_no);
  return PointConfig::coordinates(std::move(pts));
}

PointConfig load_points_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open point file " + path.string());
  return parse_points(in);
}

void write_points(std::ostream& out, const PointConfig& config) {
  for (const Point& p : config.points()) out << p.x << ' ' << p.y << '\n';
}

}  // namespace treecross
