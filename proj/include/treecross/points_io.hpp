#pragma once

#include <filesystem>
#include <iosfwd>

#include "treecross/geometry.hpp"

namespace treecross {

/// Point-set text format: one point per line as two whitespace-separated
/// integers. Blank lines and lines whose first character is '#' are skipped.
/// Label i is the i-th data line. Throws ParseError with the 1-based line number.
PointConfig parse_points(std::istream& in);
PointConfig load_points_file(const std::filesystem::path& path);
void write_points(std::ostream& out, const PointConfig& config);

}  // namespace treecross
