#include "treecross/reference_tables.hpp"

#include <array>

#include "treecross/errors.hpp"

namespace treecross::reference {
namespace {

void check(int n) {
  if (n < 1 || n > kMaxTabulatedN) throw ArgumentError("no tabulated row for n = " + std::to_string(n));
}

}  // namespace

const std::vector<std::uint64_t>& convex_counts(int n) {
  static const std::array<std::vector<std::uint64_t>, kMaxTabulatedN> rows{{
      {1},
      {1},
      {3},
      {12, 4},
      {55, 45, 20, 5},
      {273, 378, 321, 204, 78, 36, 6},
      {1428, 2856, 3535, 3430, 2415, 1659, 847, 385, 203, 42, 7},
      {7752, 20520, 33216, 42408, 41936, 38192, 29048, 20280, 13696, 7752, 4048, 2016, 960, 248, 64, 8},
      {43263, 143451, 286308, 448371, 560124, 629019, 613413, 549162, 462285, 356193, 257121, 176040,
       115740, 67563, 38538, 19863, 10323, 4275, 1386, 450, 72, 9},
      {246675, 986700, 2339450, 4314890, 6440875, 8531520, 9974515, 10686500, 10686395, 9966550,
       8771495, 7339860, 5890895, 4463120, 3265750, 2269070, 1534005, 982890, 592545, 345720,
       190395, 100350, 49115, 20040, 7480, 2570, 520, 100, 10},
  }};
  check(n);
  return rows[static_cast<std::size_t>(n - 1)];
}

const std::string& published_mean(int n) {
  static const std::array<std::string, kMaxTabulatedN> row{"0", "0", "0", "1/4", "4/5", "5/3", "20/7", "35/8", "56/7", "42/5"};
  check(n);
  return row[static_cast<std::size_t>(n - 1)];
}

const std::string& published_second_moment(int n) {
  static const std::array<std::string, kMaxTabulatedN> row{
      "0", "0", "0", "1/4", "34/25", "977/216", "3968/343", "12789/512", "34916/729", "42063/500"};
  check(n);
  return row[static_cast<std::size_t>(n - 1)];
}

}  // namespace treecross::reference
