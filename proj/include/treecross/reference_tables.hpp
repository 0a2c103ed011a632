#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treecross::reference {

/// Published number of labelled trees with k = 0, 1, 2, ... crossings on n
/// points in convex position, n = 1..10.
const std::vector<std::uint64_t>& convex_counts(int n);

/// Published E(X_n) and E(X_n^2) for n = 1..10, verbatim as "p/q" strings.
/// The n = 9 mean is printed as "56/7"; the enumerated value is 56/9.
const std::string& published_mean(int n);
const std::string& published_second_moment(int n);

inline constexpr int kMaxTabulatedN = 10;

}  // namespace treecross::reference
