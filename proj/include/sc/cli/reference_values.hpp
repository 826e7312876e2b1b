#ifndef SC_CLI_REFERENCE_VALUES_HPP
#define SC_CLI_REFERENCE_VALUES_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace sc::cli {

/// N(k,d) for 1 <= k, d <= 10, row k-1.
inline constexpr std::array<std::array<std::uint64_t, 10>, 10> kReferenceNkd{{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
    {6, 7, 7, 7, 7, 7, 7, 7, 7, 7},
    {10, 14, 15, 15, 15, 15, 15, 15, 15, 15},
    {15, 26, 30, 31, 31, 31, 31, 31, 31, 31},
    {21, 46, 58, 62, 63, 63, 63, 63, 63, 63},
    {28, 79, 110, 122, 126, 127, 127, 127, 127, 127},
    {36, 133, 206, 238, 250, 254, 255, 255, 255, 255},
    {45, 221, 383, 464, 494, 506, 510, 511, 511, 511},
    {55, 364, 709, 894, 974, 1006, 1018, 1022, 1023, 1023},
}};

/// f_k(C) for C = k .. k(k+1)/2, k = 2..6.
inline const std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>>& reference_frequencies() {
  static const std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows{
      {2, {2, 2}},
      {3, {3, 0, 18, 6}},
      {4, {4, 0, 0, 36, 48, 144, 24}},
      {5, {5, 0, 0, 0, 60, 0, 200, 400, 1140, 1200, 120}},
      {6, {6, 0, 0, 0, 0, 90, 0, 0, 300, 990, 270, 5400, 8280, 19800, 10800, 720}},
  };
  return rows;
}

/// b_k for k = 3..6.
inline constexpr std::array<std::pair<std::size_t, std::uint64_t>, 4> kReferenceThresholds{{
    {3, 5}, {4, 7}, {5, 11}, {6, 14}}};

}  // namespace sc::cli

#endif  // SC_CLI_REFERENCE_VALUES_HPP
