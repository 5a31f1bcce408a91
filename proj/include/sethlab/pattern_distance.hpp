#pragma once

// Pattern matching distance: the smallest edit distance between a pattern and
// any contiguous substring of a text (the empty substring included).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sethlab/edit_distance.hpp"

namespace sethlab {

/// Semi-global DP: the first row is zero (start anywhere in the text) and the
/// minimum is taken over the whole last row (end anywhere).
inline std::uint64_t pat_distance(std::string_view pattern, std::string_view text) {
  const std::size_t n = text.size();
  std::vector<std::uint64_t> row(n + 1, 0);
  for (std::size_t i = 1; i <= pattern.size(); ++i) {
    std::uint64_t diag = row[0];
    row[0] = i;
    const char pc = pattern[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint64_t up = row[j];
      std::uint64_t best = diag + (pc == text[j - 1] ? 0 : 1);
      best = std::min(best, up + 1);
      best = std::min(best, row[j - 1] + 1);
      row[j] = best;
      diag = up;
    }
  }
  return *std::min_element(row.begin(), row.end());
}

/// Same value as pat_distance, computed with the bit-vector engine
/// (pattern packed into words, free top row).
inline std::uint64_t pat_distance_bitparallel(std::string_view pattern, std::string_view text) {
  return detail::scan_columns(pattern, text, detail::TopRow::free).best;
}

inline constexpr std::size_t pat_bruteforce_max_text = 200;

/// Explicit minimum of edit_distance_dp(pattern, s) over every substring s of text.
inline std::uint64_t pat_distance_bruteforce(std::string_view pattern, std::string_view text) {
  if (text.size() > pat_bruteforce_max_text)
    throw std::invalid_argument("pat_distance_bruteforce: text longer than " +
                                std::to_string(pat_bruteforce_max_text));
  std::uint64_t best = pattern.size();  // empty substring
  for (std::size_t begin = 0; begin < text.size(); ++begin)
    for (std::size_t len = 1; begin + len <= text.size(); ++len)
      best = std::min(best, edit_distance_dp(pattern, text.substr(begin, len)));
  return best;
}

}  // namespace sethlab
