#pragma once

// Unit-cost Levenshtein distance engines.
//
//   edit_distance_dp          O(nm) time, O(min(n,m)) space, the reference engine
//   edit_distance_banded      Ukkonen band, exact when the distance is <= k
//   edit_distance_bitparallel Myers/Hyyro bit-vector engine, 64 rows per word
//   edit_distance_bruteforce  enumerates monotone alignments, tiny inputs only
//   edit_alignment            full-matrix traceback producing an EditOps witness
//
// All engines treat the inputs as raw bytes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sethlab/sequence.hpp"

namespace sethlab {

enum class Engine { dp, banded, bitparallel };

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::dp: return "dp";
    case Engine::banded: return "banded";
    case Engine::bitparallel: return "bitparallel";
  }
  return "?";
}

inline std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "dp") return Engine::dp;
  if (name == "banded") return Engine::banded;
  if (name == "bitparallel") return Engine::bitparallel;
  return std::nullopt;
}

inline std::uint64_t edit_distance_dp(std::string_view x, std::string_view y) {
  if (x.size() < y.size()) std::swap(x, y);
  // y is the shorter string; one row of |y|+1 cells.
  const std::size_t m = y.size();
  std::vector<std::uint64_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::uint64_t diag = row[0];
    row[0] = i;
    const char xc = x[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint64_t up = row[j];
      std::uint64_t best = diag + (xc == y[j - 1] ? 0 : 1);
      best = std::min(best, up + 1);
      best = std::min(best, row[j - 1] + 1);
      row[j] = best;
      diag = up;
    }
  }
  return row[m];
}

/// Returns the distance if it is at most k, std::nullopt otherwise.
///
/// Only diagonals delta = j - i with |delta| + |(m - n) - delta| <= k are
/// evaluated: any transformation path visiting another diagonal costs more
/// than k.
inline std::optional<std::uint64_t> edit_distance_banded(std::string_view x, std::string_view y,
                                                         std::uint64_t k) {
  using i64 = std::int64_t;
  const i64 n = static_cast<i64>(x.size());
  const i64 m = static_cast<i64>(y.size());
  const i64 shift = m - n;
  const i64 abs_shift = shift < 0 ? -shift : shift;
  if (static_cast<std::uint64_t>(abs_shift) > k) return std::nullopt;
  const i64 kk = static_cast<i64>(std::min<std::uint64_t>(k, static_cast<std::uint64_t>(n + m)));
  const i64 slack = (kk - abs_shift) / 2;
  const i64 lo = std::min<i64>(0, shift) - slack;
  const i64 hi = std::max<i64>(0, shift) + slack;
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);

  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  // Cell (i, j) lives at slot (j - i) - lo of row i.
  std::vector<std::uint64_t> prev(width + 2, inf), cur(width + 2, inf);
  auto slot = [lo](i64 i, i64 j) { return static_cast<std::size_t>(j - i - lo) + 1; };

  for (i64 j = std::max<i64>(0, lo); j <= std::min(m, hi); ++j) prev[slot(0, j)] = j;

  for (i64 i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), inf);
    const i64 j_begin = std::max<i64>(0, i + lo);
    const i64 j_end = std::min<i64>(m, i + hi);
    std::uint64_t row_min = inf;
    for (i64 j = j_begin; j <= j_end; ++j) {
      const std::size_t s = slot(i, j);
      std::uint64_t best;
      if (j == 0) {
        best = static_cast<std::uint64_t>(i);
      } else {
        // prev[s] is (i-1, j-1); prev[s+1] is (i-1, j); cur[s-1] is (i, j-1).
        best = prev[s] + (x[i - 1] == y[j - 1] ? 0 : 1);
        best = std::min(best, prev[s + 1] + 1);
        best = std::min(best, cur[s - 1] + 1);
      }
      cur[s] = best;
      row_min = std::min(row_min, best);
    }
    if (row_min > k) return std::nullopt;
    std::swap(prev, cur);
  }
  const std::uint64_t d = prev[slot(n, m)];
  if (d > k) return std::nullopt;
  return d;
}

namespace detail {

using Word = std::uint64_t;
inline constexpr unsigned word_bits = 64;
inline constexpr Word high_bit = Word{1} << (word_bits - 1);

enum class TopRow {
  counted,  // D[0][j] = j: global alignment
  free,     // D[0][j] = 0: pattern may start anywhere in the text
};

/// Match masks for a pattern split into 64-row blocks.
class PatternMasks {
 public:
  explicit PatternMasks(std::string_view pattern)
      : rows_(pattern.size()), blocks_((pattern.size() + word_bits - 1) / word_bits) {
    code_.fill(-1);
    int distinct = 0;
    for (unsigned char c : pattern)
      if (code_[c] < 0) code_[c] = static_cast<std::int16_t>(distinct++);
    masks_.assign(static_cast<std::size_t>(distinct + 1) * blocks_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto c = static_cast<std::size_t>(code_[static_cast<unsigned char>(pattern[r])]);
      masks_[c * blocks_ + r / word_bits] |= Word{1} << (r % word_bits);
    }
    absent_ = static_cast<std::size_t>(distinct) * blocks_;
  }

  std::size_t blocks() const { return blocks_; }
  std::size_t rows() const { return rows_; }

  const Word* masks_for(unsigned char c) const {
    const auto code = code_[c];
    return masks_.data() + (code < 0 ? absent_ : static_cast<std::size_t>(code) * blocks_);
  }

  Word last_row_bit() const { return Word{1} << ((rows_ - 1) % word_bits); }

 private:
  std::size_t rows_;
  std::size_t blocks_;
  std::array<std::int16_t, 256> code_{};
  std::vector<Word> masks_;  // last block-row stays zero for symbols absent from the pattern
  std::size_t absent_ = 0;
};

/// One column step of a 64-row block. pv/mv hold the vertical +1/-1 deltas,
/// hin is the horizontal delta entering the top row. Returns the horizontal
/// delta leaving the row selected by out_bit.
inline int advance_block(Word& pv, Word& mv, Word eq, int hin, Word out_bit) {
  const Word xv = eq | mv;
  if (hin < 0) eq |= 1;
  const Word xh = (((eq & pv) + pv) ^ pv) | eq;
  Word ph = mv | ~(xh | pv);
  Word mh = pv & xh;
  int hout = 0;
  if (ph & out_bit) hout = 1;
  else if (mh & out_bit) hout = -1;
  ph <<= 1;
  mh <<= 1;
  if (hin < 0) mh |= 1;
  else if (hin > 0) ph |= 1;
  pv = mh | ~(xv | ph);
  mv = ph & xv;
  return hout;
}

struct ColumnScan {
  std::uint64_t last;  // D[m][n]
  std::uint64_t best;  // min over j of D[m][j]
};

/// Sweeps the text column by column, tracking D[m][j] for the last pattern row.
inline ColumnScan scan_columns(std::string_view pattern, std::string_view text, TopRow top) {
  const std::uint64_t m = pattern.size();
  if (m == 0) {
    const std::uint64_t last = top == TopRow::counted ? text.size() : 0;
    return {last, 0};
  }
  const PatternMasks masks(pattern);
  const std::size_t blocks = masks.blocks();
  const Word last_bit = masks.last_row_bit();
  std::vector<Word> pv(blocks, ~Word{0}), mv(blocks, 0);
  const int top_delta = top == TopRow::counted ? 1 : 0;

  std::uint64_t score = m;
  std::uint64_t best = m;
  for (unsigned char c : text) {
    const Word* eq = masks.masks_for(c);
    int h = top_delta;
    for (std::size_t b = 0; b + 1 < blocks; ++b) h = advance_block(pv[b], mv[b], eq[b], h, high_bit);
    h = advance_block(pv[blocks - 1], mv[blocks - 1], eq[blocks - 1], h, last_bit);
    score = static_cast<std::uint64_t>(static_cast<std::int64_t>(score) + h);
    best = std::min(best, score);
  }
  return {score, best};
}

}  // namespace detail

/// The shorter input is packed into machine words; cost O(ceil(min/64) * max).
inline std::uint64_t edit_distance_bitparallel(std::string_view x, std::string_view y) {
  if (x.size() > y.size()) std::swap(x, y);
  return detail::scan_columns(x, y, detail::TopRow::counted).last;
}

inline std::uint64_t edit_distance(std::string_view x, std::string_view y, Engine engine) {
  switch (engine) {
    case Engine::dp: return edit_distance_dp(x, y);
    case Engine::bitparallel: return edit_distance_bitparallel(x, y);
    case Engine::banded: {
      // Unbounded band; use edit_distance_banded directly for a threshold.
      auto d = edit_distance_banded(x, y, std::max(x.size(), y.size()));
      return *d;
    }
  }
  throw std::invalid_argument("unknown engine");
}

inline constexpr std::size_t bruteforce_max_length = 8;

namespace detail {

// Walks every monotone alignment: at each step either x[i] is deleted, y[j]
// is deleted, or x[i] and y[j] are aligned (a substitution when they differ).
// No memoisation, so this stays independent of the DP recurrence.
inline void enumerate_alignments(std::string_view x, std::string_view y, std::size_t i,
                                 std::size_t j, std::uint64_t cost, std::uint64_t& best) {
  if (cost >= best) return;
  if (i == x.size() && j == y.size()) {
    best = cost;
    return;
  }
  if (i < x.size() && j < y.size())
    enumerate_alignments(x, y, i + 1, j + 1, cost + (x[i] == y[j] ? 0 : 1), best);
  if (i < x.size()) enumerate_alignments(x, y, i + 1, j, cost + 1, best);
  if (j < y.size()) enumerate_alignments(x, y, i, j + 1, cost + 1, best);
}

}  // namespace detail

/// Deletion/substitution distance: transform both x and y into a common z
/// using only deletions and substitutions, minimise the total count.
/// Exponential; inputs are capped at bruteforce_max_length symbols.
inline std::uint64_t edit_distance_bruteforce(std::string_view x, std::string_view y) {
  if (x.size() > bruteforce_max_length || y.size() > bruteforce_max_length)
    throw std::invalid_argument("edit_distance_bruteforce: inputs longer than " +
                                std::to_string(bruteforce_max_length));
  std::uint64_t best = x.size() + y.size();
  detail::enumerate_alignments(x, y, 0, 0, 0, best);
  return best;
}

enum class EditKind : std::uint8_t {
  match,
  substitute,
  delete_x,  // drop x[i]
  delete_y,  // drop y[j]; same effect on the x->y transcript as insert_x
  insert_x,  // insert y[j] into x
};

struct EditOp {
  EditKind kind;
  std::size_t i = 0;  // index into x (match, substitute, delete_x)
  std::size_t j = 0;  // index into y (match, substitute, delete_y, insert_x)

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditOps {
  std::vector<EditOp> ops;
  std::uint64_t cost = 0;
};

inline char edit_kind_code(EditKind k) {
  switch (k) {
    case EditKind::match: return 'M';
    case EditKind::substitute: return 'S';
    case EditKind::delete_x: return 'D';
    case EditKind::delete_y: return 'd';
    case EditKind::insert_x: return 'I';
  }
  return '?';
}

/// One optimal transcript. Ties prefer match/substitute, then delete_x, then insert_x.
inline EditOps edit_alignment(std::string_view x, std::string_view y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const std::size_t stride = m + 1;
  std::vector<std::uint32_t> table((n + 1) * stride);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return table[i * stride + j]; };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t best = at(i - 1, j - 1) + (x[i - 1] == y[j - 1] ? 0u : 1u);
      best = std::min(best, at(i - 1, j) + 1);
      best = std::min(best, at(i, j - 1) + 1);
      at(i, j) = best;
    }
  }

  EditOps result;
  result.cost = at(n, m);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0) {
      const bool same = x[i - 1] == y[j - 1];
      if (here == at(i - 1, j - 1) + (same ? 0u : 1u)) {
        result.ops.push_back({same ? EditKind::match : EditKind::substitute, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == at(i - 1, j) + 1) {
      result.ops.push_back({EditKind::delete_x, i - 1, j});
      --i;
      continue;
    }
    result.ops.push_back({EditKind::insert_x, i, j - 1});
    --j;
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

/// Rewrites insertions into x as deletions from y, giving the deletion and
/// substitution only form in which both strings shrink to a common target.
inline EditOps to_deletion_form(EditOps ops) {
  for (auto& op : ops.ops)
    if (op.kind == EditKind::insert_x) op.kind = EditKind::delete_y;
  return ops;
}

/// Applies a transcript to x. Throws std::invalid_argument if the transcript
/// does not walk x and y left to right or mislabels a match.
inline Sequence replay(std::string_view x, std::string_view y, const EditOps& ops) {
  Sequence out;
  std::size_t xi = 0, yj = 0;
  std::uint64_t cost = 0;
  auto fail = [](const char* what) { throw std::invalid_argument(std::string("replay: ") + what); };
  for (const auto& op : ops.ops) {
    switch (op.kind) {
      case EditKind::match:
      case EditKind::substitute:
        if (op.i != xi || op.j != yj || xi >= x.size() || yj >= y.size()) fail("out of order");
        if ((x[xi] == y[yj]) != (op.kind == EditKind::match)) fail("mislabelled match");
        out.push_back(y[yj]);
        cost += op.kind == EditKind::substitute;
        ++xi;
        ++yj;
        break;
      case EditKind::delete_x:
        if (op.i != xi || xi >= x.size()) fail("out of order");
        ++xi;
        ++cost;
        break;
      case EditKind::delete_y:
      case EditKind::insert_x:
        if (op.j != yj || yj >= y.size()) fail("out of order");
        out.push_back(y[yj]);
        ++yj;
        ++cost;
        break;
    }
  }
  if (xi != x.size() || yj != y.size()) fail("transcript does not consume both strings");
  if (cost != ops.cost) fail("cost does not match operation count");
  return out;
}

}  // namespace sethlab
