#pragma once

// Empirical checks of the coordinate-gadget distance table and the two
// vector-gadget lemmas under a given parameter bundle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sethlab/edit_distance.hpp"
#include "sethlab/gadgets.hpp"
#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/parallel.hpp"
#include "sethlab/report.hpp"

namespace sethlab {

/// How harness checks compute EDIT.
enum class CheckEngine {
  banded_fallback,  // banded with a known bound, full DP when the band is exceeded
  dp,
  bitparallel,
};

/// EDIT(x, y) via the selected route; `bound` is the band used by banded_fallback.
inline std::uint64_t checked_distance(std::string_view x, std::string_view y, std::uint64_t bound,
                                      CheckEngine engine) {
  switch (engine) {
    case CheckEngine::banded_fallback:
      if (auto v = edit_distance_banded(x, y, bound)) return *v;
      return edit_distance_dp(x, y);
    case CheckEngine::dp: return edit_distance_dp(x, y);
    case CheckEngine::bitparallel: return edit_distance_bitparallel(x, y);
  }
  throw std::invalid_argument("unknown check engine");
}

/// Four CG1/CG2 cells (l0 when x1*x2 = 0, 3*l0 otherwise) and the two
/// CG2/g cells (l0 + 1).
inline Report verify_coordinate_table(const GadgetParams& p,
                                      CheckEngine engine = CheckEngine::banded_fallback) {
  Report report;
  const std::uint64_t bound = 4 * p.l0 + 1;
  const Sequence g = gadget_g(p);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      const std::uint64_t v =
          checked_distance(coordinate_gadget_1(x1, p), coordinate_gadget_2(x2, p), bound, engine);
      report.add(expect_equal("coordinate-table", {{"x1", x1}, {"x2", x2}, {"l0", p.l0}},
                              x1 * x2 == 1 ? 3 * p.l0 : p.l0, v));
    }
  for (int x = 0; x < 2; ++x) {
    const std::uint64_t v = checked_distance(coordinate_gadget_2(x, p), g, bound, engine);
    report.add(expect_equal("g-distance", {{"x", x}, {"l0", p.l0}}, p.l0 + 1, v));
  }
  return report;
}

inline constexpr std::uint64_t exhaustive_dimension_limit = 4;

struct LemmaMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static LemmaMode all_pairs() { return {}; }
  static LemmaMode sampled(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

inline BinaryVector vector_from_mask(std::uint64_t mask, std::size_t d) {
  BinaryVector v(d);
  for (std::size_t k = 0; k < d; ++k) v[k] = static_cast<std::uint8_t>((mask >> (d - 1 - k)) & 1);
  return v;
}

/// Orthogonal pairs must satisfy EDIT(AG1(a), AG2(b)) <= E_s, all other pairs
/// must hit E_u exactly. Exhaustive mode covers all 4^d pairs (d <= 4).
inline Report verify_vector_lemmas(const GadgetParams& p, LemmaMode mode = LemmaMode::all_pairs(),
                                   CheckEngine engine = CheckEngine::banded_fallback) {
  const std::size_t d = p.d;
  std::vector<std::pair<BinaryVector, BinaryVector>> pairs;
  if (mode.exhaustive) {
    if (d > exhaustive_dimension_limit)
      throw std::invalid_argument("verify_vector_lemmas: exhaustive mode is limited to d <= 4");
    const std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t ma = 0; ma < count; ++ma)
      for (std::uint64_t mb = 0; mb < count; ++mb)
        pairs.emplace_back(vector_from_mask(ma, d), vector_from_mask(mb, d));
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::size_t s = 0; s < mode.samples; ++s) {
      auto a = detail::draw_vector(rng, d, 0.5);
      auto b = detail::draw_vector(rng, d, 0.5);
      pairs.emplace_back(std::move(a), std::move(b));
    }
  }

  const std::uint64_t e_s = p.e_s();
  const std::uint64_t e_u = p.e_u();
  std::vector<std::optional<CheckResult>> slots(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    const std::uint64_t v =
        checked_distance(vector_gadget_1(a, p), vector_gadget_2(b, p), e_u + p.d, engine);
    nlohmann::json inputs{{"a", to_bit_string(a)}, {"b", to_bit_string(b)}};
    slots[i] = dot(a, b) == 0 ? expect_at_most("orthogonal-bound", std::move(inputs), e_s, v)
                              : expect_equal("non-orthogonal-exact", std::move(inputs), e_u, v);
  });
  Report report;
  for (auto& s : slots) report.add(std::move(*s));
  return report;
}

}  // namespace sethlab
