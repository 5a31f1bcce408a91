#pragma once

// Scaled-down parameter bundles. The original constants carry a factor-1000
// slack per level; the desk profile keeps the same gadget shapes with short
// runs and is accepted only after the gadget lemmas are checked empirically.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sethlab/gadget_checks.hpp"
#include "sethlab/gadgets.hpp"

namespace sethlab {

inline constexpr std::uint64_t desk_max_dimension = 8;
inline constexpr std::uint64_t desk_max_l0 = 64;
inline constexpr std::size_t desk_lemma_samples = 256;  // d > 4 is checked on random pairs
inline constexpr std::uint64_t desk_lemma_seed = 0x5e7b;

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The candidate bundle for (d, l0): l1 is twice the smallest even value
/// meeting constraints (ii)-(iv) and the l1 >= 4*l0 floor, l2 = 4*l + l1,
/// T = E_u + 1.
inline GadgetParams desk_candidate(std::uint64_t d, std::uint64_t l0) {
  std::uint64_t need = std::max({d * (4 * l0 + 2) + 1,  // (ii) strict
                                 4 * d * l0 + d,        // (iii)
                                 3 * (d * l0 + d),      // (iv)
                                 4 * l0});
  if (need % 2 != 0) ++need;
  GadgetParams p;
  p.d = d;
  p.l0 = l0;
  p.l1 = 2 * need;
  p.l2 = 4 * p.l() + p.l1;
  p.T = p.e_u() + 1;
  p.profile_name = "desk";
  return p;
}

/// True when the bundle passes check_params, the coordinate table and the
/// vector lemmas (all pairs for d <= 4, desk_lemma_samples pairs beyond).
inline bool desk_candidate_holds(const GadgetParams& p) {
  if (!check_params(p).ok()) return false;
  if (!verify_coordinate_table(p, CheckEngine::bitparallel).ok()) return false;
  const LemmaMode mode = p.d <= exhaustive_dimension_limit
                             ? LemmaMode::all_pairs()
                             : LemmaMode::sampled(desk_lemma_samples, desk_lemma_seed);
  return verify_vector_lemmas(p, mode, CheckEngine::bitparallel).ok();
}

namespace detail {

inline GadgetParams search_desk_profile(std::uint64_t d) {
  for (std::uint64_t l0 = 4; l0 <= desk_max_l0; l0 += 2) {
    GadgetParams p = desk_candidate(d, l0);
    if (desk_candidate_holds(p)) return p;
  }
  throw ProfileError("no desk profile found for d=" + std::to_string(d));
}

}  // namespace detail

/// Smallest validated desk bundle for 1 <= d <= 8. Results are cached per d.
inline GadgetParams params_desk(std::uint64_t d) {
  if (d < 1 || d > desk_max_dimension)
    throw std::invalid_argument("params_desk: d must lie in [1, " + std::to_string(desk_max_dimension) + "]");
  static std::mutex cache_mutex;
  static std::map<std::uint64_t, GadgetParams> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // Searched outside the lock; concurrent first calls compute the same bundle.
  GadgetParams p = detail::search_desk_profile(d);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(d, p).first->second;
}

}  // namespace sethlab
