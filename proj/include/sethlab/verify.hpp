#pragma once

// Verification harness: gadget table, vector lemmas, the PAT and EDIT
// threshold theorems on generated OV instances, and the small-string facts
// (deletion/substitution equivalence, trailing-run lower bound).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sethlab/desk_profile.hpp"
#include "sethlab/edit_distance.hpp"
#include "sethlab/gadget_checks.hpp"
#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/parallel.hpp"
#include "sethlab/reduction.hpp"
#include "sethlab/report.hpp"

namespace sethlab {

/// One generated instance of the theorem corpus and its measured distances.
struct TheoremSample {
  std::size_t index = 0;
  OvInstance instance;
  bool brute_force = false;
  std::uint64_t pat = 0;
  std::uint64_t edit = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t p2_prime_length = 0;
  std::uint64_t gap = 0;

  bool pat_says_orthogonal() const { return x >= gap && pat <= x - gap; }
  bool edit_says_orthogonal() const { return y >= gap && edit <= y - gap; }
};

struct TheoremOptions {
  PatEngine pat_engine = PatEngine::bitparallel;
  Engine edit_engine = Engine::bitparallel;
  double planted_density = 0.5;
  double pair_free_density = default_no_pair_density;
};

/// Instances alternate planted / pair-free, with |A|, |B| drawn from [1, n_max].
inline std::vector<OvInstance> theorem_corpus(std::size_t n_instances, std::size_t d, std::size_t n_max,
                                              std::uint64_t seed, const TheoremOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  std::vector<OvInstance> corpus;
  corpus.reserve(n_instances);
  for (std::size_t i = 0; i < n_instances; ++i) {
    const bool planted = i % 2 == 0;
    for (;;) {
      const std::size_t n_a = 1 + detail::draw_index(rng, n_max);
      const std::size_t n_b = 1 + detail::draw_index(rng, n_max);
      const std::uint64_t inst_seed = rng();
      try {
        corpus.push_back(gen_ov(n_a, n_b, d, planted, planted ? opt.planted_density : opt.pair_free_density,
                                inst_seed));
        break;
      } catch (const GenerationError&) {
        // sizes too large for a pair-free draw at this d; resample
      }
    }
  }
  return corpus;
}

inline TheoremSample measure_theorems(const OvInstance& inst, const GadgetParams& p, std::size_t index,
                                      const TheoremOptions& opt = {}) {
  TheoremSample s;
  s.index = index;
  s.instance = inst;
  s.brute_force = solve_ov_bruteforce(inst).found;
  const ReductionOutput r = build_sequences(inst, p);
  s.pat = opt.pat_engine == PatEngine::dp ? pat_distance(r.p1, r.p2) : pat_distance_bitparallel(r.p1, r.p2);
  s.edit = edit_distance(r.p1_prime, r.p2_prime, opt.edit_engine);
  s.x = r.x;
  s.y = r.y;
  s.p2_prime_length = r.p2_prime.size();
  s.gap = p.e_u() - p.e_s();
  return s;
}

inline std::vector<TheoremSample> measure_corpus(const std::vector<OvInstance>& corpus, const GadgetParams& p,
                                                 const TheoremOptions& opt = {}) {
  std::vector<TheoremSample> out(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { out[i] = measure_theorems(corpus[i], p, i, opt); });
  return out;
}

/// Per instance: PAT and EDIT take their predicted values, the '3' padding
/// costs at least 2|P2'|, and both decisions agree with brute force.
inline Report theorem_report(const std::vector<TheoremSample>& samples) {
  Report report;
  for (const auto& s : samples) {
    const nlohmann::json inputs{{"instance", s.index},
                                {"d", s.instance.d},
                                {"n_a", s.instance.a.size()},
                                {"n_b", s.instance.b.size()},
                                {"orthogonal", s.brute_force},
                                {"X", s.x},
                                {"Y", s.y}};
    if (s.brute_force) {
      report.add(expect_at_most("pat-threshold", inputs, s.x - s.gap, s.pat));
      report.add(expect_at_most("edit-threshold", inputs, s.y - s.gap, s.edit));
    } else {
      report.add(expect_equal("pat-threshold", inputs, s.x, s.pat));
      report.add(expect_equal("edit-threshold", inputs, s.y, s.edit));
    }
    report.add(expect_at_least("edit-padding", inputs, 2 * s.p2_prime_length, s.edit));
    const bool agree = s.pat_says_orthogonal() == s.brute_force && s.edit_says_orthogonal() == s.brute_force;
    report.add({"ov-agreement", inputs, "== 1", agree ? 1 : 0, agree});
  }
  return report;
}

inline Report verify_theorems(const GadgetParams& p, std::size_t n_instances, std::size_t n_max, std::uint64_t seed,
                              const TheoremOptions& opt = {}) {
  const auto corpus = theorem_corpus(n_instances, p.d, n_max, seed, opt);
  return theorem_report(measure_corpus(corpus, p, opt));
}

inline Report verify_theorems(std::size_t n_instances, std::size_t d, std::size_t n_max, std::uint64_t seed) {
  return verify_theorems(params_desk(d), n_instances, n_max, seed);
}

inline constexpr std::size_t deletion_form_max_length = 5;
inline constexpr std::size_t fact_prefix_max_length = 20;
inline constexpr std::uint64_t fact_max_run = 50;

/// Every binary string of length 0..max_length, shortest first.
inline std::vector<std::string> binary_strings_up_to(std::size_t max_length) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_length; ++len)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      std::string s(len, '0');
      for (std::size_t k = 0; k < len; ++k)
        if ((mask >> (len - 1 - k)) & 1) s[k] = '1';
      out.push_back(std::move(s));
    }
  return out;
}

inline std::string random_binary(std::mt19937_64& rng, std::size_t max_length) {
  std::string s(detail::draw_index(rng, max_length + 1), '0');
  for (auto& c : s) c = static_cast<char>('0' + (rng() & 1));
  return s;
}

/// EDIT(x 1^t, y 0^t) >= t on random samples, and deletion/substitution
/// brute force == DP over all binary pairs of length <= 5. Individual
/// failures are listed; each family ends with one aggregate entry.
inline Report verify_facts(std::size_t samples, std::uint64_t seed) {
  Report report;
  std::mt19937_64 rng(seed);
  std::uint64_t fact_failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::string x = random_binary(rng, fact_prefix_max_length);
    std::string y = random_binary(rng, fact_prefix_max_length);
    const std::uint64_t t = 1 + detail::draw_index(rng, fact_max_run);
    const std::uint64_t v = edit_distance_dp(x + std::string(t, '1'), y + std::string(t, '0'));
    if (v < t) {
      ++fact_failures;
      report.add(expect_at_least("trailing-runs", {{"x", x}, {"y", y}, {"t", t}}, t, v));
    }
  }
  report.add(expect_equal("trailing-runs-total", {{"samples", samples}, {"seed", seed}}, 0, fact_failures));

  const auto strings = binary_strings_up_to(deletion_form_max_length);
  std::uint64_t obs_failures = 0;
  for (const auto& x : strings)
    for (const auto& y : strings) {
      const std::uint64_t brute = edit_distance_bruteforce(x, y);
      const std::uint64_t dp = edit_distance_dp(x, y);
      if (brute != dp) {
        ++obs_failures;
        report.add(expect_equal("deletion-form", {{"x", x}, {"y", y}}, dp, brute));
      }
    }
  report.add(expect_equal("deletion-form-exhaustive",
                          {{"pairs", strings.size() * strings.size()}, {"max_length", deletion_form_max_length}}, 0,
                          obs_failures));
  return report;
}

/// Every check_params violation becomes a failed entry; a clean bundle gives one passing entry.
inline Report constraint_report(const GadgetParams& p) {
  Report report;
  const auto constraints = check_params(p);
  for (const auto& v : constraints.violations)
    report.add({"constraint " + v.name, {{"inequality", v.inequality}, {"values", v.actual}}, "holds", 0, false});
  if (constraints.ok())
    report.add({"constraints", {{"profile", p.profile_name}, {"d", p.d}}, "holds", 1, true});
  return report;
}

struct VerifyOptions {
  LemmaMode lemma_mode = LemmaMode::all_pairs();
  std::size_t fact_samples = 1000;
  std::uint64_t seed = 42;
  std::size_t theorem_instances = 20;
  std::size_t theorem_n_max = 3;
  CheckEngine engine = CheckEngine::banded_fallback;
};

/// Constraint list, coordinate table, vector lemmas, theorems and facts for one bundle.
inline Report verify_all(const GadgetParams& p, const VerifyOptions& opt = {}) {
  Report report = constraint_report(p);
  report.append(verify_coordinate_table(p, opt.engine));
  report.append(verify_vector_lemmas(p, opt.lemma_mode, opt.engine));
  if (opt.theorem_instances > 0) {
    try {
      report.append(verify_theorems(p, opt.theorem_instances, opt.theorem_n_max, opt.seed));
    } catch (const std::exception& e) {
      report.add({"theorems", {{"error", e.what()}}, "runs", 0, false});
    }
  }
  report.append(verify_facts(opt.fact_samples, opt.seed));
  return report;
}

}  // namespace sethlab
