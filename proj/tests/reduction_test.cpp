#include <gtest/gtest.h>

#include "sethlab/desk_profile.hpp"
#include "sethlab/reduction.hpp"

using namespace sethlab;

TEST(PaddedVectorGadget, Layout) {
  const auto p = params_desk(1);
  const auto g1 = padded_vector_gadget(1, {1}, p);
  const auto g2 = padded_vector_gadget(2, {0}, p);
  EXPECT_EQ(g1.size(), 2 * p.T + 3 * p.l2 + 2 * p.l());
  EXPECT_EQ(g2.size(), 2 * p.T + 2 * p.l2 + p.l());
  EXPECT_EQ(g1.substr(0, p.T), std::string(p.T, '2'));
  EXPECT_EQ(g1.substr(g1.size() - p.T), std::string(p.T, '2'));
  EXPECT_EQ(g1.substr(p.T, p.ag1_length()), vector_gadget_1({1}, p));
  EXPECT_THROW(padded_vector_gadget(3, {1}, p), std::invalid_argument);
  EXPECT_THROW(padded_vector_gadget(1, {1, 0}, p), std::invalid_argument);
}

TEST(BuildSequences, SingleVectorInA) {
  const auto p = params_desk(2);
  const OvInstance inst{2, {{1, 0}}, {{0, 1}, {1, 1}, {0, 0}}};
  const auto r = build_sequences(inst, p);
  const auto ag2p = 2 * p.T + p.ag2_length();
  EXPECT_EQ(r.p2.size(), 3 * ag2p);
  EXPECT_EQ(r.p2, padded_vector_gadget(2, {0, 1}, p) + padded_vector_gadget(2, {1, 1}, p) +
                      padded_vector_gadget(2, {0, 0}, p));
  EXPECT_EQ(r.p1, padded_vector_gadget(1, {1, 0}, p));
  EXPECT_FALSE(r.swapped);
}

TEST(BuildSequences, LengthsAndThresholds) {
  const auto p = params_desk(2);
  const OvInstance inst{2, {{1, 0}, {1, 1}}, {{0, 1}, {1, 1}, {0, 0}}};
  const auto r = build_sequences(inst, p);
  const std::uint64_t ag1p = 2 * p.T + 3 * p.l2 + 2 * p.l();
  const std::uint64_t ag2p = 2 * p.T + 2 * p.l2 + p.l();
  EXPECT_EQ(r.p1.size(), 2 * ag1p);
  EXPECT_EQ(r.p2.size(), (3 + 2 * 1) * ag2p);
  EXPECT_EQ(r.p2_prime, r.p2);
  EXPECT_EQ(r.p1_prime, std::string(r.p2.size(), '3') + r.p1 + std::string(r.p2.size(), '3'));
  EXPECT_EQ(r.x, 2 * p.e_u());
  EXPECT_EQ(r.y, 2 * r.p2_prime.size() + 2 * p.e_u());
  EXPECT_TRUE(is_gadget_alphabet(r.p1_prime));
  EXPECT_TRUE(is_gadget_alphabet(r.p2_prime));

  // f padding: |A| - 1 all-ones gadgets on each side
  const auto filler = padded_vector_gadget(2, {1, 1}, p);
  EXPECT_EQ(r.p2.substr(0, ag2p), filler);
  EXPECT_EQ(r.p2.substr(r.p2.size() - ag2p), filler);

  const auto predicted = predict_lengths(2, 3, p);
  EXPECT_EQ(predicted.p1, r.p1.size());
  EXPECT_EQ(predicted.p2, r.p2.size());
  EXPECT_EQ(predicted.p1_prime, r.p1_prime.size());
  EXPECT_EQ(predicted.x, r.x);
  EXPECT_EQ(predicted.y, r.y);
}

TEST(BuildSequences, NormalisesLargerA) {
  const auto p = params_desk(1);
  const OvInstance inst{1, {{1}, {1}, {0}}, {{1}}};
  const auto r = build_sequences(inst, p);
  EXPECT_TRUE(r.swapped);
  EXPECT_EQ(r.normalized_instance.a.size(), 1u);
  EXPECT_EQ(r.normalized_instance.b.size(), 3u);
  EXPECT_EQ(r.x, p.e_u());
}

TEST(BuildSequences, DimensionMismatch) {
  EXPECT_THROW(build_sequences({2, {{1, 0}}, {{0, 1}}}, params_desk(1)), std::invalid_argument);
}

TEST(Classify, GapRule) {
  EXPECT_TRUE(classify("PAT", 97, 100, 3).orthogonal);
  EXPECT_TRUE(classify("PAT", 10, 100, 3).orthogonal);
  EXPECT_FALSE(classify("PAT", 100, 100, 3).orthogonal);
  EXPECT_THROW(classify("PAT", 98, 100, 3), TheoremViolation);
  EXPECT_THROW(classify("PAT", 99, 100, 3), TheoremViolation);
  EXPECT_THROW(classify("PAT", 101, 100, 3), TheoremViolation);
}

TEST(Decide, PlantedAndPairFreeDimensionTwo) {
  const auto p = params_desk(2);
  const auto planted = gen_ov(2, 2, 2, true, 0.5, 3);
  const auto pair_free = gen_ov(2, 2, 2, false, 0.7, 4);
  ASSERT_TRUE(solve_ov_bruteforce(planted).found);
  ASSERT_FALSE(solve_ov_bruteforce(pair_free).found);

  EXPECT_TRUE(decide_ov_via_pat(planted, p).orthogonal);
  EXPECT_TRUE(decide_ov_via_edit(planted, p).orthogonal);

  const auto pat = decide_ov_via_pat(pair_free, p);
  EXPECT_FALSE(pat.orthogonal);
  EXPECT_EQ(pat.value, pat.threshold);
  const auto edit = decide_ov_via_edit(pair_free, p);
  EXPECT_FALSE(edit.orthogonal);
  EXPECT_EQ(edit.value, edit.threshold);
}

TEST(Decide, AllOnesHasNoPair) {
  const auto p = params_desk(2);
  const OvInstance inst{2, {{1, 1}}, {{1, 1}}};
  EXPECT_FALSE(decide_ov_via_pat(inst, p).orthogonal);
  EXPECT_FALSE(decide_ov_via_edit(inst, p).orthogonal);
}

TEST(Decide, DpEnginesCrossCheck) {
  const auto p = params_desk(1);
  for (bool planted : {true, false}) {
    const auto inst = gen_ov(2, 2, 1, planted, planted ? 0.5 : 0.7, 21);
    const auto r = build_sequences(inst, p);
    const auto fast_pat = decide_via_pat(r, PatEngine::bitparallel);
    const auto slow_pat = decide_via_pat(r, PatEngine::dp);
    EXPECT_EQ(fast_pat.value, slow_pat.value);
    EXPECT_EQ(fast_pat.orthogonal, planted);
    const auto fast_edit = decide_via_edit(r, Engine::bitparallel);
    const auto slow_edit = decide_via_edit(r, Engine::dp);
    const auto banded_edit = decide_via_edit(r, Engine::banded);
    EXPECT_EQ(fast_edit.value, slow_edit.value);
    EXPECT_EQ(banded_edit.value, slow_edit.value);
    EXPECT_EQ(fast_edit.orthogonal, planted);
    EXPECT_GE(fast_edit.value, 2 * r.p2_prime.size());
  }
}

TEST(Decide, SwapInvariance) {
  const auto p = params_desk(2);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto inst = gen_ov(1 + seed % 2, 2, 2, seed % 2 == 0, seed % 2 ? 0.7 : 0.5, seed);
    const OvInstance swapped{inst.d, inst.b, inst.a};
    EXPECT_EQ(decide_ov_via_edit(inst, p).orthogonal, decide_ov_via_edit(swapped, p).orthogonal);
    EXPECT_EQ(decide_ov_via_pat(inst, p).orthogonal, decide_ov_via_pat(swapped, p).orthogonal);
  }
}

TEST(Decide, RejectsBrokenParams) {
  auto p = params_desk(1);
  p.l2 = 1;
  EXPECT_THROW(decide_ov_via_pat({1, {{1}}, {{1}}}, p), std::invalid_argument);
  EXPECT_THROW(decide_ov_via_edit({1, {{1}}, {{1}}}, p), std::invalid_argument);
}

TEST(PredictLengths, PaperProfileClosedForm) {
  const auto p = params_paper(1);
  const auto len = predict_lengths(2, 2, p);
  const std::uint64_t ag1p = 2 * p.T + 3 * p.l2 + 2 * p.l();
  const std::uint64_t ag2p = 2 * p.T + 2 * p.l2 + p.l();
  EXPECT_EQ(len.p1, 2 * ag1p);
  EXPECT_EQ(len.p2, 4 * ag2p);
  EXPECT_EQ(len.p1_prime, len.p1 + 2 * len.p2);
  EXPECT_EQ(len.y, 2 * len.p2 + 2 * p.e_u());
  EXPECT_THROW(build_sequences({1, {{1}}, {{1}}}, p), std::length_error);
}
