#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "sethlab/desk_profile.hpp"
#include "sethlab/gadget_checks.hpp"

using namespace sethlab;

TEST(DeskProfile, DimensionOne) {
  const auto p = params_desk(1);
  EXPECT_EQ(p.profile_name, "desk");
  EXPECT_GT(p.l2, 4 * p.l());
  EXPECT_GE(p.l1, 3 * (p.d * p.l0 + p.d));
  EXPECT_EQ(p.l1 % 2, 0u);
  EXPECT_TRUE(check_params(p).ok());
  EXPECT_EQ(p.T, p.e_u() + 1);
}

TEST(DeskProfile, DimensionTwoPassesAllSixteenPairs) {
  const auto p = params_desk(2);
  EXPECT_TRUE(check_params(p).ok());
  const auto report = verify_vector_lemmas(p, LemmaMode::all_pairs(), CheckEngine::dp);
  EXPECT_EQ(report.size(), 16u);
  EXPECT_TRUE(report.ok()) << report.to_text();
}

TEST(DeskProfile, CandidateShape) {
  // d = 1, l0 = 4: constraints (ii)-(iv) need l1 >= 19 -> 20, doubled.
  const auto p = desk_candidate(1, 4);
  EXPECT_EQ(p.l1, 40u);
  EXPECT_EQ(p.l2, 4 * p.l() + p.l1);
  EXPECT_EQ(desk_candidate(3, 4).l1, 112u);
}

TEST(DeskProfile, SmallestCandidateAccepted) {
  for (std::uint64_t d = 1; d <= 3; ++d) EXPECT_EQ(params_desk(d), desk_candidate(d, 4)) << "d=" << d;
}

TEST(DeskProfile, RejectsOutOfRange) {
  EXPECT_THROW(params_desk(0), std::invalid_argument);
  EXPECT_THROW(params_desk(9), std::invalid_argument);
}

TEST(DeskProfile, CachedAndThreadSafe) {
  const auto first = params_desk(2);
  std::vector<GadgetParams> seen(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&, i] { seen[i] = params_desk(2); });
  }
  for (const auto& p : seen) EXPECT_EQ(p, first);
}

TEST(DeskProfile, FitsSequenceBudget) {
  // |P1'| + |P2'| for N = 4 stays under 10^7 symbols for every supported d.
  for (std::uint64_t d = 1; d <= desk_max_dimension; ++d) {
    const auto p = desk_candidate(d, 4);
    const std::uint64_t ag1p = 2 * p.T + p.ag1_length();
    const std::uint64_t ag2p = 2 * p.T + p.ag2_length();
    const std::uint64_t p2 = (4 + 2 * 3) * ag2p;
    const std::uint64_t p1_prime = 4 * ag1p + 2 * p2;
    EXPECT_LT(p1_prime + p2, 10'000'000u) << "d=" << d;
  }
}
