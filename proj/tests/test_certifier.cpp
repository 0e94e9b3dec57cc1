#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "loccert/certifier.hpp"
#include "loccert/families.hpp"
#include "support/test_support.hpp"

using namespace loccert;

namespace {

// One-based pairs as written in the worked example.
std::vector<IndexPair> one_based(std::vector<IndexPair> pairs) {
  for (auto& [i, j] : pairs) {
    --i;
    --j;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<IndexPair> sorted(std::vector<IndexPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(ComputeJ, TwoQubitDemoPartyTwo) {
  const auto s = families::two_qubit_demo();
  EXPECT_EQ(sorted(compute_J(s, 1)), one_based({{1, 2}, {2, 1}, {3, 4}, {4, 3}}));
}

TEST(ComputeJ, TwoQubitDemoPartyOne) {
  const auto s = families::two_qubit_demo();
  EXPECT_EQ(sorted(compute_J(s, 0)),
            one_based({{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}));
}

TEST(ComputeJ, SingleStateIsEmpty) {
  const auto s = StateSet::from_products({2, 2}, {{basis_ket(2, 0), basis_ket(2, 1)}});
  EXPECT_TRUE(compute_J(s, 0).empty());
  EXPECT_TRUE(compute_J(s, 1).empty());
}

TEST(ComputeJ, IsSymmetric) {
  const auto s = families::gentiles1(6);
  for (std::size_t a = 0; a < 2; ++a) {
    const auto pairs = compute_J(s, a);
    for (const auto& [i, j] : pairs) {
      EXPECT_NE(std::find(pairs.begin(), pairs.end(), IndexPair{j, i}), pairs.end());
    }
  }
}

TEST(ComputeJ, RotatedDominoContainsProofPairs) {
  const auto s = families::rotated_dominoes({0.3, 0.5, 0.7, 0.2});
  const auto pairs = compute_J(s, 0);
  for (const auto& p : one_based({{3, 9}, {5, 7}, {3, 7}, {4, 5}, {8, 9}})) {
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), p), pairs.end());
  }
}

TEST(ComputeJ, InvalidArgumentsThrow) {
  const auto s = families::tiles();
  EXPECT_THROW((void)compute_J(s, 2), std::invalid_argument);
  EXPECT_THROW((void)compute_J(s, 0, 0.0), std::invalid_argument);
  EXPECT_THROW((void)compute_J(families::bell_states(), 0), std::invalid_argument);
}

TEST(DyadSpanRank, TwoQubitDemoWorkedNumbers) {
  const auto s = families::two_qubit_demo();
  EXPECT_EQ(dyad_span_rank(s, 1, compute_J(s, 1)), 3u);
  EXPECT_EQ(dyad_span_rank(s, 0, compute_J(s, 0)), 2u);
}

TEST(DyadSpanRank, HalderFullEveryParty) {
  const auto s = families::halder(families::HalderVariant::full);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(dyad_span_rank(s, a, compute_J(s, a)), 8u);
}

TEST(DyadSpanRank, InvalidPairThrows) {
  const auto s = families::tiles();
  const std::vector<IndexPair> pairs{{0, 7}};
  EXPECT_THROW((void)dyad_span_rank(s, 0, pairs), std::invalid_argument);
}

TEST(DyadSpanRank, SubsetMonotonicity) {
  const auto s = families::gentiles1(6);
  const auto pairs = compute_J(s, 0);
  const std::size_t full = dyad_span_rank(s, 0, pairs);
  for (std::size_t k = 0; k <= pairs.size(); k += 7) {
    std::span<const IndexPair> sub(pairs.data(), k);
    EXPECT_LE(dyad_span_rank(s, 0, sub), full);
  }
}

TEST(Certify, RotatedDominoes) {
  const auto cert = certify(families::rotated_dominoes({0.2, 0.4, 0.6, 0.7}));
  EXPECT_EQ(cert.verdict, Verdict::certified_indiscriminable);
  for (const auto& rec : cert.parties) {
    EXPECT_EQ(rec.span_rank, 8u);
    EXPECT_EQ(rec.required, 8u);
    EXPECT_TRUE(rec.saturated);
  }
}

TEST(Certify, Tiles) {
  const auto cert = certify(families::tiles());
  EXPECT_EQ(cert.verdict, Verdict::certified_indiscriminable);
}

TEST(Certify, TwoQubitDemoIsInconclusive) {
  const auto cert = certify(families::two_qubit_demo());
  EXPECT_EQ(cert.verdict, Verdict::inconclusive);
  EXPECT_EQ(cert.parties[0].span_rank, 2u);
  EXPECT_FALSE(cert.parties[0].saturated);
  EXPECT_EQ(cert.parties[1].span_rank, 3u);
  EXPECT_TRUE(cert.parties[1].saturated);
}

TEST(Certify, VerdictStrings) {
  EXPECT_EQ(to_string(Verdict::certified_indiscriminable), "CERTIFIED_INDISCRIMINABLE");
  EXPECT_EQ(to_string(Verdict::inconclusive), "INCONCLUSIVE");
  EXPECT_EQ(to_string(StrongVerdict::certified), "CERTIFIED");
  EXPECT_EQ(to_string(StrongVerdict::not_certified), "NOT_CERTIFIED");
}

TEST(CertifyCut, HalderFullBlockBC) {
  const auto cert = certify_cut(families::halder(families::HalderVariant::full), PartyCut::parse("0|1,2"));
  ASSERT_EQ(cert.parties.size(), 2u);
  EXPECT_EQ(cert.parties[1].dim, 9u);
  EXPECT_EQ(cert.parties[1].required, 80u);
  EXPECT_EQ(cert.parties[1].span_rank, 80u);
  EXPECT_EQ(cert.parties[1].members, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(cert.verdict, Verdict::certified_indiscriminable);
  ASSERT_TRUE(cert.cut.has_value());
  EXPECT_EQ(cert.cut->to_string(), "0|1,2");
}

TEST(CertifyCut, Reduced12HasAnInconclusiveCut) {
  const auto s = families::halder(families::HalderVariant::reduced12);
  bool any_inconclusive = false;
  for (const auto& cut : all_bipartitions(3)) {
    any_inconclusive |= certify_cut(s, cut).verdict == Verdict::inconclusive;
  }
  EXPECT_TRUE(any_inconclusive);
}

TEST(CertifyCut, OmitDiag24AllCutsCertified) {
  const auto s = families::halder(families::HalderVariant::omit_diag24);
  for (const auto& cut : all_bipartitions(3)) {
    EXPECT_EQ(certify_cut(s, cut).verdict, Verdict::certified_indiscriminable) << cut.to_string();
  }
}

TEST(CertifyCut, SingleBlockThrows) {
  EXPECT_THROW((void)certify_cut(families::tiles(), PartyCut::parse("0,1")), std::invalid_argument);
}

TEST(StrongNlwe, HalderVariants) {
  EXPECT_EQ(strong_nlwe(families::halder(families::HalderVariant::full)).verdict,
            StrongVerdict::certified);
  EXPECT_EQ(strong_nlwe(families::halder(families::HalderVariant::reduced12)).verdict,
            StrongVerdict::not_certified);
  EXPECT_EQ(strong_nlwe(families::halder(families::HalderVariant::omit_diag24)).verdict,
            StrongVerdict::certified);
}

TEST(StrongNlwe, ReportCoversEveryBipartition) {
  const auto r = strong_nlwe(families::halder(families::HalderVariant::full));
  EXPECT_EQ(r.cuts.size(), 3u);
  EXPECT_EQ(r.per_party.parties.size(), 3u);
}

TEST(StrongNlwe, TwoPartySetThrows) {
  EXPECT_THROW((void)strong_nlwe(families::tiles()), std::invalid_argument);
}

TEST(MinStatesBound, HandValues) {
  const std::vector<std::size_t> a{3, 3}, b{2, 2}, c{3, 3, 3};
  EXPECT_EQ(min_states_bound(a), 5u);
  EXPECT_EQ(min_states_bound(b), 3u);
  EXPECT_EQ(min_states_bound(c), 6u);
}

TEST(MinStatesBound, MatchesClosedForm) {
  for (std::size_t d1 = 2; d1 < 9; ++d1) {
    for (std::size_t d2 = 2; d2 < 9; ++d2) {
      const std::vector<std::size_t> dims{d1, d2};
      const double t = static_cast<double>(d1 * d1 - 1 + d2 * d2 - 1);
      // Exact-square cases land on integers; nudge to stay clear of rounding.
      const auto expected = static_cast<std::size_t>(std::ceil(0.5 + std::sqrt(t + 0.25) - 1e-12));
      EXPECT_EQ(min_states_bound(dims), expected) << d1 << "x" << d2;
    }
  }
}

TEST(MinStatesBound, RejectsTrivialParty) {
  const std::vector<std::size_t> dims{1, 3};
  EXPECT_THROW((void)min_states_bound(dims), std::invalid_argument);
}

TEST(GenTiles1Witness, RankIsFull) {
  for (std::size_t n : {4, 6, 8}) {
    const auto dyads = gentiles1_witness_dyads(n);
    EXPECT_EQ(dyads.size(), n * n - 1);
    EXPECT_EQ(numerical_rank(std::span<const Dyad>(dyads)), n * n - 1) << n;
    for (const auto& d : dyads) EXPECT_NEAR(std::abs(d.trace()), 0.0, 1e-12);
  }
}

TEST(GenTiles1Witness, CertifyCertifies) {
  for (std::size_t n : {4, 6, 8}) {
    EXPECT_EQ(certify(families::gentiles1(n)).verdict, Verdict::certified_indiscriminable) << n;
  }
}

TEST(GenTiles1Witness, InvalidSizeThrows) {
  EXPECT_THROW((void)gentiles1_witness_dyads(5), std::invalid_argument);
}

}  // namespace
