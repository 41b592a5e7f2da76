#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "scramblegraph/annotation.hpp"
#include "scramblegraph/errors.hpp"
#include "scramblegraph/relations.hpp"

namespace sg = scramblegraph;
using sg::testing::triple;

namespace {

sg::MacContigView view(std::string id, std::vector<sg::Interval> mds) { return {std::move(id), std::move(mds)}; }

const sg::RelationConfig kDefault{};

// Random non-adjacent, disjoint MDS layout.
std::vector<sg::Interval> random_layout(std::mt19937_64& rng, int max_mds) {
  std::uniform_int_distribution<int> count(1, max_mds), gap(2, 80), len(1, 120);
  std::vector<sg::Interval> out;
  std::int64_t cursor = std::uniform_int_distribution<int>(1, 200)(rng);
  for (int i = count(rng); i > 0; --i) {
    const std::int64_t end = cursor + len(rng) - 1;
    out.push_back({cursor, end});
    cursor = end + gap(rng);
  }
  return out;
}

std::vector<sg::Interval> shifted(std::vector<sg::Interval> v, std::int64_t by) {
  for (auto& i : v) {
    i.start += by;
    i.end += by;
  }
  return v;
}

}  // namespace

TEST(IesIntervals, Examples) {
  EXPECT_TRUE(sg::ies_intervals({{100, 200}}).empty());
  EXPECT_EQ(sg::ies_intervals({{100, 200}, {400, 500}}), (std::vector<sg::Interval>{{201, 399}}));
  EXPECT_EQ(sg::ies_intervals({{400, 500}, {100, 200}}), (std::vector<sg::Interval>{{201, 399}}));
  EXPECT_EQ(view("g", {{400, 500}, {100, 200}}).ies_intervals(), (std::vector<sg::Interval>{{201, 399}}));
}

TEST(IesIntervals, AdjacencyIsConsistencyError) {
  EXPECT_THROW(sg::ies_intervals({{100, 200}, {201, 300}}), sg::ConsistencyError);
  EXPECT_THROW(view("g", {{100, 200}, {150, 300}}), sg::ConsistencyError);
}

TEST(DetectType1, Examples) {
  EXPECT_TRUE(sg::detect_type1(view("a", {{100, 200}}), view("b", {{181, 260}}), kDefault));
  EXPECT_FALSE(sg::detect_type1(view("a", {{100, 200}}), view("b", {{182, 260}}), kDefault));
  EXPECT_FALSE(sg::detect_type1(view("a", {{100, 200}}), view("b", {{120, 180}}), kDefault));
  EXPECT_FALSE(sg::detect_type1(view("a", {{120, 180}}), view("b", {{100, 200}}), kDefault));
}

TEST(DetectType1, SubMarginContainmentCountsAsOverlap) {
  // Shares 97 bases, left margin only 3: not a Type 2 containment.
  EXPECT_TRUE(sg::detect_type1(view("a", {{103, 199}}), view("b", {{100, 200}}), kDefault));
  EXPECT_FALSE(sg::detect_type2(view("a", {{103, 199}}), view("b", {{100, 200}}), kDefault));
  // Identical 10bp MDSs share too little for Type 1.
  EXPECT_FALSE(sg::detect_type1(view("a", {{1, 10}}), view("b", {{1, 10}}), kDefault));
}

TEST(DetectType2, Examples) {
  const auto m = view("g2", {{100, 200}});
  EXPECT_TRUE(sg::detect_type2(view("g1", {{105, 195}}), m, kDefault));
  EXPECT_FALSE(sg::detect_type2(view("g1", {{104, 195}}), m, kDefault));
  EXPECT_FALSE(sg::detect_type2(view("g1", {{100, 200}}), m, kDefault));
  // Direction: the container does not relate to the contained by Type 2.
  EXPECT_FALSE(sg::detect_type2(m, view("g1", {{105, 195}}), kDefault));
}

TEST(DetectType3, Examples) {
  const auto g1 = view("g1", {{100, 200}, {400, 500}});
  EXPECT_TRUE(sg::detect_type3(g1, view("g2", {{250, 300}}), kDefault));
  EXPECT_TRUE(sg::detect_type3(g1, view("g2", {{196, 300}}), kDefault));
  EXPECT_FALSE(sg::detect_type3(g1, view("g2", {{190, 300}}), kDefault));
  // Before the first or after the last MDS is in no IES.
  EXPECT_FALSE(sg::detect_type3(g1, view("g2", {{10, 50}}), kDefault));
  EXPECT_FALSE(sg::detect_type3(g1, view("g2", {{600, 700}}), kDefault));
  EXPECT_FALSE(sg::detect_type3(view("g1", {{100, 200}}), view("g2", {{250, 300}}), kDefault));
}

TEST(RelationTriple, Examples) {
  EXPECT_EQ(sg::relation_triple(view("a", {{1, 10}}), view("b", {{50, 60}}), kDefault), triple(0, 0, 0));
  const auto v = sg::testing::triad_views();
  EXPECT_EQ(sg::relation_triple(v[0], v[1], kDefault), triple(1, 0, 1));
  EXPECT_EQ(sg::relation_triple(v[1], v[0], kDefault), triple(1, 0, 0));
  EXPECT_EQ(sg::relation_triple(v[0], v[2], kDefault), triple(0, 0, 1));
  EXPECT_EQ(sg::relation_triple(v[1], v[2], kDefault), triple(0, 0, 1));
  EXPECT_EQ(sg::relation_triple(v[2], v[0], kDefault), triple(0, 0, 0));
  EXPECT_EQ(sg::relation_triple(v[2], v[1], kDefault), triple(0, 0, 0));
}

TEST(RelationTriple, CodeRoundTrip) {
  for (int c = 0; c < 8; ++c) EXPECT_EQ(sg::RelationTriple::from_code(c).code(), c);
  EXPECT_EQ(triple(1, 0, 1).code(), 5);
}

TEST(RelationTriple, OrientationIgnored) {
  sg::AnnotationSet s;
  s.records = {{"m", "a", 1, 100, 200, sg::Orientation::kInverted},
               {"m", "a", 2, 400, 500, sg::Orientation::kForward},
               {"m", "b", 1, 250, 300, sg::Orientation::kInverted}};
  const auto loci = sg::views_by_mic(s);
  const auto& views = loci.at("m");
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(sg::relation_triple(views[0], views[1], kDefault), triple(0, 0, 1));
}

TEST(RelationReport, TriadCounts) {
  sg::LocusViews loci{{"ctg", sg::testing::triad_views()}};
  const auto report = sg::relation_report(loci, kDefault);
  EXPECT_EQ(report.rfind("mic_contig\tg1\tg2\tb1\tb2\tb3\tn_type1\tn_type2\tn_type3\n", 0), 0u);
  EXPECT_NE(report.find("ctg\t5027.0\t21621.0\t1\t0\t1\t1\t0\t1\n"), std::string::npos) << report;
}

TEST(RelationProperties, Type1Symmetric) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = view("a", random_layout(rng, 4));
    const auto b = view("b", random_layout(rng, 4));
    EXPECT_EQ(sg::detect_type1(a, b, kDefault), sg::detect_type1(b, a, kDefault));
  }
}

TEST(RelationProperties, OverlapAndContainmentExclusivePerPair) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_layout(rng, 1).front();
    const auto b = random_layout(rng, 1).front();
    const bool t1 = sg::detect_type1(view("a", {a}), view("b", {b}), kDefault);
    const bool t2 = sg::detect_type2(view("a", {a}), view("b", {b}), kDefault);
    EXPECT_FALSE(t1 && t2) << a.start << "-" << a.end << " vs " << b.start << "-" << b.end;
  }
}

TEST(RelationProperties, Type3TranslationInvariant) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> shift(-50, 5000);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_layout(rng, 4);
    const auto b = random_layout(rng, 3);
    const int by = shift(rng);
    EXPECT_EQ(sg::detect_type3(view("a", a), view("b", b), kDefault),
              sg::detect_type3(view("a", shifted(a, by)), view("b", shifted(b, by)), kDefault));
  }
}

TEST(RelationProperties, ThresholdMonotonicity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = view("a", random_layout(rng, 4));
    const auto b = view("b", random_layout(rng, 4));
    for (std::int64_t t = 0; t < 40; t += 3) {
      sg::RelationConfig lo, hi;
      lo.overlap_min_bp = t;
      hi.overlap_min_bp = t + 3;
      lo.interleave_slack_bp = t;
      hi.interleave_slack_bp = t + 3;
      if (!sg::detect_type1(a, b, lo)) {
        EXPECT_FALSE(sg::detect_type1(a, b, hi));
      }
      if (sg::detect_type3(a, b, lo)) {
        EXPECT_TRUE(sg::detect_type3(a, b, hi));
      }
    }
  }
}
