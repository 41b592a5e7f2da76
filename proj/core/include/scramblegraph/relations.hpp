#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scramblegraph/annotation.hpp"

namespace scramblegraph {

// Closed interval of MIC coordinates.
struct Interval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - start + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Shared bases of two intervals (0 when disjoint).
std::int64_t shared_bases(const Interval& a, const Interval& b);

// The MDSs of one MAC contig on one MIC contig, sorted by start, with the
// IESs lying between successive MDSs.
class MacContigView {
 public:
  // Throws ConsistencyError when two MDSs overlap or touch.
  MacContigView(std::string mac_contig_id, std::vector<Interval> mds_intervals);

  const std::string& mac_contig_id() const { return mac_contig_id_; }
  const std::vector<Interval>& mds_intervals() const { return mds_; }
  const std::vector<Interval>& ies_intervals() const { return ies_; }

 private:
  std::string mac_contig_id_;
  std::vector<Interval> mds_;
  std::vector<Interval> ies_;
};

// Gaps between successive MDSs, after sorting by start.
// Throws ConsistencyError on overlapping or adjacent MDSs.
std::vector<Interval> ies_intervals(std::vector<Interval> mds_intervals);

struct RelationConfig {
  std::int64_t overlap_min_bp = 20;
  std::int64_t containment_margin_bp = 5;
  std::int64_t interleave_slack_bp = 5;
};

struct RelationTriple {
  bool overlap = false;      // b1
  bool containment = false;  // b2
  bool interleave = false;   // b3

  bool any() const { return overlap || containment || interleave; }
  // b1*4 + b2*2 + b3, so (1,0,1) -> 5.
  int code() const { return (overlap ? 4 : 0) | (containment ? 2 : 0) | (interleave ? 1 : 0); }
  static RelationTriple from_code(int code) {
    return {(code & 4) != 0, (code & 2) != 0, (code & 1) != 0};
  }

  friend auto operator<=>(const RelationTriple&, const RelationTriple&) = default;
};

// m2 lies inside m1 with at least `margin` unshared bases at both ends.
bool strictly_contains(const Interval& outer, const Interval& inner, std::int64_t margin);

// Type 1: some MDS pair shares >= overlap_min_bp bases and neither MDS is
// contained in the other (containment with margins is Type 2's concern).
bool detect_type1(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg);
// Type 2: some MDS of g1 lies inside an MDS of g2 with margins on both ends.
bool detect_type2(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg);
// Type 3: some IES of g1 holds an MDS of g2, allowing the MDS to reach
// interleave_slack_bp bases into the flanking MDSs.
bool detect_type3(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg);

RelationTriple relation_triple(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg);

// Number of witnessing MDS pairs (Type 1, 2) or (IES, MDS) pairs (Type 3).
struct RelationCounts {
  std::int64_t type1 = 0;
  std::int64_t type2 = 0;
  std::int64_t type3 = 0;
};
RelationCounts relation_counts(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg);

// Views grouped per MIC contig, both levels sorted by id.
using LocusViews = std::map<std::string, std::vector<MacContigView>>;
LocusViews views_by_mic(const AnnotationSet& set);

// TSV: mic_contig g1 g2 b1 b2 b3 n_type1 n_type2 n_type3, one row per ordered
// pair with a nonzero triple.
std::string relation_report(const LocusViews& loci, const RelationConfig& cfg);

}  // namespace scramblegraph
