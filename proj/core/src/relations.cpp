#include "scramblegraph/relations.hpp"

#include <algorithm>
#include <sstream>

#include "scramblegraph/errors.hpp"

namespace scramblegraph {

std::int64_t shared_bases(const Interval& a, const Interval& b) {
  return std::max<std::int64_t>(0, std::min(a.end, b.end) - std::max(a.start, b.start) + 1);
}

bool strictly_contains(const Interval& outer, const Interval& inner, std::int64_t margin) {
  return outer.start <= inner.start - margin && outer.end >= inner.end + margin;
}

std::vector<Interval> ies_intervals(std::vector<Interval> mds) {
  std::sort(mds.begin(), mds.end());
  std::vector<Interval> ies;
  for (std::size_t i = 1; i < mds.size(); ++i) {
    if (mds[i].start <= mds[i - 1].end + 1) {
      throw ConsistencyError("MDS intervals [" + std::to_string(mds[i - 1].start) + "," +
                             std::to_string(mds[i - 1].end) + "] and [" + std::to_string(mds[i].start) +
                             "," + std::to_string(mds[i].end) + "] overlap or are adjacent");
    }
    ies.push_back({mds[i - 1].end + 1, mds[i].start - 1});
  }
  return ies;
}

MacContigView::MacContigView(std::string mac_contig_id, std::vector<Interval> mds_intervals)
    : mac_contig_id_(std::move(mac_contig_id)), mds_(std::move(mds_intervals)) {
  std::sort(mds_.begin(), mds_.end());
  try {
    ies_ = scramblegraph::ies_intervals(mds_);
  } catch (const ConsistencyError& e) {
    throw ConsistencyError("MAC contig " + mac_contig_id_ + ": " + e.what());
  }
}

namespace {

bool type1_pair(const Interval& a, const Interval& b, const RelationConfig& cfg) {
  return shared_bases(a, b) >= cfg.overlap_min_bp &&
         !strictly_contains(a, b, cfg.containment_margin_bp) &&
         !strictly_contains(b, a, cfg.containment_margin_bp);
}

bool type3_pair(const Interval& ies, const Interval& mds, const RelationConfig& cfg) {
  return mds.start >= ies.start - cfg.interleave_slack_bp && mds.end <= ies.end + cfg.interleave_slack_bp;
}

}  // namespace

bool detect_type1(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg) {
  for (const auto& a : g1.mds_intervals()) {
    for (const auto& b : g2.mds_intervals()) {
      if (type1_pair(a, b, cfg)) return true;
    }
  }
  return false;
}

bool detect_type2(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg) {
  for (const auto& inner : g1.mds_intervals()) {
    for (const auto& outer : g2.mds_intervals()) {
      if (strictly_contains(outer, inner, cfg.containment_margin_bp)) return true;
    }
  }
  return false;
}

bool detect_type3(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg) {
  for (const auto& ies : g1.ies_intervals()) {
    for (const auto& mds : g2.mds_intervals()) {
      if (type3_pair(ies, mds, cfg)) return true;
    }
  }
  return false;
}

RelationTriple relation_triple(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg) {
  return {detect_type1(g1, g2, cfg), detect_type2(g1, g2, cfg), detect_type3(g1, g2, cfg)};
}

RelationCounts relation_counts(const MacContigView& g1, const MacContigView& g2, const RelationConfig& cfg) {
  RelationCounts counts;
  for (const auto& a : g1.mds_intervals()) {
    for (const auto& b : g2.mds_intervals()) {
      counts.type1 += type1_pair(a, b, cfg);
      counts.type2 += strictly_contains(b, a, cfg.containment_margin_bp);
    }
  }
  for (const auto& ies : g1.ies_intervals()) {
    for (const auto& mds : g2.mds_intervals()) counts.type3 += type3_pair(ies, mds, cfg);
  }
  return counts;
}

LocusViews views_by_mic(const AnnotationSet& set) {
  std::map<std::string, std::map<std::string, std::vector<Interval>>> grouped;
  for (const auto& r : set.records) {
    grouped[r.mic_contig_id][r.mac_contig_id].push_back({r.mic_start, r.mic_end});
  }
  LocusViews loci;
  for (auto& [mic, macs] : grouped) {
    auto& views = loci[mic];
    for (auto& [mac, intervals] : macs) views.emplace_back(mac, std::move(intervals));
  }
  return loci;
}

std::string relation_report(const LocusViews& loci, const RelationConfig& cfg) {
  std::ostringstream out;
  out << "mic_contig\tg1\tg2\tb1\tb2\tb3\tn_type1\tn_type2\tn_type3\n";
  for (const auto& [mic, views] : loci) {
    for (const auto& g1 : views) {
      for (const auto& g2 : views) {
        if (&g1 == &g2) continue;
        const auto t = relation_triple(g1, g2, cfg);
        if (!t.any()) continue;
        const auto c = relation_counts(g1, g2, cfg);
        out << mic << '\t' << g1.mac_contig_id() << '\t' << g2.mac_contig_id() << '\t' << t.overlap << '\t'
            << t.containment << '\t' << t.interleave << '\t' << c.type1 << '\t' << c.type2 << '\t' << c.type3
            << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace scramblegraph
