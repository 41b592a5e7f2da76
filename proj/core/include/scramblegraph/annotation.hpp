#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace scramblegraph {

enum class Orientation { kForward, kInverted };

// One MDS segment of a MAC contig, located on a MIC contig.
// Coordinates are 1-based and inclusive.
struct MdsRecord {
  std::string mic_contig_id;
  std::string mac_contig_id;
  std::int64_t mds_index = 1;
  std::int64_t mic_start = 1;
  std::int64_t mic_end = 1;
  Orientation orientation = Orientation::kForward;

  friend bool operator==(const MdsRecord&, const MdsRecord&) = default;
};

struct AnnotationSet {
  std::vector<MdsRecord> records;
  std::string provenance;
  std::vector<std::string> preprocessing_log;

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

enum class AnnotationFormat { kNative, kGff3 };

struct IngestConfig {
  std::int64_t merge_gap_max = 0;
  bool exclude_distant_overlap = true;
  AnnotationFormat format = AnnotationFormat::kNative;
};

// Reads tab-separated MDS records. Native columns:
//   mic_contig  "MDS"  start  end  strand  mac=<id>;idx=<n>
// With AnnotationFormat::kGff3, standard 9-column GFF3 is read instead:
// seqid, start, end, strand and attributes (Parent = MAC id, trailing
// digits of ID = MDS index).
// Throws ParseError / DuplicateRecordError naming the offending line.
AnnotationSet parse_annotation(std::istream& in, const IngestConfig& config,
                               std::string provenance = "<input>");
AnnotationSet parse_annotation(std::string_view text, const IngestConfig& config,
                               std::string provenance = "<input>");

// Native-format serialization; records are written in their current order.
std::string serialize_annotation(const AnnotationSet& set);

// Per (MIC, MAC) group, MDSs that are neighbours in index order and whose
// MIC intervals overlap or lie at most merge_gap_max bp apart collapse into
// one record spanning the union. The group is then renumbered 1..k.
AnnotationSet merge_consecutive_mds(const AnnotationSet& set, const IngestConfig& config);

// Drops every MAC contig (on a given MIC contig) having two MDSs with index
// difference >= 2 whose MIC intervals overlap, or come within
// merge_gap_max bp of each other.
AnnotationSet exclude_distant_overlap_contigs(const AnnotationSet& set,
                                              std::int64_t merge_gap_max = 0);

// merge_consecutive_mds followed, when enabled, by the exclusion step.
// Output records are sorted by (mic, mac, index).
AnnotationSet preprocess(const AnnotationSet& set, const IngestConfig& config);

void sort_records(std::vector<MdsRecord>& records);

}  // namespace scramblegraph
