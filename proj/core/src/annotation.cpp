#include "scramblegraph/annotation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "scramblegraph/errors.hpp"

namespace scramblegraph {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

class LineParser {
 public:
  LineParser(const std::string& provenance, std::size_t line)
      : provenance_(provenance), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(provenance_, line_, what);
  }

  std::int64_t coordinate(std::string_view field, const char* name) const {
    std::int64_t v = 0;
    if (!parse_int(field, v)) fail(std::string("non-numeric ") + name + " '" + std::string(field) + "'");
    return v;
  }

  Orientation strand(std::string_view field, bool lenient) const {
    field = trim(field);
    if (field == "+") return Orientation::kForward;
    if (field == "-") return Orientation::kInverted;
    if (lenient && (field == "." || field == "?")) return Orientation::kForward;
    fail("invalid strand '" + std::string(field) + "'");
  }

  void check_record(const MdsRecord& r) const {
    if (r.mic_contig_id.empty()) fail("empty MIC contig id");
    if (r.mac_contig_id.empty()) fail("empty MAC contig id");
    if (r.mic_end < r.mic_start) {
      fail("end " + std::to_string(r.mic_end) + " < start " + std::to_string(r.mic_start));
    }
    if (r.mds_index < 1) fail("MDS index " + std::to_string(r.mds_index) + " < 1");
  }

 private:
  const std::string& provenance_;
  std::size_t line_;
};

MdsRecord parse_native(std::string_view line, const LineParser& p) {
  const auto cols = split(line, '\t');
  if (cols.size() != 6) {
    p.fail("expected 6 tab-separated columns, found " + std::to_string(cols.size()));
  }
  if (trim(cols[1]) != "MDS") p.fail("feature type must be 'MDS', found '" + std::string(cols[1]) + "'");

  MdsRecord r;
  r.mic_contig_id = std::string(trim(cols[0]));
  r.mic_start = p.coordinate(cols[2], "start");
  r.mic_end = p.coordinate(cols[3], "end");
  r.orientation = p.strand(cols[4], false);

  bool have_mac = false;
  bool have_idx = false;
  for (auto attr : split(trim(cols[5]), ';')) {
    attr = trim(attr);
    if (attr.empty()) continue;
    const auto eq = attr.find('=');
    if (eq == std::string_view::npos) p.fail("attribute without '=': '" + std::string(attr) + "'");
    const auto key = trim(attr.substr(0, eq));
    const auto value = trim(attr.substr(eq + 1));
    if (key == "mac") {
      r.mac_contig_id = std::string(value);
      have_mac = true;
    } else if (key == "idx") {
      if (!parse_int(value, r.mds_index)) p.fail("non-numeric idx '" + std::string(value) + "'");
      have_idx = true;
    }
  }
  if (!have_mac) p.fail("missing 'mac' attribute");
  if (!have_idx) p.fail("missing 'idx' attribute");
  return r;
}

MdsRecord parse_gff3(std::string_view line, const LineParser& p) {
  const auto cols = split(line, '\t');
  if (cols.size() != 9) {
    p.fail("expected 9 tab-separated GFF3 columns, found " + std::to_string(cols.size()));
  }
  MdsRecord r;
  r.mic_contig_id = std::string(trim(cols[0]));
  r.mic_start = p.coordinate(cols[3], "start");
  r.mic_end = p.coordinate(cols[4], "end");
  r.orientation = p.strand(cols[6], true);

  std::string_view id;
  for (auto attr : split(trim(cols[8]), ';')) {
    attr = trim(attr);
    const auto eq = attr.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = trim(attr.substr(0, eq));
    const auto value = trim(attr.substr(eq + 1));
    if (key == "Parent") r.mac_contig_id = std::string(value);
    if (key == "ID") id = value;
  }
  if (r.mac_contig_id.empty()) p.fail("missing Parent attribute");
  if (id.empty()) p.fail("missing ID attribute");
  std::size_t digits = id.size();
  while (digits > 0 && id[digits - 1] >= '0' && id[digits - 1] <= '9') --digits;
  if (digits == id.size()) p.fail("ID '" + std::string(id) + "' has no numeric index suffix");
  if (!parse_int(id.substr(digits), r.mds_index)) p.fail("index suffix out of range in ID");
  return r;
}

using GroupKey = std::pair<std::string, std::string>;

std::map<GroupKey, std::vector<MdsRecord>> group_by_contigs(const std::vector<MdsRecord>& records) {
  std::map<GroupKey, std::vector<MdsRecord>> groups;
  for (const auto& r : records) groups[{r.mic_contig_id, r.mac_contig_id}].push_back(r);
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(),
              [](const MdsRecord& a, const MdsRecord& b) { return a.mds_index < b.mds_index; });
  }
  return groups;
}

// Number of bases strictly between two intervals; negative when they overlap.
std::int64_t gap_between(const MdsRecord& a, const MdsRecord& b) {
  return std::max(a.mic_start, b.mic_start) - std::min(a.mic_end, b.mic_end) - 1;
}

std::string interval_text(const MdsRecord& r) {
  return "[" + std::to_string(r.mic_start) + "," + std::to_string(r.mic_end) + "]";
}

// First pair of MDSs (index-sorted group) that are not neighbours in the
// MAC contig yet touch in the MIC contig.
std::optional<std::pair<MdsRecord, MdsRecord>> find_distant_conflict(const std::vector<MdsRecord>& group,
                                                                     std::int64_t merge_gap_max) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      if (group[j].mds_index - group[i].mds_index < 2) continue;
      if (gap_between(group[i], group[j]) <= merge_gap_max) return std::pair{group[i], group[j]};
    }
  }
  return std::nullopt;
}

}  // namespace

void sort_records(std::vector<MdsRecord>& records) {
  std::sort(records.begin(), records.end(), [](const MdsRecord& a, const MdsRecord& b) {
    return std::tie(a.mic_contig_id, a.mac_contig_id, a.mds_index, a.mic_start) <
           std::tie(b.mic_contig_id, b.mac_contig_id, b.mds_index, b.mic_start);
  });
}

AnnotationSet parse_annotation(std::istream& in, const IngestConfig& config, std::string provenance) {
  AnnotationSet set;
  set.provenance = std::move(provenance);
  std::set<std::tuple<std::string, std::string, std::int64_t>> seen;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || trim(line).empty()) continue;

    const LineParser p(set.provenance, line_no);
    MdsRecord r = config.format == AnnotationFormat::kGff3 ? parse_gff3(line, p) : parse_native(line, p);
    p.check_record(r);
    if (!seen.emplace(r.mic_contig_id, r.mac_contig_id, r.mds_index).second) {
      throw DuplicateRecordError(set.provenance, line_no,
                                 "duplicate record (" + r.mic_contig_id + ", " + r.mac_contig_id +
                                     ", " + std::to_string(r.mds_index) + ")");
    }
    set.records.push_back(std::move(r));
  }
  return set;
}

AnnotationSet parse_annotation(std::string_view text, const IngestConfig& config, std::string provenance) {
  std::istringstream in{std::string(text)};
  return parse_annotation(in, config, std::move(provenance));
}

std::string serialize_annotation(const AnnotationSet& set) {
  std::ostringstream out;
  out << "# mic_contig\ttype\tstart\tend\tstrand\tattributes\n";
  for (const auto& r : set.records) {
    out << r.mic_contig_id << "\tMDS\t" << r.mic_start << '\t' << r.mic_end << '\t'
        << (r.orientation == Orientation::kForward ? '+' : '-') << "\tmac=" << r.mac_contig_id
        << ";idx=" << r.mds_index << '\n';
  }
  return out.str();
}

AnnotationSet merge_consecutive_mds(const AnnotationSet& set, const IngestConfig& config) {
  AnnotationSet out;
  out.provenance = set.provenance;
  out.preprocessing_log = set.preprocessing_log;

  for (auto& [key, group] : group_by_contigs(set.records)) {
    // A merged union can reach the MDS before it, so sweep until stable.
    std::vector<MdsRecord> merged = std::move(group);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<MdsRecord> next;
      for (const auto& r : merged) {
        if (!next.empty() && gap_between(next.back(), r) <= config.merge_gap_max) {
          MdsRecord& prev = next.back();
          std::string entry = "merge " + key.first + " " + key.second + ": idx " +
                              std::to_string(prev.mds_index) + " " + interval_text(prev) + " + idx " +
                              std::to_string(r.mds_index) + " " + interval_text(r);
          prev.mic_start = std::min(prev.mic_start, r.mic_start);
          prev.mic_end = std::max(prev.mic_end, r.mic_end);
          entry += " -> " + interval_text(prev);
          if (prev.orientation != r.orientation) entry += " (orientation conflict, kept lower index)";
          out.preprocessing_log.push_back(std::move(entry));
          changed = true;
          continue;
        }
        next.push_back(r);
      }
      merged = std::move(next);
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
      const auto renumbered = static_cast<std::int64_t>(i + 1);
      if (merged[i].mds_index != renumbered) {
        out.preprocessing_log.push_back("renumber " + key.first + " " + key.second + ": idx " +
                                        std::to_string(merged[i].mds_index) + " -> " +
                                        std::to_string(renumbered));
        merged[i].mds_index = renumbered;
      }
      out.records.push_back(std::move(merged[i]));
    }
  }
  return out;
}

AnnotationSet exclude_distant_overlap_contigs(const AnnotationSet& set, std::int64_t merge_gap_max) {
  AnnotationSet out;
  out.provenance = set.provenance;
  out.preprocessing_log = set.preprocessing_log;

  std::set<GroupKey> excluded;
  for (const auto& [key, group] : group_by_contigs(set.records)) {
    const auto conflict = find_distant_conflict(group, merge_gap_max);
    if (!conflict) continue;
    const auto& [a, b] = *conflict;
    excluded.insert(key);
    out.preprocessing_log.push_back(
        "exclude " + key.first + " " + key.second + ": " +
        (gap_between(a, b) < 0 ? "distant-overlap" : "distant-adjacent") + " idx " +
        std::to_string(a.mds_index) + " " + interval_text(a) + " / idx " + std::to_string(b.mds_index) +
        " " + interval_text(b));
  }
  for (const auto& r : set.records) {
    if (!excluded.contains({r.mic_contig_id, r.mac_contig_id})) out.records.push_back(r);
  }
  return out;
}

AnnotationSet preprocess(const AnnotationSet& set, const IngestConfig& config) {
  AnnotationSet out = merge_consecutive_mds(set, config);
  if (config.exclude_distant_overlap) out = exclude_distant_overlap_contigs(out, config.merge_gap_max);
  sort_records(out.records);
  return out;
}

}  // namespace scramblegraph
