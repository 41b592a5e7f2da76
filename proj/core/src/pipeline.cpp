#include "scramblegraph/pipeline.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scramblegraph/errors.hpp"
#include "scramblegraph/format.hpp"
#include "scramblegraph/graph.hpp"
#include "scramblegraph/mds.hpp"
#include "scramblegraph/persistence.hpp"

namespace scramblegraph {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kAnnotation = "annotation.tsv";
constexpr const char* kGraphs = "graphs.json";
constexpr const char* kPoints = "points.json";
constexpr const char* kManifest = "manifest.json";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string eps_label(double eps) { return format_real(eps); }

PointCloud load_cloud(const ArtifactStore& store) {
  auto cloud = point_cloud_from_json(store.read(kPoints));
  if (cloud.points.empty()) throw InputError("point cloud in " + (store.root() / kPoints).string() + " is empty");
  return cloud;
}

void stage_ingest(const PipelineConfig& config, ArtifactStore& store) {
  std::ifstream in(config.input, std::ios::binary);
  if (!in) throw InputError("cannot read input file " + config.input.string());
  const auto parsed = parse_annotation(in, config.ingest, config.input.filename().string());
  const auto processed = preprocess(parsed, config.ingest);

  store.write(kAnnotation, serialize_annotation(processed));
  std::ostringstream log;
  log << "records_in\t" << parsed.records.size() << "\nrecords_out\t" << processed.records.size() << '\n';
  for (const auto& entry : processed.preprocessing_log) log << entry << '\n';
  store.write("preprocess_log.txt", log.str());
}

AnnotationSet load_annotation(const ArtifactStore& store) {
  IngestConfig native;
  return parse_annotation(store.read(kAnnotation), native, kAnnotation);
}

void stage_relations(const PipelineConfig& config, ArtifactStore& store) {
  const auto loci = views_by_mic(load_annotation(store));
  store.write("relations.tsv", relation_report(loci, config.relations));
}

void stage_graphs(const PipelineConfig& config, ArtifactStore& store) {
  const auto loci = views_by_mic(load_annotation(store));
  std::vector<SegmentGraph> graphs;
  for (const auto& [mic, views] : loci) graphs.push_back(build_graph(mic, views, config.relations));
  store.write(kGraphs, graphs_to_json(graphs));

  std::set<std::string> used_names;
  std::set<CanonicalCode> graph_classes;
  std::set<CanonicalCode> component_classes;
  std::int64_t empty = 0, max_v = 0, max_e = 0, max_cn = 0, max_val = 0, max_out = 0, max_in = 0;
  bool all_exact = true;
  for (const auto& g : graphs) {
    const auto name = safe_file_name(g.mic_contig_id());
    if (!used_names.insert(name).second) {
      throw InputError("MIC contig ids collide after file-name sanitising: " + name);
    }
    if (config.exports.dot) store.write("graphs/" + name + ".dot", export_dot(g));
    if (config.exports.json) store.write("graphs/" + name + ".json", graph_to_json(g));
    if (g.vertex_count() == 0) {
      ++empty;
      continue;
    }
    const auto code = canonical_code(g);
    all_exact = all_exact && code.exact;
    graph_classes.insert(code);
    for (const auto& c : connected_components(g)) {
      const auto cc = canonical_code(c);
      all_exact = all_exact && cc.exact;
      component_classes.insert(cc);
    }
    const auto gl = global_vector(g, config.clique_cap);
    max_v = std::max(max_v, gl.n_vertices);
    max_e = std::max(max_e, gl.n_edges);
    max_cn = std::max(max_cn, gl.max_clique);
    std::map<std::string, std::int64_t> out_deg, in_deg;
    for (const auto& e : g.edges()) {
      ++out_deg[e.src];
      ++in_deg[e.dst];
    }
    for (const auto& s : vertex_stats(g, config.clique_cap)) max_val = std::max(max_val, s.valency);
    for (const auto& [v, k] : out_deg) max_out = std::max(max_out, k);
    for (const auto& [v, k] : in_deg) max_in = std::max(max_in, k);
  }
  const json summary{{"mic_contigs", graphs.size()},
                     {"graphs_with_edges", graphs.size() - static_cast<std::size_t>(empty)},
                     {"graphs_without_edges", empty},
                     {"isomorphism_classes", graph_classes.size()},
                     {"component_isomorphism_classes", component_classes.size()},
                     {"isomorphism_counts_exact", all_exact},
                     {"max_vertices", max_v},
                     {"max_edges", max_e},
                     {"max_clique", max_cn},
                     {"max_valency", max_val},
                     {"max_out_valency", max_out},
                     {"max_in_valency", max_in}};
  store.write("graph_summary.json", summary.dump(2) + "\n");
}

void stage_vectors(const PipelineConfig& config, ArtifactStore& store) {
  std::vector<SegmentGraph> graphs;
  for (auto& g : graphs_from_json(store.read(kGraphs))) {
    if (g.vertex_count() > 0) graphs.push_back(std::move(g));
  }
  if (graphs.empty()) throw InputError("no MIC contig has a related pair of MAC contigs; point cloud would be empty");
  const auto cloud = build_point_cloud(graphs, config.mode, config.clique_cap);
  store.write(kPoints, point_cloud_json(cloud));
  if (config.exports.csv) store.write("points.csv", point_cloud_csv(cloud));
}

void stage_cluster(const PipelineConfig& config, ArtifactStore& store) {
  const auto cloud = load_cloud(store);
  const auto dist = DistanceMatrix::euclidean(cloud);
  if (config.exports.csv) store.write("merge_trace.csv", merge_trace_csv(single_linkage(dist)));
  for (const double eps : config.eps_reports) {
    const auto clusters = clusters_at(dist, eps);
    if (config.exports.text) store.write("clusters/eps_" + eps_label(eps) + ".txt", cluster_report_text(clusters, cloud, eps));
    if (config.exports.json) store.write("clusters/eps_" + eps_label(eps) + ".json", cluster_report_json(clusters, cloud, eps));
  }
}

Filtration schedule_for(const PipelineConfig& config, const MergeTrace& trace) {
  const double top = trace.merges.empty() ? 0.0 : trace.merges.back().height;
  return Filtration::uniform(config.eps_step, top);
}

void stage_barcode(const PipelineConfig& config, ArtifactStore& store) {
  const auto trace = single_linkage(DistanceMatrix::euclidean(load_cloud(store)));
  const auto schedule = schedule_for(config, trace);
  const auto bc = barcode(trace, &schedule);
  if (config.exports.csv) store.write("barcode.csv", barcode_csv(bc));
  if (config.exports.svg) store.write("barcode.svg", barcode_svg(bc, schedule.values().back() + config.eps_step));
}

void stage_dendrogram(const PipelineConfig& config, ArtifactStore& store) {
  const auto trace = single_linkage(DistanceMatrix::euclidean(load_cloud(store)));
  const auto tree = dendrogram(trace, schedule_for(config, trace));
  if (config.exports.json) store.write("dendrogram.json", dendrogram_json(tree));
  if (config.exports.dot) store.write("dendrogram.dot", dendrogram_dot(tree));
}

void stage_mds(const PipelineConfig& config, ArtifactStore& store) {
  const auto cloud = load_cloud(store);
  const auto dist = DistanceMatrix::euclidean(cloud);
  const auto proj = classical_mds(dist);
  const auto clusters = clusters_at(dist, config.scatter_eps());
  if (config.exports.csv) store.write("mds.csv", projection_csv(proj, clusters, cloud));
  if (config.exports.svg) store.write("mds.svg", export_scatter(proj, clusters));
}

}  // namespace

ExportToggles parse_export_toggles(std::string_view list) {
  ExportToggles t{false, false, false, false, false};
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    const auto kind = list.substr(pos, comma - pos);
    if (kind == "dot") t.dot = true;
    else if (kind == "json") t.json = true;
    else if (kind == "csv") t.csv = true;
    else if (kind == "svg") t.svg = true;
    else if (kind == "text") t.text = true;
    else if (kind == "all") t = ExportToggles{};
    else throw InputError("unknown export format '" + std::string(kind) + "' (expected dot, json, csv, svg, text, all)");
    pos = comma + 1;
  }
  return t;
}

void PipelineConfig::validate() const {
  if (ingest.merge_gap_max < 0) throw InputError("merge gap must be >= 0");
  if (relations.overlap_min_bp < 0 || relations.containment_margin_bp < 0 || relations.interleave_slack_bp < 0) {
    throw InputError("relation thresholds must be >= 0");
  }
  if (!(eps_step > 0.0)) throw InputError("eps step must be > 0");
  for (const double eps : eps_reports) {
    if (!(eps >= 0.0)) throw InputError("report eps must be >= 0");
  }
  if (clique_cap < 1) throw InputError("clique cap must be >= 1");
}

double PipelineConfig::scatter_eps() const { return eps_reports.empty() ? 9.5 : eps_reports.front(); }

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kRelations: return "relations";
    case Stage::kGraphs: return "graphs";
    case Stage::kVectors: return "vectors";
    case Stage::kCluster: return "cluster";
    case Stage::kBarcode: return "barcode";
    case Stage::kDendrogram: return "dendrogram";
    case Stage::kMds: return "mds";
  }
  return "";
}

std::optional<Stage> parse_stage(std::string_view name) {
  for (const auto s : kAllStages) {
    if (stage_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string ArtifactStore::read(const std::string& relative) const {
  if (const auto it = pending_.find(relative); it != pending_.end()) return it->second;
  const auto path = root_ / relative;
  if (!fs::is_regular_file(path)) throw InputError("missing upstream artifact: expected " + path.string());
  return read_file(path);
}

void ArtifactStore::write(const std::string& relative, std::string content) {
  pending_[relative] = std::move(content);
}

void ArtifactStore::flush() {
  for (const auto& [relative, content] : pending_) {
    const auto path = root_ / relative;
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw InputError("cannot write " + path.string());
  }
  pending_.clear();
  fs::create_directories(root_);
  std::ofstream out(root_ / kManifest, std::ios::binary | std::ios::trunc);
  out << manifest_json(root_);
}

void run_stage(Stage stage, const PipelineConfig& config, ArtifactStore& store) {
  config.validate();
  switch (stage) {
    case Stage::kIngest: stage_ingest(config, store); break;
    case Stage::kRelations: stage_relations(config, store); break;
    case Stage::kGraphs: stage_graphs(config, store); break;
    case Stage::kVectors: stage_vectors(config, store); break;
    case Stage::kCluster: stage_cluster(config, store); break;
    case Stage::kBarcode: stage_barcode(config, store); break;
    case Stage::kDendrogram: stage_dendrogram(config, store); break;
    case Stage::kMds: stage_mds(config, store); break;
  }
}

void run_pipeline(const PipelineConfig& config) {
  // Reads must not fall through to stale files from an earlier run.
  ArtifactStore memory(config.output_dir / ".in-memory");
  for (const auto stage : kAllStages) run_stage(stage, config, memory);
  ArtifactStore out(config.output_dir);
  for (const auto& [path, content] : memory.pending()) out.write(path, content);
  out.flush();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ConsistencyError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

std::string manifest_json(const fs::path& root) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto relative = fs::relative(entry.path(), root).generic_string();
    if (relative != kManifest) paths.push_back(relative);
  }
  std::sort(paths.begin(), paths.end());
  json artifacts = json::array();
  for (const auto& p : paths) {
    const auto content = read_file(root / p);
    artifacts.push_back({{"path", p}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
  }
  return json{{"artifacts", artifacts}}.dump(2) + "\n";
}

std::string safe_file_name(std::string_view id) {
  std::string out;
  for (const char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                    c == '_' || c == '-';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

}  // namespace scramblegraph
