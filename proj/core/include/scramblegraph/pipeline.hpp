#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scramblegraph/annotation.hpp"
#include "scramblegraph/features.hpp"
#include "scramblegraph/relations.hpp"

namespace scramblegraph {

struct ExportToggles {
  bool dot = true;
  bool json = true;
  bool csv = true;
  bool svg = true;
  bool text = true;
};

// Parses a comma list such as "csv,svg". Throws InputError on unknown kinds.
ExportToggles parse_export_toggles(std::string_view list);

struct PipelineConfig {
  std::filesystem::path input;
  std::filesystem::path output_dir;
  IngestConfig ingest;
  RelationConfig relations;
  double eps_step = 0.5;
  std::vector<double> eps_reports;
  FeatureMode mode = FeatureMode::kFull;
  ExportToggles exports;
  std::int64_t clique_cap = kDefaultCliqueCap;

  // Throws InputError on negative thresholds or a non-positive step.
  void validate() const;
  // Level used to colour the scatter plot: first report level, else 9.5.
  double scatter_eps() const;
};

enum class Stage { kIngest, kRelations, kGraphs, kVectors, kCluster, kBarcode, kDendrogram, kMds };

inline constexpr Stage kAllStages[] = {Stage::kIngest,  Stage::kRelations, Stage::kGraphs,     Stage::kVectors,
                                       Stage::kCluster, Stage::kBarcode,   Stage::kDendrogram, Stage::kMds};

std::string_view stage_name(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

// Artifacts keyed by path relative to the output directory. Reads see
// pending writes first, then the directory. Nothing touches the disk until
// flush(), which also rewrites manifest.json.
class ArtifactStore {
 public:
  explicit ArtifactStore(std::filesystem::path root) : root_(std::move(root)) {}

  // Throws InputError naming the expected path when absent.
  std::string read(const std::string& relative) const;
  void write(const std::string& relative, std::string content);
  const std::map<std::string, std::string>& pending() const { return pending_; }
  const std::filesystem::path& root() const { return root_; }

  void flush();

 private:
  std::filesystem::path root_;
  std::map<std::string, std::string> pending_;
};

void run_stage(Stage stage, const PipelineConfig& config, ArtifactStore& store);

// All stages in order, computed in memory, then written at once.
void run_pipeline(const PipelineConfig& config);

std::string sha256_hex(std::string_view data);

// {"artifacts":[{"path","bytes","sha256"}]} over every file under root
// except manifest.json, sorted by path.
std::string manifest_json(const std::filesystem::path& root);

// Filesystem-safe rendering of a contig id.
std::string safe_file_name(std::string_view id);

}  // namespace scramblegraph
