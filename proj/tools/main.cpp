// scramblegraph: annotation -> segment graphs -> feature vectors ->
// 0-dimensional persistence, dendrogram and 2-D scaling.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scramblegraph/errors.hpp"
#include "scramblegraph/pipeline.hpp"

namespace sg = scramblegraph;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Options {
  std::string input;
  std::string out = "scramblegraph-out";
  std::int64_t overlap_min = 20;
  std::int64_t containment_margin = 5;
  std::int64_t interleave_slack = 5;
  std::int64_t merge_gap = 0;
  bool keep_distant = false;
  double eps_step = 0.5;
  std::vector<double> eps_report;
  bool global_only = false;
  bool gff3 = false;
  std::string format = "all";
};

void add_common(CLI::App* cmd, Options& o, bool needs_input) {
  auto* input = cmd->add_option("--input", o.input, "MDS annotation file");
  if (needs_input) input->required();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--overlap-min", o.overlap_min, "Type 1 minimum shared bases")->capture_default_str();
  cmd->add_option("--containment-margin", o.containment_margin, "Type 2 unshared bases required at both ends")
      ->capture_default_str();
  cmd->add_option("--interleave-slack", o.interleave_slack, "Type 3 bases an MDS may reach into flanking MDSs")
      ->capture_default_str();
  cmd->add_option("--merge-gap", o.merge_gap, "merge consecutive MDSs at most this many bp apart")
      ->capture_default_str();
  cmd->add_flag("--keep-distant-overlaps", o.keep_distant,
                "do not drop MAC contigs whose non-consecutive MDSs overlap");
  cmd->add_option("--eps-step", o.eps_step, "filtration step")->capture_default_str();
  cmd->add_option("--eps-report", o.eps_report, "write a cluster report at this eps (repeatable)");
  cmd->add_flag("--global-only", o.global_only, "use the 3-entry global vector <|V|,|E|,CN>");
  cmd->add_flag("--gff3", o.gff3, "read 9-column GFF3 instead of the native format");
  cmd->add_option("--format", o.format, "comma list of exports: dot,json,csv,svg,text or all")
      ->capture_default_str();
}

sg::PipelineConfig to_config(const Options& o) {
  sg::PipelineConfig c;
  c.input = o.input;
  c.output_dir = o.out;
  c.ingest.merge_gap_max = o.merge_gap;
  c.ingest.exclude_distant_overlap = !o.keep_distant;
  c.ingest.format = o.gff3 ? sg::AnnotationFormat::kGff3 : sg::AnnotationFormat::kNative;
  c.relations = {o.overlap_min, o.containment_margin, o.interleave_slack};
  c.eps_step = o.eps_step;
  c.eps_reports = o.eps_report;
  c.mode = o.global_only ? sg::FeatureMode::kGlobalOnly : sg::FeatureMode::kFull;
  c.exports = sg::parse_export_toggles(o.format);
  if (const char* cap = std::getenv("SCRAMBLEGRAPH_CLIQUE_CAP")) {
    try {
      c.clique_cap = std::stoll(cap);
    } catch (const std::exception&) {
      throw sg::InputError(std::string("SCRAMBLEGRAPH_CLIQUE_CAP is not an integer: ") + cap);
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrambled-gene segment graphs, feature vectors and 0-dimensional persistence"};
  app.require_subcommand(1);
  Options options;

  auto* pipeline = app.add_subcommand("pipeline", "run every stage and write all artifacts");
  add_common(pipeline, options, true);
  for (const auto stage : sg::kAllStages) {
    auto* cmd = app.add_subcommand(std::string(sg::stage_name(stage)), "run the " +
                                                                            std::string(sg::stage_name(stage)) +
                                                                            " stage against --out");
    add_common(cmd, options, stage == sg::Stage::kIngest);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = to_config(options);
    config.validate();
    auto* chosen = app.get_subcommands().front();
    if (chosen == pipeline) {
      if (!std::filesystem::is_regular_file(config.input)) {
        throw sg::InputError("cannot read input file " + config.input.string());
      }
      sg::run_pipeline(config);
    } else {
      const auto stage = sg::parse_stage(chosen->get_name());
      sg::ArtifactStore store(config.output_dir);
      sg::run_stage(*stage, config, store);
      store.flush();
    }
  } catch (const sg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const sg::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
