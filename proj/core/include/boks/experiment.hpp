#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boks/dataset.hpp"
#include "boks/learner.hpp"
#include "boks/loss.hpp"

namespace boks {

enum class Algorithm { momd_h, momd_s, raker };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

struct GeneratorSpec {
  std::size_t budget = 0;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;
};

// Declarative description of one experiment. JSON keys mirror the field
// names below (see load_config). List-valued lambda_scale / eta_scale /
// lambda_reg form a tuning grid; every grid point is run `repeats` times.
struct ExperimentConfig {
  std::string dataset;                     // LIBSVM path
  std::optional<GeneratorSpec> generator;  // used instead of `dataset`
  Algorithm algorithm = Algorithm::momd_h;
  LossKind loss = LossKind::hinge;
  std::vector<double> sigmas{0.25, 1.0, 4.0, 16.0, 64.0};
  std::optional<int> polynomial_degree;    // single polynomial kernel instead of the gaussian grid
  std::size_t B = 400;
  std::size_t M = 10;
  std::optional<double> U;                 // nullopt: sqrt(B)
  LambdaMode lambda_mode = LambdaMode::experimental;
  std::vector<double> lambda_scale{1.0};
  std::size_t D = 400;
  std::vector<double> eta_scale{1.0};      // raker: eta = eta_scale / sqrt(T)
  std::vector<double> lambda_reg{0.005};   // raker
  std::size_t repeats = 10;
  std::uint64_t seed = 0;
  RemovalMode removal = RemovalMode::half;
  bool normalize = true;
  std::optional<std::uint64_t> horizon;    // T estimate for budget allocation
  std::string output;                      // CSV path; empty means stdout
  std::size_t threads = 1;                 // repeats run concurrently
  std::size_t exact_norm_stride = 0;       // >0: recompute ||f|| from scratch every k rounds
};

ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

// Parses or generates the dataset, then applies min-max scaling if enabled.
Dataset load_dataset(const ExperimentConfig& config);

// One point of the tuning grid.
struct GridPoint {
  double lambda_scale = 1.0;
  double eta_scale = 1.0;
  double lambda_reg = 0.0;
};

std::vector<GridPoint> expand_grid(const ExperimentConfig& config);

// Hard-invariant monitor filled during a run.
struct InvariantLog {
  std::size_t buffer_cap = 0;        // B_i (hinge) or B (smooth)
  std::size_t max_buffer = 0;
  std::size_t archive_cap = 0;       // B_0 (hinge only)
  std::size_t max_archive = 0;
  double radius = 0.0;
  double max_norm = 0.0;             // cached norms, every round
  double max_exact_norm = 0.0;       // recomputed norms at the configured stride
  std::size_t buffer_violations = 0;
  std::size_t archive_violations = 0;
  std::size_t norm_violations = 0;
  std::size_t shared_buffer_violations = 0;  // smooth: kernels disagree on the buffer

  std::size_t total_violations() const noexcept {
    return buffer_violations + archive_violations + norm_violations + shared_buffer_violations;
  }
};

struct RepeatResult {
  std::size_t grid_index = 0;
  GridPoint params;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;
  std::size_t rounds = 0;
  std::size_t mistakes = 0;
  double amr_percent = 0.0;
  double cum_loss = 0.0;
  std::vector<double> alignment;           // hinge: per-kernel gap sums
  std::vector<std::size_t> removals;       // hinge: per kernel; smooth: one entry
  std::vector<double> removal_bounds;      // matching removal-count bounds
  std::size_t archive_size = 0;
  double radius = 0.0;
  std::size_t effective_budget = 0;        // B, or D for raker
  double wall_time_s = 0.0;
  InvariantLog invariants;

  double alignment_min() const;
};

struct GridSummary {
  GridPoint params;
  std::size_t ok_repeats = 0;
  double amr_mean = 0.0, amr_std = 0.0;
  double cum_loss_mean = 0.0, cum_loss_std = 0.0;
  double alignment_min_mean = 0.0, alignment_min_std = 0.0;
  double archive_mean = 0.0, archive_std = 0.0;
  double wall_mean = 0.0, wall_std = 0.0;
  std::vector<double> removals_mean;
};

struct Report {
  ExperimentConfig config;
  std::string dataset_name;
  std::string provenance;
  std::size_t T = 0;
  std::size_t dimension = 0;
  std::vector<RepeatResult> repeats;
  std::vector<GridSummary> summaries;
  std::size_t best = 0;  // summary with the lowest mean AMR

  bool all_ok() const;
};

// Mean and n-1 standard deviation; std is NaN for fewer than two values.
std::pair<double, double> mean_std(const std::vector<double>& v);

// Streams one permutation (seed) of `ds` through the configured learner.
RepeatResult run_repeat(const ExperimentConfig& config, const Dataset& ds, const GridPoint& params,
                        std::uint64_t seed);

Report run(const ExperimentConfig& config, const Dataset& ds);
Report run(const ExperimentConfig& config);

// Columns: dataset,T,algorithm,loss,B,M,U,lambda_scale,seed,AMR_percent,
// cum_loss,alignment_proxy_min,removals_per_kernel,archive_size,
// wall_time_s,config,status. Floats use 6 significant digits.
void write_csv(const Report& report, std::ostream& out);
void write_csv(const Report& report, const std::filesystem::path& path);

struct AlignmentProbe {
  std::vector<double> per_kernel;
  double min = 0.0;
  std::size_t T = 0;
};

// Runs M-OMD-H once with M = 30, B = 400 and reports the per-kernel gap
// sums at T.
AlignmentProbe alignment_probe(const ExperimentConfig& config, const Dataset& ds);

}  // namespace boks
