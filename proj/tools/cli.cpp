#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "boks/dataset.hpp"
#include "boks/error.hpp"
#include "boks/experiment.hpp"

namespace boks::cli {
namespace {

int cmd_run(const std::string& config_path, std::size_t threads, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  Dataset ds;
  try {
    config = load_config(config_path);
    if (threads > 0) config.threads = threads;
    ds = load_dataset(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  const Report report = run(config, ds);
  if (config.output.empty()) {
    write_csv(report, out);
  } else {
    write_csv(report, std::filesystem::path(config.output));
    const auto& best = report.summaries[report.best];
    out << "wrote " << config.output << ": " << report.repeats.size() << " repeats, best mean AMR "
        << best.amr_mean << "% (lambda_scale " << best.params.lambda_scale << ")\n";
  }
  for (const auto& r : report.repeats) {
    if (!r.ok) err << "repeat seed=" << r.seed << " failed: " << r.error << '\n';
  }
  return report.all_ok() ? kOk : kRuntimeError;
}

int cmd_datagen(std::size_t budget, std::size_t rounds, std::uint64_t seed, const std::string& path,
                std::ostream& out, std::ostream& err) {
  Dataset ds;
  try {
    ds = gen_lowerbound(budget, rounds, seed);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  write_libsvm(ds, std::filesystem::path(path));
  out << "wrote " << path << ": T=" << ds.size() << " d=" << ds.dimension << '\n';
  return kOk;
}

int cmd_inspect(const std::string& path, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::exists(path)) {
    err << "config error: dataset '" << path << "' does not exist\n";
    return kConfigError;
  }
  const Dataset ds = parse_libsvm(std::filesystem::path(path));
  std::size_t positives = 0, nnz = 0;
  for (const auto& ex : ds.examples) {
    positives += ex.y > 0 ? 1 : 0;
    nnz += ex.x.nnz();
  }
  out << "dataset: " << ds.name << '\n'
      << "T=" << ds.size() << '\n'
      << "d=" << ds.dimension << '\n'
      << "positives=" << positives << '\n'
      << "negatives=" << ds.size() - positives << '\n'
      << "mean_nnz=" << (ds.size() ? static_cast<double>(nnz) / static_cast<double>(ds.size()) : 0.0) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Memory-bounded online kernel selection: experiments and data tools", "boks"};
  app.require_subcommand(1);

  std::string config_path;
  std::size_t threads = 0;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a JSON config");
  run_cmd->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run_cmd->add_option("--threads", threads, "Run this many repeats concurrently (overrides the config)");

  auto* datagen = app.add_subcommand("datagen", "Generate synthetic datasets");
  datagen->require_subcommand(1);
  std::size_t budget = 0, rounds = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* lowerbound = datagen->add_subcommand("lowerbound", "Adversarial basis-vector stream (d = 3B)");
  lowerbound->add_option("--budget", budget, "Memory budget B")->required();
  lowerbound->add_option("--rounds", rounds, "Stream length T (>= 3B)")->required();
  lowerbound->add_option("--seed", seed, "Random seed");
  lowerbound->add_option("--out", out_path, "Output LIBSVM file")->required();

  std::string inspect_path;
  auto* inspect = app.add_subcommand("inspect", "Print size and dimension of a LIBSVM dataset");
  inspect->add_option("dataset", inspect_path, "LIBSVM file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kConfigError;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, threads, out, err);
    if (*lowerbound) return cmd_datagen(budget, rounds, seed, out_path, out, err);
    if (*inspect) return cmd_inspect(inspect_path, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  err << app.help();
  return kConfigError;
}

}  // namespace boks::cli
