#include "boks/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boks/error.hpp"
#include "boks/momd_hinge.hpp"
#include "boks/momd_smooth.hpp"
#include "boks/raker.hpp"

namespace boks {

using json = nlohmann::json;

Algorithm parse_algorithm(std::string_view name) {
  if (name == "momd_h") return Algorithm::momd_h;
  if (name == "momd_s") return Algorithm::momd_s;
  if (name == "raker") return Algorithm::raker;
  throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected momd_h, momd_s or raker)");
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::momd_h: return "momd_h";
    case Algorithm::momd_s: return "momd_s";
    case Algorithm::raker: return "raker";
  }
  return "?";
}

namespace {

template <typename T>
T get_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
    }
  }
  return v.get<T>();
}

std::vector<double> get_grid(const json& j, const char* key) {
  const auto& v = j.at(key);
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array() && !v.empty()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(std::string("config key '") + key + "' must hold numbers");
      out.push_back(e.get<double>());
    }
  } else {
    throw ConfigError(std::string("config key '") + key + "' must be a number or a non-empty list");
  }
  for (double x : out) {
    if (!std::isfinite(x) || x < 0.0) throw ConfigError(std::string("config key '") + key + "' must be >= 0");
  }
  return out;
}

const std::vector<std::string_view> kKnownKeys = {
    "dataset", "algorithm", "loss", "sigmas", "polynomial_degree", "B", "M", "U", "lambda_mode",
    "lambda_scale", "D", "eta_scale", "lambda_reg", "repeats", "seed", "removal", "normalize",
    "horizon", "output", "threads", "exact_norm_stride"};

}  // namespace

ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  ExperimentConfig c;
  try {
    if (!j.contains("dataset")) throw ConfigError("config needs a 'dataset'");
    const auto& ds = j.at("dataset");
    if (ds.is_string()) {
      std::filesystem::path p = ds.get<std::string>();
      if (p.empty()) throw ConfigError("config 'dataset' is empty");
      if (p.is_relative() && !base_dir.empty() && !std::filesystem::exists(p)) p = base_dir / p;
      c.dataset = p.string();
    } else if (ds.is_object()) {
      if (ds.value("generator", std::string()) != "lowerbound") {
        throw ConfigError("dataset generator must be \"lowerbound\"");
      }
      GeneratorSpec g;
      g.budget = get_number<std::size_t>(ds, "budget");
      g.rounds = get_number<std::size_t>(ds, "rounds");
      if (ds.contains("seed")) g.seed = get_number<std::uint64_t>(ds, "seed");
      c.generator = g;
    } else {
      throw ConfigError("config 'dataset' must be a path or a generator object");
    }

    if (j.contains("algorithm")) c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    c.loss = c.algorithm == Algorithm::momd_s ? LossKind::logistic : LossKind::hinge;
    if (j.contains("loss")) c.loss = parse_loss_kind(j.at("loss").get<std::string>());
    if (c.algorithm == Algorithm::momd_h && c.loss != LossKind::hinge) {
      throw ConfigError("momd_h runs with the hinge loss only");
    }
    if (c.algorithm == Algorithm::momd_s && c.loss != LossKind::logistic) {
      throw ConfigError("momd_s needs a smooth loss (logistic)");
    }
    if (j.contains("sigmas")) {
      c.sigmas = get_grid(j, "sigmas");
      for (double s : c.sigmas) {
        if (!(s > 0.0)) throw ConfigError("sigmas must be positive");
      }
    }
    if (j.contains("polynomial_degree")) c.polynomial_degree = get_number<int>(j, "polynomial_degree");
    if (j.contains("B")) c.B = get_number<std::size_t>(j, "B");
    if (j.contains("M")) c.M = get_number<std::size_t>(j, "M");
    if (j.contains("U")) {
      const auto& u = j.at("U");
      if (u.is_string()) {
        if (u.get<std::string>() != "sqrt_b") throw ConfigError("U must be a number or \"sqrt_b\"");
      } else {
        c.U = get_number<double>(j, "U");
        if (!(*c.U > 0.0)) throw ConfigError("U must be positive");
      }
    }
    if (j.contains("lambda_mode")) c.lambda_mode = parse_lambda_mode(j.at("lambda_mode").get<std::string>());
    if (j.contains("lambda_scale")) c.lambda_scale = get_grid(j, "lambda_scale");
    if (j.contains("D")) c.D = get_number<std::size_t>(j, "D");
    if (j.contains("eta_scale")) c.eta_scale = get_grid(j, "eta_scale");
    if (j.contains("lambda_reg")) c.lambda_reg = get_grid(j, "lambda_reg");
    if (j.contains("repeats")) c.repeats = get_number<std::size_t>(j, "repeats");
    if (j.contains("seed")) c.seed = get_number<std::uint64_t>(j, "seed");
    if (j.contains("removal")) c.removal = parse_removal_mode(j.at("removal").get<std::string>());
    if (j.contains("normalize")) c.normalize = j.at("normalize").get<bool>();
    if (j.contains("horizon")) c.horizon = get_number<std::uint64_t>(j, "horizon");
    if (j.contains("output")) {
      std::filesystem::path p = j.at("output").get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      c.output = p.string();
    }
    if (j.contains("threads")) c.threads = std::max<std::size_t>(1, get_number<std::size_t>(j, "threads"));
    if (j.contains("exact_norm_stride")) c.exact_norm_stride = get_number<std::size_t>(j, "exact_norm_stride");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (c.repeats == 0) throw ConfigError("repeats must be >= 1");
  if (c.B == 0) throw ConfigError("B must be positive");
  if (c.sigmas.empty() && !c.polynomial_degree) throw ConfigError("need at least one kernel");
  for (double s : c.lambda_scale) {
    if (!(s > 0.0)) throw ConfigError("lambda_scale must be positive");
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

namespace {

json to_json(const ExperimentConfig& c) {
  json j;
  if (c.generator) {
    j["dataset"] = {{"generator", "lowerbound"},
                    {"budget", c.generator->budget},
                    {"rounds", c.generator->rounds},
                    {"seed", c.generator->seed}};
  } else {
    j["dataset"] = c.dataset;
  }
  j["algorithm"] = std::string(to_string(c.algorithm));
  j["loss"] = std::string(to_string(c.loss));
  if (c.polynomial_degree) {
    j["polynomial_degree"] = *c.polynomial_degree;
  } else {
    j["sigmas"] = c.sigmas;
  }
  j["B"] = c.B;
  j["M"] = c.M;
  if (c.U) {
    j["U"] = *c.U;
  } else {
    j["U"] = "sqrt_b";
  }
  j["lambda_mode"] = std::string(to_string(c.lambda_mode));
  j["lambda_scale"] = c.lambda_scale;
  if (c.algorithm == Algorithm::raker) {
    j["D"] = c.D;
    j["eta_scale"] = c.eta_scale;
    j["lambda_reg"] = c.lambda_reg;
  }
  j["repeats"] = c.repeats;
  j["seed"] = c.seed;
  j["removal"] = std::string(to_string(c.removal));
  j["normalize"] = c.normalize;
  if (c.horizon) j["horizon"] = *c.horizon;
  return j;
}

std::vector<KernelSpec> make_kernels(const ExperimentConfig& c) {
  if (c.polynomial_degree) return {KernelSpec::polynomial(*c.polynomial_degree)};
  std::vector<KernelSpec> k;
  for (double s : c.sigmas) k.push_back(KernelSpec::gaussian(s));
  return k;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) { return to_json(config).dump(); }

Dataset load_dataset(const ExperimentConfig& config) {
  Dataset ds;
  if (config.generator) {
    ds = gen_lowerbound(config.generator->budget, config.generator->rounds, config.generator->seed);
  } else {
    if (config.dataset.empty()) throw ConfigError("config needs a 'dataset'");
    if (!std::filesystem::exists(config.dataset)) {
      throw ConfigError("dataset '" + config.dataset + "' does not exist");
    }
    ds = parse_libsvm(std::filesystem::path(config.dataset));
  }
  if (config.normalize) ds = normalize_minmax(ds);
  return ds;
}

std::vector<GridPoint> expand_grid(const ExperimentConfig& config) {
  std::vector<GridPoint> grid;
  if (config.algorithm == Algorithm::raker) {
    for (double eta : config.eta_scale) {
      for (double reg : config.lambda_reg) grid.push_back(GridPoint{1.0, eta, reg});
    }
  } else {
    for (double c : config.lambda_scale) grid.push_back(GridPoint{c, 1.0, 0.0});
  }
  return grid;
}

double RepeatResult::alignment_min() const {
  if (alignment.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::min_element(alignment.begin(), alignment.end());
}

bool Report::all_ok() const {
  return std::all_of(repeats.begin(), repeats.end(), [](const RepeatResult& r) { return r.ok; });
}

std::pair<double, double> mean_std(const std::vector<double>& v) {
  if (v.empty()) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  if (v.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(v.size() - 1))};
}

namespace {

void watch_buffer(InvariantLog& log, std::size_t size) {
  log.max_buffer = std::max(log.max_buffer, size);
  if (size > log.buffer_cap) ++log.buffer_violations;
}

void watch_norm(InvariantLog& log, const BudgetedFunction& f, bool exact) {
  const double n = f.norm();
  log.max_norm = std::max(log.max_norm, n);
  if (n > log.radius + 1e-8) ++log.norm_violations;
  if (exact) {
    const double e = std::sqrt(f.recompute_squared_norm());
    log.max_exact_norm = std::max(log.max_exact_norm, e);
    if (e > log.radius + 1e-8) ++log.norm_violations;
  }
}

}  // namespace

RepeatResult run_repeat(const ExperimentConfig& config, const Dataset& base, const GridPoint& params,
                        std::uint64_t seed) {
  RepeatResult r;
  r.params = params;
  r.seed = seed;
  const Dataset ds = permute(base, seed);
  r.rounds = ds.size();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (ds.size() == 0) throw ConfigError("dataset is empty");
    const auto kernels = make_kernels(config);
    const std::size_t stride = config.exact_norm_stride;
    auto exact_now = [stride](std::uint64_t t) { return stride > 0 && t % stride == 0; };

    switch (config.algorithm) {
      case Algorithm::momd_h: {
        HingeLearnerConfig hc;
        hc.kernels = kernels;
        hc.budget = config.B;
        hc.reservoir_capacity = config.M;
        hc.radius = config.U;
        hc.lambda_scale = params.lambda_scale;
        hc.lambda_mode = config.lambda_mode;
        hc.removal = config.removal;
        hc.horizon = config.horizon.value_or(ds.size());
        hc.seed = seed;
        MomdHinge learner(hc);
        r.radius = learner.radius();
        r.effective_budget = config.B;
        auto& inv = r.invariants;
        inv.buffer_cap = learner.allocation().per_kernel;
        inv.archive_cap = learner.allocation().archive_cap;
        inv.radius = learner.radius();
        for (const auto& ex : ds.examples) {
          const auto rec = learner.update(ex.x, ex.y);
          r.mistakes += rec.mistake ? 1 : 0;
          r.cum_loss += rec.loss;
          const bool exact = exact_now(rec.round);
          for (std::size_t i = 0; i < learner.kernel_count(); ++i) {
            watch_buffer(inv, learner.function(i).own_buffer().size());
            watch_norm(inv, learner.function(i), exact);
          }
          const std::size_t archive = learner.reservoir().archive().size();
          inv.max_archive = std::max(inv.max_archive, archive);
          if (archive > inv.archive_cap) ++inv.archive_violations;
        }
        for (std::size_t i = 0; i < learner.kernel_count(); ++i) {
          r.alignment.push_back(learner.gap_sum(i));
          r.removals.push_back(learner.removals(i));
          r.removal_bounds.push_back(hinge_removal_bound(learner.kernel_count(), learner.gap_sum(i), config.B,
                                                         kernels[i].diagonal_lower_bound()));
        }
        r.archive_size = learner.reservoir().archive().size();
        break;
      }
      case Algorithm::momd_s: {
        SmoothLearnerConfig sc;
        sc.kernels = kernels;
        sc.budget = config.B;
        sc.radius = config.U;
        sc.lambda_scale = params.lambda_scale;
        sc.lambda_mode = config.lambda_mode;
        sc.removal = config.removal;
        sc.seed = seed;
        MomdSmooth learner(sc);
        r.radius = learner.radius();
        r.effective_budget = config.B;
        auto& inv = r.invariants;
        inv.buffer_cap = config.B;
        inv.radius = learner.radius();
        for (const auto& ex : ds.examples) {
          const auto rec = learner.update(ex.x, ex.y);
          r.mistakes += rec.mistake ? 1 : 0;
          const bool exact = exact_now(rec.round);
          watch_buffer(inv, learner.buffer().size());
          for (std::size_t i = 0; i < learner.kernel_count(); ++i) {
            watch_norm(inv, learner.function(i), exact);
            if (learner.function(i).own_buffer() != learner.buffer()) ++inv.shared_buffer_violations;
          }
        }
        r.cum_loss = learner.cumulative_loss();
        r.removals.push_back(learner.removals());
        r.removal_bounds.push_back(
            smooth_removal_bound(learner.cumulative_loss(), config.B, sc.loss.g1, sc.loss.g2));
        break;
      }
      case Algorithm::raker: {
        RakerConfig rc;
        rc.sigmas = config.sigmas;
        rc.features = config.D;
        rc.dimension = std::max<std::size_t>(1, ds.dimension);
        rc.step = params.eta_scale / std::sqrt(static_cast<double>(ds.size()));
        rc.regularizer = params.lambda_reg;
        rc.loss = config.loss;
        rc.seed = seed;
        Raker learner(rc);
        r.effective_budget = config.D;
        for (const auto& ex : ds.examples) {
          const auto rec = learner.update(ex.x, ex.y);
          r.mistakes += rec.mistake ? 1 : 0;
          r.cum_loss += rec.loss;
        }
        break;
      }
    }
    r.amr_percent = 100.0 * static_cast<double>(r.mistakes) / static_cast<double>(r.rounds);
  } catch (const Error& e) {
    r.ok = false;
    r.error = e.what();
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run(const ExperimentConfig& config, const Dataset& ds) {
  Report report;
  report.config = config;
  report.dataset_name = ds.name;
  report.provenance = ds.provenance;
  report.T = ds.size();
  report.dimension = ds.dimension;

  const auto grid = expand_grid(config);
  struct Job {
    std::size_t grid_index;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t r = 0; r < config.repeats; ++r) jobs.push_back(Job{g, config.seed + r});
  }
  report.repeats.resize(jobs.size());
  const std::size_t width = std::max<std::size_t>(1, config.threads);
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    const std::size_t end = std::min(jobs.size(), start + width);
    if (width == 1) {
      report.repeats[start] = run_repeat(config, ds, grid[jobs[start].grid_index], jobs[start].seed);
    } else {
      std::vector<std::future<RepeatResult>> batch;
      for (std::size_t k = start; k < end; ++k) {
        batch.push_back(std::async(std::launch::async, [&, k] {
          return run_repeat(config, ds, grid[jobs[k].grid_index], jobs[k].seed);
        }));
      }
      for (std::size_t k = start; k < end; ++k) report.repeats[k] = batch[k - start].get();
    }
    for (std::size_t k = start; k < end; ++k) report.repeats[k].grid_index = jobs[k].grid_index;
  }

  double best_amr = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    GridSummary s;
    s.params = grid[g];
    std::vector<double> amr, loss, align, archive, wall;
    std::vector<std::vector<double>> removals;
    for (const auto& r : report.repeats) {
      if (r.grid_index != g || !r.ok) continue;
      ++s.ok_repeats;
      amr.push_back(r.amr_percent);
      loss.push_back(r.cum_loss);
      align.push_back(r.alignment_min());
      archive.push_back(static_cast<double>(r.archive_size));
      wall.push_back(r.wall_time_s);
      if (removals.size() < r.removals.size()) removals.resize(r.removals.size());
      for (std::size_t i = 0; i < r.removals.size(); ++i) removals[i].push_back(static_cast<double>(r.removals[i]));
    }
    std::tie(s.amr_mean, s.amr_std) = mean_std(amr);
    std::tie(s.cum_loss_mean, s.cum_loss_std) = mean_std(loss);
    std::tie(s.alignment_min_mean, s.alignment_min_std) = mean_std(align);
    std::tie(s.archive_mean, s.archive_std) = mean_std(archive);
    std::tie(s.wall_mean, s.wall_std) = mean_std(wall);
    for (const auto& col : removals) s.removals_mean.push_back(mean_std(col).first);
    if (s.ok_repeats > 0 && s.amr_mean < best_amr) {
      best_amr = s.amr_mean;
      report.best = g;
    }
    report.summaries.push_back(std::move(s));
  }
  return report;
}

Report run(const ExperimentConfig& config) { return run(config, load_dataset(config)); }

namespace {

std::string fmt6(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    if constexpr (std::is_floating_point_v<T>) {
      out += fmt6(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

ExperimentConfig point_config(const ExperimentConfig& c, const GridPoint& p) {
  ExperimentConfig out = c;
  out.lambda_scale = {p.lambda_scale};
  out.eta_scale = {p.eta_scale};
  out.lambda_reg = {p.lambda_reg};
  return out;
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
  const auto& c = report.config;
  out << "dataset,T,algorithm,loss,B,M,U,lambda_scale,seed,AMR_percent,cum_loss,alignment_proxy_min,"
         "removals_per_kernel,archive_size,wall_time_s,config,status\n";
  const std::string ds = csv_quote(report.dataset_name);
  const std::string algo(to_string(c.algorithm));
  const std::string loss(to_string(c.loss));
  const std::string m = c.algorithm == Algorithm::momd_h ? std::to_string(c.M) : "";
  auto lambda_col = [&](const GridPoint& p) { return c.algorithm == Algorithm::raker ? std::string() : fmt6(p.lambda_scale); };
  auto u_col = [&](double radius) { return c.algorithm == Algorithm::raker ? std::string() : fmt6(radius); };
  const std::size_t budget = c.algorithm == Algorithm::raker ? c.D : c.B;
  const double default_radius = c.U.value_or(std::sqrt(static_cast<double>(c.B)));

  for (const auto& r : report.repeats) {
    out << ds << ',' << report.T << ',' << algo << ',' << loss << ',' << budget << ',' << m << ','
        << u_col(r.radius > 0.0 ? r.radius : default_radius) << ',' << lambda_col(r.params) << ',' << r.seed << ',';
    if (r.ok) {
      out << fmt6(r.amr_percent) << ',' << fmt6(r.cum_loss) << ','
          << (r.alignment.empty() ? std::string() : fmt6(r.alignment_min())) << ',' << join(r.removals) << ','
          << r.archive_size << ',' << fmt6(r.wall_time_s) << ',';
    } else {
      out << ",,,,," << fmt6(r.wall_time_s) << ',';
    }
    out << csv_quote(config_to_json(point_config(c, r.params))) << ','
        << (r.ok ? std::string("ok") : csv_quote("failed: " + r.error)) << '\n';
  }
  for (std::size_t g = 0; g < report.summaries.size(); ++g) {
    const auto& s = report.summaries[g];
    const std::string tag = g == report.best ? "best_" : "";
    const std::string prefix = ds + ',' + std::to_string(report.T) + ',' + algo + ',' + loss + ',' +
                               std::to_string(budget) + ',' + m + ',' + u_col(default_radius) + ',' +
                               lambda_col(s.params) + ',' + std::to_string(c.seed) + ',';
    const std::string echo = csv_quote(config_to_json(point_config(c, s.params)));
    const bool hinge = c.algorithm == Algorithm::momd_h;
    out << prefix << fmt6(s.amr_mean) << ',' << fmt6(s.cum_loss_mean) << ','
        << (hinge ? fmt6(s.alignment_min_mean) : std::string()) << ',' << join(s.removals_mean) << ','
        << fmt6(s.archive_mean) << ',' << fmt6(s.wall_mean) << ',' << echo << ',' << tag << "mean\n";
    out << prefix << fmt6(s.amr_std) << ',' << fmt6(s.cum_loss_std) << ','
        << (hinge ? fmt6(s.alignment_min_std) : std::string()) << ",," << fmt6(s.archive_std) << ','
        << fmt6(s.wall_std) << ',' << echo << ',' << tag << "std\n";
  }
}

void write_csv(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report '" + path.string() + "'");
  write_csv(report, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

AlignmentProbe alignment_probe(const ExperimentConfig& config, const Dataset& ds) {
  ExperimentConfig probe = config;
  probe.algorithm = Algorithm::momd_h;
  probe.loss = LossKind::hinge;
  probe.M = 30;
  probe.B = 400;
  const GridPoint point{config.lambda_scale.empty() ? 1.0 : config.lambda_scale.front(), 1.0, 0.0};
  RepeatResult r = run_repeat(probe, ds, point, config.seed);
  if (!r.ok) throw Error("alignment probe failed: " + r.error);
  AlignmentProbe out;
  out.per_kernel = r.alignment;
  out.min = r.alignment_min();
  out.T = r.rounds;
  return out;
}

}  // namespace boks
