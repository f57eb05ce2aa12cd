#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpea/generators.hpp"
#include "qpea/probability.hpp"
#include "qpea/qpe.hpp"

namespace qpea {

struct ExperimentConfig {
  EnsembleConfig ensemble;
  bool run_engines = false;
  int phase_bits = 8;
  Engine engine = Engine::Spectral;
  std::filesystem::path csv_path;
  std::filesystem::path svg_path;

  void validate() const;
};

// Flat `key = value` config with `#` comments. Keys: kind, N, density,
// trials, seed, run_engines, m, engine, csv, svg.
ExperimentConfig parse_experiment_config(std::istream& in,
                                         std::string_view source = "<stream>");
ExperimentConfig read_experiment_config(const std::filesystem::path& path);

struct ReportRow {
  int trial = 0;
  std::uint64_t seed = 0;  // master seed of the ensemble
  EnsembleKind kind = EnsembleKind::RandomSymmetric;
  Eigen::Index order = 0;
  bool failed = false;
  std::string error;
  ProbabilityReport report;
  double engine_p_zero = std::numeric_limits<double>::quiet_NaN();
};

struct Aggregates {
  double median_p_reg1 = 0.0;
  double mean_p_reg1 = 0.0;
  double median_p_reg1_est = 0.0;
  double median_abs_err_alpha1_sq = 0.0;
  double median_abs_err_p_reg2 = 0.0;
  double median_abs_err_p_reg1 = 0.0;
  // Mean absolute estimator error pooled over the three probability pairs.
  double mean_abs_err_all = 0.0;
  // Spearman rank correlation between estimated and computed P_reg1.
  double rank_corr_p_reg1 = 0.0;
  int failures = 0;
};

struct ReportTable {
  std::vector<ReportRow> rows;
  Aggregates aggregates;
};

Aggregates compute_aggregates(const std::vector<ReportRow>& rows);

// Deterministic per master seed; trials run on a worker pool (capped by
// PERRON_PEA_THREADS) with disjoint RNG substreams, rows ordered by trial
// index. Per-trial failures land in the row, not as exceptions.
ReportTable run_experiment(const ExperimentConfig& config);

extern const char* const kCsvHeader;

// Fixed-schema CSV, one row per trial, 17-significant-digit values,
// aggregates appended as a `#`-prefixed comment block. Rejects empty tables.
void emit_csv(const ReportTable& table, std::ostream& out);
void emit_csv(const ReportTable& table, const std::filesystem::path& path);

std::vector<ReportRow> parse_csv(std::istream& in, std::string_view source = "<stream>");
std::vector<ReportRow> read_csv(const std::filesystem::path& path);

const char* ensemble_kind_name(EnsembleKind kind);
EnsembleKind ensemble_kind_from_name(std::string_view name);

}  // namespace qpea
