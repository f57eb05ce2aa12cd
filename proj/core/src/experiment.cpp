#include "qpea/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace qpea {
namespace {

std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Ranks with ties averaged.
std::vector<double> ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> result(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) result[order[k]] = rank;
    i = j + 1;
  }
  return result;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const std::vector<double> rx = ranks(x);
  const std::vector<double> ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

int worker_count(int trials) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("PERRON_PEA_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) cap = requested;
  }
  return std::min(cap, trials);
}

}  // namespace

const char* const kCsvHeader =
    "N,seed,kind,alpha1_sq,p_reg2,p_reg1,alpha1_sq_est,p_reg2_est,p_reg1_est,"
    "sigma1,sigma2,epsilon_forward,epsilon_inverse,ratio_bound,ratio_actual,"
    "ratio_applicable,trial,engine_p_zero,status";

const char* ensemble_kind_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::RandomSymmetric: return "random-symmetric";
    case EnsembleKind::LocalH1: return "local-h1";
    case EnsembleKind::LocalH2: return "local-h2";
  }
  return "unknown";
}

EnsembleKind ensemble_kind_from_name(std::string_view name) {
  if (name == "random-symmetric") return EnsembleKind::RandomSymmetric;
  if (name == "local-h1") return EnsembleKind::LocalH1;
  if (name == "local-h2") return EnsembleKind::LocalH2;
  throw ValidationError("unknown ensemble kind `" + std::string(name) + "`");
}

void ExperimentConfig::validate() const {
  ensemble.validate();
  if (run_engines && (phase_bits < 1 || phase_bits > 24))
    throw ValidationError("phase_bits out of range [1, 24]");
}

ExperimentConfig parse_experiment_config(std::istream& in, std::string_view source) {
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream parts(line);
    std::string key, eq, value;
    if (!(parts >> key)) continue;  // blank line
    if (!(parts >> eq >> value) || eq != "=")
      throw IoError(std::string(source) + ":" + std::to_string(line_no) +
                    ": expected `key = value`");
    try {
      if (key == "kind")
        config.ensemble.kind = ensemble_kind_from_name(value);
      else if (key == "N")
        config.ensemble.order = std::stoll(value);
      else if (key == "density")
        config.ensemble.density = std::stod(value);
      else if (key == "trials")
        config.ensemble.trial_count = std::stoi(value);
      else if (key == "seed")
        config.ensemble.seed = std::stoull(value);
      else if (key == "run_engines")
        config.run_engines = value == "true" || value == "1";
      else if (key == "m")
        config.phase_bits = std::stoi(value);
      else if (key == "engine")
        config.engine = value == "dense" ? Engine::Dense : Engine::Spectral;
      else if (key == "csv")
        config.csv_path = value;
      else if (key == "svg")
        config.svg_path = value;
      else
        throw ValidationError("unknown config key `" + key + "`");
    } catch (const std::invalid_argument&) {
      throw IoError(std::string(source) + ":" + std::to_string(line_no) +
                    ": bad value for `" + key + "`");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return parse_experiment_config(in, path.string());
}

Aggregates compute_aggregates(const std::vector<ReportRow>& rows) {
  Aggregates agg;
  std::vector<double> p1, p1_est, err_a1, err_p2, err_p1;
  for (const auto& row : rows) {
    if (row.failed) {
      ++agg.failures;
      continue;
    }
    p1.push_back(row.report.p_reg1);
    p1_est.push_back(row.report.p_reg1_est);
    err_a1.push_back(std::abs(row.report.alpha1_sq_est - row.report.alpha1_sq));
    err_p2.push_back(std::abs(row.report.p_reg2_est - row.report.p_reg2));
    err_p1.push_back(std::abs(row.report.p_reg1_est - row.report.p_reg1));
  }
  agg.median_p_reg1 = median(p1);
  agg.mean_p_reg1 = p1.empty() ? std::numeric_limits<double>::quiet_NaN()
                               : std::accumulate(p1.begin(), p1.end(), 0.0) / p1.size();
  agg.median_p_reg1_est = median(p1_est);
  agg.median_abs_err_alpha1_sq = median(err_a1);
  agg.median_abs_err_p_reg2 = median(err_p2);
  agg.median_abs_err_p_reg1 = median(err_p1);
  double pooled = 0.0;
  for (std::size_t i = 0; i < err_a1.size(); ++i)
    pooled += err_a1[i] + err_p2[i] + err_p1[i];
  agg.mean_abs_err_all = err_a1.empty()
                             ? std::numeric_limits<double>::quiet_NaN()
                             : pooled / static_cast<double>(3 * err_a1.size());
  agg.rank_corr_p_reg1 = spearman(p1, p1_est);
  return agg;
}

ReportTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  const int trials = config.ensemble.trial_count;

  ReportTable table;
  table.rows.resize(static_cast<std::size_t>(trials));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int trial = next.fetch_add(1);
      if (trial >= trials) return;
      ReportRow& row = table.rows[static_cast<std::size_t>(trial)];
      row.trial = trial;
      row.seed = config.ensemble.seed;
      row.kind = config.ensemble.kind;
      row.order = config.ensemble.order;
      try {
        const SymmetricMatrix m = make_trial_matrix(config.ensemble, trial);
        row.report = full_report(m);
        if (config.run_engines) {
          QpeConfig qpe_cfg;
          qpe_cfg.phase_bits = config.phase_bits;
          qpe_cfg.output_hadamards = true;
          qpe_cfg.engine = config.engine;
          JointDistribution d;
          if (config.engine == Engine::Dense) {
            d = run_dense(m, qpe_cfg);
          } else {
            const Spectrum s = eigendecompose(m);
            d = run_spectral(s, eigenvector_sums(s), qpe_cfg);
          }
          row.engine_p_zero = condition_on_zero(d).p_zero;
        }
      } catch (const std::exception& err) {
        row.failed = true;
        row.error = err.what();
      }
    }
  };

  const int pool = worker_count(trials);
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  table.aggregates = compute_aggregates(table.rows);
  return table;
}

void emit_csv(const ReportTable& table, std::ostream& out) {
  if (table.rows.empty()) throw ValidationError("refusing to emit an empty report table");

  out << kCsvHeader << '\n';
  for (const auto& row : table.rows) {
    const auto& r = row.report;
    std::string status = row.failed ? row.error : "ok";
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    out << row.order << ',' << row.seed << ',' << ensemble_kind_name(row.kind) << ','
        << format_value(r.alpha1_sq) << ',' << format_value(r.p_reg2) << ','
        << format_value(r.p_reg1) << ',' << format_value(r.alpha1_sq_est) << ','
        << format_value(r.p_reg2_est) << ',' << format_value(r.p_reg1_est) << ','
        << format_value(r.sigma1) << ',' << format_value(r.sigma2) << ','
        << format_value(r.epsilon_forward) << ',' << format_value(r.epsilon_inverse) << ','
        << format_value(r.ratio_bound_value) << ',' << format_value(r.ratio_actual) << ','
        << (r.ratio_applicable ? 1 : 0) << ',' << row.trial << ','
        << format_value(row.engine_p_zero) << ',' << status << '\n';
  }

  const Aggregates& a = table.aggregates;
  out << "# aggregate median_p_reg1 = " << format_value(a.median_p_reg1) << '\n'
      << "# aggregate mean_p_reg1 = " << format_value(a.mean_p_reg1) << '\n'
      << "# aggregate median_p_reg1_est = " << format_value(a.median_p_reg1_est) << '\n'
      << "# aggregate median_abs_err_alpha1_sq = "
      << format_value(a.median_abs_err_alpha1_sq) << '\n'
      << "# aggregate median_abs_err_p_reg2 = " << format_value(a.median_abs_err_p_reg2)
      << '\n'
      << "# aggregate median_abs_err_p_reg1 = " << format_value(a.median_abs_err_p_reg1)
      << '\n'
      << "# aggregate mean_abs_err_all = " << format_value(a.mean_abs_err_all) << '\n'
      << "# aggregate rank_corr_p_reg1 = " << format_value(a.rank_corr_p_reg1) << '\n'
      << "# aggregate failures = " << a.failures << '\n';
}

void emit_csv(const ReportTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_csv(table, out);
}

std::vector<ReportRow> parse_csv(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw IoError(std::string(source) + ":1: unexpected CSV header");

  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream parts(line);
    std::string field;
    while (std::getline(parts, field, ',')) fields.push_back(field);
    if (fields.size() != 19)
      throw IoError(std::string(source) + ":" + std::to_string(line_no) +
                    ": expected 19 fields, got " + std::to_string(fields.size()));
    try {
      ReportRow row;
      row.order = std::stoll(fields[0]);
      row.seed = std::stoull(fields[1]);
      row.kind = ensemble_kind_from_name(fields[2]);
      row.report.order = row.order;
      row.report.alpha1_sq = std::stod(fields[3]);
      row.report.p_reg2 = std::stod(fields[4]);
      row.report.p_reg1 = std::stod(fields[5]);
      row.report.alpha1_sq_est = std::stod(fields[6]);
      row.report.p_reg2_est = std::stod(fields[7]);
      row.report.p_reg1_est = std::stod(fields[8]);
      row.report.sigma1 = std::stod(fields[9]);
      row.report.sigma2 = std::stod(fields[10]);
      row.report.epsilon_forward = std::stod(fields[11]);
      row.report.epsilon_inverse = std::stod(fields[12]);
      row.report.ratio_bound_value = std::stod(fields[13]);
      row.report.ratio_actual = std::stod(fields[14]);
      row.report.ratio_applicable = fields[15] == "1";
      row.trial = std::stoi(fields[16]);
      row.engine_p_zero = std::stod(fields[17]);
      row.failed = fields[18] != "ok";
      if (row.failed) row.error = fields[18];
      rows.push_back(std::move(row));
    } catch (const std::invalid_argument&) {
      throw IoError(std::string(source) + ":" + std::to_string(line_no) +
                    ": malformed numeric field");
    }
  }
  return rows;
}

std::vector<ReportRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return parse_csv(in, path.string());
}

}  // namespace qpea
