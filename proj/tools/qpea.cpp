// Command-line front end: generate ensembles, analyze matrices, simulate
// the modified phase estimation circuit, and run estimated-vs-computed
// experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qpea/experiment.hpp"
#include "qpea/io.hpp"
#include "qpea/plot.hpp"
#include "qpea/probability.hpp"
#include "qpea/qpe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void print_report(const qpea::ProbabilityReport& r) {
  std::cout << "N = " << r.order << '\n'
            << "alpha1_sq = " << fmt(r.alpha1_sq) << '\n'
            << "p_reg2 = " << fmt(r.p_reg2) << '\n'
            << "p_reg1 = " << fmt(r.p_reg1) << '\n'
            << "alpha1_sq_est = " << fmt(r.alpha1_sq_est) << '\n'
            << "p_reg2_est = " << fmt(r.p_reg2_est) << '\n'
            << "p_reg1_est = " << fmt(r.p_reg1_est) << '\n'
            << "sigma1 = " << fmt(r.sigma1) << '\n'
            << "sigma2 = " << fmt(r.sigma2) << '\n'
            << "lambda1 = " << fmt(r.lambda1) << '\n'
            << "lambda2 = " << fmt(r.lambda2) << '\n'
            << "epsilon_forward = " << fmt(r.epsilon_forward) << '\n'
            << "epsilon_inverse = " << fmt(r.epsilon_inverse) << '\n'
            << "ratio_bound = " << fmt(r.ratio_bound_value) << '\n'
            << "ratio_actual = " << fmt(r.ratio_actual) << '\n'
            << "ratio_applicable = " << (r.ratio_applicable ? 1 : 0) << '\n';
}

qpea::SymmetricMatrix load_input(const std::string& matrix_path,
                                 const std::string& lham_path) {
  if (!matrix_path.empty() && !lham_path.empty())
    throw qpea::ValidationError("pass either --matrix or --lham, not both");
  if (!matrix_path.empty()) return qpea::read_matrix(matrix_path);
  if (!lham_path.empty())
    return qpea::build_local_hamiltonian(qpea::read_lham(lham_path));
  throw qpea::ValidationError("an input file is required (--matrix or --lham)");
}

struct GenOptions {
  std::string kind = "random-symmetric";
  long long order = 0;
  int qubits = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  if (opt.out.empty()) throw qpea::ValidationError("--out is required");
  const qpea::EnsembleKind kind = qpea::ensemble_kind_from_name(opt.kind);
  if (kind == qpea::EnsembleKind::RandomSymmetric) {
    if (opt.order < 2) throw qpea::ValidationError("--N must be >= 2");
    qpea::write_matrix(
        qpea::gen_random_symmetric(opt.order, opt.density, opt.seed), opt.out);
  } else {
    if (opt.qubits < 3) throw qpea::ValidationError("--n must be >= 3");
    const auto model = kind == qpea::EnsembleKind::LocalH1 ? qpea::LocalModel::H1
                                                           : qpea::LocalModel::H2;
    qpea::write_lham(qpea::gen_local_spec(opt.qubits, model, opt.seed), opt.out);
  }
  return kExitOk;
}

struct SimulateOptions {
  std::string matrix, lham, out;
  int phase_bits = 8;
  std::string engine = "spectral";
  bool output_hadamards = true;
  double guard = -1.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool summary = false;
};

int run_simulate(const SimulateOptions& opt) {
  const qpea::SymmetricMatrix m = load_input(opt.matrix, opt.lham);

  qpea::QpeConfig cfg;
  cfg.phase_bits = opt.phase_bits;
  cfg.output_hadamards = opt.output_hadamards;
  cfg.guard = opt.guard;
  cfg.engine = opt.engine == "dense" ? qpea::Engine::Dense : qpea::Engine::Spectral;

  qpea::JointDistribution d;
  if (cfg.engine == qpea::Engine::Dense) {
    d = qpea::run_dense(m, cfg);
  } else {
    const qpea::Spectrum s = qpea::eigendecompose(m);
    d = qpea::run_spectral(s, qpea::eigenvector_sums(s), cfg);
  }

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw qpea::IoError("cannot open " + opt.out + " for writing");
    if (opt.shots > 0) {
      const auto counts = qpea::sample(d, opt.shots, opt.seed);
      out << "k,b,count\n";
      for (Eigen::Index k = 0; k < d.bins(); ++k)
        for (Eigen::Index b = 0; b < d.basis_states(); ++b) {
          const auto c = counts[static_cast<std::size_t>(k * d.basis_states() + b)];
          if (c > 0) out << k << ',' << b << ',' << c << '\n';
        }
    } else {
      out << "k,b,prob\n";
      for (Eigen::Index k = 0; k < d.bins(); ++k)
        for (Eigen::Index b = 0; b < d.basis_states(); ++b)
          if (d.probs(k, b) > 0.0)
            out << k << ',' << b << ',' << fmt(d.probs(k, b)) << '\n';
    }
  }

  if (opt.summary) {
    const qpea::MeasurementSummary s = qpea::condition_on_zero(d);
    std::cout << "p_zero = " << fmt(s.p_zero) << '\n'
              << "top_bin = " << s.top_bin << '\n'
              << "eigenvalue_estimate = " << fmt(s.eigenvalue_estimate) << '\n'
              << "conditional_top_mass = "
              << fmt(s.conditional_phase_dist(s.top_bin)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Success-probability toolkit for phase estimation with an equal-superposition input"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random matrix or local-Hamiltonian spec");
  gen_cmd->add_option("--kind", gen.kind, "random-symmetric | local-h1 | local-h2");
  gen_cmd->add_option("--N", gen.order, "matrix order (random-symmetric)");
  gen_cmd->add_option("--n", gen.qubits, "qubit count (local kinds)");
  gen_cmd->add_option("--density", gen.density, "off-diagonal density");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output file")->required();

  std::string analyze_matrix, analyze_lham, analyze_csv;
  auto* analyze_cmd = app.add_subcommand("analyze", "Probability report for one matrix");
  analyze_cmd->add_option("--matrix", analyze_matrix, "symm-v1 input");
  analyze_cmd->add_option("--lham", analyze_lham, "lham-v1 input");
  analyze_cmd->add_option("--csv", analyze_csv, "also write a one-row CSV");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Exact finite-m circuit simulation");
  sim_cmd->add_option("--matrix", sim.matrix, "symm-v1 input");
  sim_cmd->add_option("--lham", sim.lham, "lham-v1 input");
  sim_cmd->add_option("--m", sim.phase_bits, "phase-register qubits");
  sim_cmd->add_option("--engine", sim.engine, "dense | spectral");
  sim_cmd->add_option("--output-hadamards", sim.output_hadamards,
                      "apply output Hadamards to the second register");
  sim_cmd->add_option("--guard", sim.guard, "phase guard in [0,1); default 2^-m");
  sim_cmd->add_option("--shots", sim.shots, "sample instead of exact probabilities");
  sim_cmd->add_option("--seed", sim.seed, "sampling seed");
  sim_cmd->add_option("--out", sim.out, "CSV of (k, b, prob) or counts");
  sim_cmd->add_flag("--summary", sim.summary, "print measurement summary");

  std::string exp_config, exp_csv, exp_svg;
  auto* exp_cmd = app.add_subcommand("experiment", "Run an ensemble experiment from a config file");
  exp_cmd->add_option("--config", exp_config, "key = value config file")->required();
  exp_cmd->add_option("--csv", exp_csv, "override CSV output path");
  exp_cmd->add_option("--svg", exp_svg, "override SVG output path");

  std::string report_csv, report_out;
  auto* report_cmd = app.add_subcommand("report", "Re-plot an experiment CSV as SVG");
  report_cmd->add_option("--csv", report_csv, "experiment CSV")->required();
  report_cmd->add_option("--out", report_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);

    if (*gen_cmd) return run_gen(gen);

    if (*analyze_cmd) {
      const qpea::SymmetricMatrix m = load_input(analyze_matrix, analyze_lham);
      const qpea::ProbabilityReport r = qpea::full_report(m);
      print_report(r);
      if (!analyze_csv.empty()) {
        qpea::ReportTable table;
        qpea::ReportRow row;
        row.order = r.order;
        row.report = r;
        table.rows.push_back(row);
        table.aggregates = qpea::compute_aggregates(table.rows);
        qpea::emit_csv(table, std::filesystem::path(analyze_csv));
      }
      return kExitOk;
    }

    if (*sim_cmd) return run_simulate(sim);

    if (*exp_cmd) {
      qpea::ExperimentConfig config = qpea::read_experiment_config(exp_config);
      if (!exp_csv.empty()) config.csv_path = exp_csv;
      if (!exp_svg.empty()) config.svg_path = exp_svg;
      const qpea::ReportTable table = qpea::run_experiment(config);
      if (!config.csv_path.empty()) qpea::emit_csv(table, config.csv_path);
      if (!config.svg_path.empty()) qpea::emit_plot(table, config.svg_path);
      std::cout << "trials = " << table.rows.size() << '\n'
                << "failures = " << table.aggregates.failures << '\n'
                << "median_p_reg1 = " << fmt(table.aggregates.median_p_reg1) << '\n'
                << "rank_corr_p_reg1 = " << fmt(table.aggregates.rank_corr_p_reg1)
                << '\n';
      return kExitOk;
    }

    if (*report_cmd) {
      qpea::emit_plot(qpea::read_csv(report_csv), std::filesystem::path(report_out));
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const qpea::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qpea::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
