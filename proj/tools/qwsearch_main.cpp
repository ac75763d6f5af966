#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwsearch/closedform.hpp"
#include "qwsearch/errors.hpp"
#include "qwsearch/fullsim.hpp"
#include "qwsearch/model.hpp"
#include "qwsearch/noise.hpp"
#include "qwsearch/resources.hpp"
#include "qwsearch/series.hpp"
#include "qwsearch/svg.hpp"
#include "qwsearch/validate.hpp"

namespace {

using qws::cli::format_number;
using qws::cli::Series;
using qws::cli::SeriesRow;
using qws::model::Init;
using qws::resources::Parity;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoFailure("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw IoFailure("write failed: " + path);
  }
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open for reading: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parity_match(Parity parity, long t) {
  switch (parity) {
    case Parity::Even:
      return t % 2 == 0;
    case Parity::Odd:
      return t % 2 == 1;
    case Parity::All:
      return true;
  }
  return false;
}

struct InstanceFlags {
  int n1 = 0;
  int n2 = 0;
  int k = 1;
  Init init = Init::VertexUniform;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--n1", f.n1, "size of partition X (holds the marked vertices)")
      ->required();
  cmd->add_option("--n2", f.n2, "size of partition Y")->required();
  cmd->add_option("--k", f.k, "number of marked vertices")
      ->capture_default_str();
  cmd->add_option("--init", f.init,
                  "initial state: s (vertex uniform) or sigma (edge uniform)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Init>{{"s", Init::VertexUniform},
                                      {"sigma", Init::EdgeUniform}}))
      ->default_str("s");
}

void add_parity_flag(CLI::App* cmd, Parity& parity) {
  cmd->add_option("--parity", parity, "step parity filter")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Parity>{{"even", Parity::Even},
                                        {"odd", Parity::Odd},
                                        {"all", Parity::All}}))
      ->default_str("even");
}

int cmd_params(const InstanceFlags& f, const std::string& report) {
  const auto inst = qws::model::make_instance(f.n1, f.n2, f.k, f.init);
  const auto a = qws::model::angles(inst);
  const double sin2theta = std::sin(2.0 * a.theta);
  const long opt_t = std::lround((M_PI / 2.0 - a.delta) / a.phi);
  if (report == "json") {
    nlohmann::json doc;
    doc["theta"] = a.theta;
    doc["delta"] = a.delta;
    doc["phi"] = a.phi;
    doc["sin2theta"] = sin2theta;
    doc["optimal_even_t"] = opt_t;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "theta = " << format_number(a.theta) << "\n"
              << "delta = " << format_number(a.delta) << "\n"
              << "phi = " << format_number(a.phi) << "\n"
              << "sin2theta = " << format_number(sin2theta) << "\n"
              << "optimal_even_t = " << opt_t << "\n";
  }
  return 0;
}

int cmd_evolve(const InstanceFlags& f, long steps, Parity parity,
               const std::string& backend, const std::string& out) {
  const auto inst = qws::model::make_instance(f.n1, f.n2, f.k, f.init);
  const bool closed_rows = backend == "closed" || backend == "both";
  const bool full_rows = backend == "full" || backend == "both";
  const bool both = backend == "both";

  Series series;
  if (both) {
    series.extra_headers = {"agreement"};
  }

  std::optional<qws::fullsim::StepOperator> u;
  qws::fullsim::ArcState psi;
  qws::fullsim::SubspaceBasis basis;
  if (full_rows) {
    u.emplace(qws::fullsim::build_step_operator(inst));
    psi = qws::fullsim::embed_initial(inst);
    basis = qws::fullsim::subspace_basis(inst);
  }

  for (long t = 0; t <= steps; ++t) {
    if (full_rows && t > 0) {
      u->apply_in_place(psi);
    }
    if (!parity_match(parity, t)) {
      continue;
    }
    const auto closed = qws::closedform::state_at(inst, t);
    qws::model::SubspaceAmplitudes projected{};
    std::optional<double> agreement;
    if (full_rows) {
      projected = qws::fullsim::project_to_subspace(psi, basis).first;
      if (both) {
        agreement = std::abs(projected.vec().dot(closed.vec()));
      }
    }
    if (closed_rows) {
      SeriesRow row;
      row.t = t;
      row.backend = "closed";
      row.P = qws::closedform::success_probability(inst, t);
      const double c = qws::closedform::coherence_at(inst, t);
      row.C_l1 = c;
      row.C_norm = qws::closedform::normalized_coherence(c);
      if (both) {
        row.extra = {agreement};
      }
      series.rows.push_back(row);
    }
    if (full_rows) {
      SeriesRow row;
      row.t = t;
      row.backend = "full";
      row.P = qws::fullsim::success_probability_full(psi, inst);
      const double s = std::abs(projected.m_ab) + std::abs(projected.m_ba) +
                       std::abs(projected.m_bc) + std::abs(projected.m_cb);
      const double c = s * s - 1.0;
      row.C_l1 = c;
      row.C_norm = qws::closedform::normalized_coherence(c);
      if (both) {
        row.extra = {agreement};
      }
      series.rows.push_back(row);
    }
  }
  write_output(out, qws::cli::emit_csv(qws::cli::series_to_table(series)));
  return 0;
}

int cmd_entangle(int n_qubits, long steps, Parity parity,
                 const std::string& out) {
  const long size = 1L << (n_qubits - 1);
  const auto inst = qws::model::make_instance(
      static_cast<int>(size), static_cast<int>(size), 1, Init::VertexUniform);
  const qws::resources::EncodingParams enc{n_qubits};
  const auto rows = qws::resources::resource_series(inst, enc, steps, parity);
  Series series;
  for (const auto& r : rows) {
    SeriesRow row;
    row.t = r.t;
    row.backend = "closed";
    row.P = r.P;
    row.C_l1 = r.C_l1;
    row.C_norm = r.C_norm;
    row.sC_closed = r.sC_closed;
    row.sC_brute = r.sC_brute;
    row.MC = r.MC;
    series.rows.push_back(row);
  }
  write_output(out, qws::cli::emit_csv(qws::cli::series_to_table(series)));
  return 0;
}

int cmd_noise(const InstanceFlags& f, long steps, Parity parity,
              std::vector<double> alphas, const std::string& out) {
  if (alphas.empty()) {
    alphas.push_back(0.5);
  }
  const auto inst = qws::model::make_instance(f.n1, f.n2, f.k, f.init);
  std::vector<qws::noise::NoiseConfig> configs;
  for (double a : alphas) {
    configs.push_back(qws::noise::make_noise_config(a));
  }
  const bool single = alphas.size() == 1;

  Series series;
  if (!single) {
    for (double a : alphas) {
      series.extra_headers.push_back("Q_noisy_a" + format_number(a));
      series.extra_headers.push_back("C_l1_noisy_a" + format_number(a));
    }
  }

  std::vector<std::vector<qws::resources::DensityMatrix>> trajs;
  trajs.reserve(configs.size());
  for (const auto& cfg : configs) {
    trajs.push_back(qws::noise::noisy_evolution(inst, cfg, steps));
  }

  std::vector<double> q_dev(alphas.size(), 0.0);
  std::vector<double> c_dev(alphas.size(), 0.0);
  for (long t = 0; t <= steps; ++t) {
    if (!parity_match(parity, t)) {
      continue;
    }
    SeriesRow row;
    row.t = t;
    row.backend = "closed";
    row.P = qws::closedform::success_probability(inst, t);
    const double c = qws::closedform::coherence_at(inst, t);
    row.C_l1 = c;
    row.C_norm = qws::closedform::normalized_coherence(c);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const double q = trajs[i][t](0, 0).real();
      const double cn = qws::resources::l1_coherence(trajs[i][t]);
      q_dev[i] = std::max(
          q_dev[i],
          std::abs(q - qws::noise::noisy_success_closed(inst, configs[i], t)));
      c_dev[i] = std::max(
          c_dev[i],
          std::abs(cn -
                   qws::noise::noisy_coherence_closed(inst, configs[i], t)));
      if (single) {
        row.Q_noisy = q;
        row.C_l1_noisy = cn;
      } else {
        row.extra.push_back(q);
        row.extra.push_back(cn);
      }
    }
    series.rows.push_back(row);
  }
  write_output(out, qws::cli::emit_csv(qws::cli::series_to_table(series)));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const bool ok = q_dev[i] <= 1e-10 && c_dev[i] <= 1e-10;
    std::cerr << "alpha=" << format_number(alphas[i])
              << ": closed-form agreement " << (ok ? "true" : "false")
              << " (max Q deviation " << format_number(q_dev[i], 3)
              << ", max C deviation " << format_number(c_dev[i], 3) << ")\n";
  }
  return 0;
}

int cmd_validate(bool quick, bool inject_no_oracle, double tol,
                 const std::string& report) {
  qws::cli::ValidateOptions opts;
  opts.quick = quick;
  opts.inject_no_oracle = inject_no_oracle;
  if (tol > 0.0) {
    opts.pairwise_tolerance = tol;
  }
  const auto results = qws::cli::run_validation(opts);
  if (report == "json") {
    std::cout << qws::cli::render_json(results);
  } else {
    std::cout << qws::cli::render_text(results);
  }
  return qws::cli::all_hard_checks_pass(results) ? 0 : 1;
}

int cmd_plot(const std::string& input, const std::vector<std::string>& cols,
             const std::string& out) {
  const auto table = qws::cli::parse_csv(read_input(input));
  qws::cli::PlotSpec spec;
  spec.columns = cols;
  // a table without the step column was not produced by this tool, so it
  // is a format problem rather than a usage problem
  if (std::find(table.header.begin(), table.header.end(), spec.x_column) ==
      table.header.end()) {
    throw qws::CsvFormatError("input has no '" + spec.x_column + "' column");
  }
  write_output(out, qws::cli::render_line_chart(table, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coined quantum walk search on complete bipartite graphs: exact "
      "closed-form dynamics, a full arc-space simulator, coherence and "
      "entanglement measures, depolarizing noise, and a cross-validation "
      "harness."};
  app.require_subcommand(1);

  InstanceFlags params_flags;
  std::string params_report = "text";
  auto* params = app.add_subcommand(
      "params", "print the angle parameters and derived quantities");
  add_instance_flags(params, params_flags);
  params->add_option("--report", params_report, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  InstanceFlags evolve_flags;
  long evolve_steps = 30;
  Parity evolve_parity = Parity::Even;
  std::string evolve_backend = "closed";
  std::string evolve_out;
  auto* evolve = app.add_subcommand(
      "evolve", "success probability and coherence series as CSV");
  add_instance_flags(evolve, evolve_flags);
  evolve->add_option("--steps", evolve_steps, "largest step count")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_parity_flag(evolve, evolve_parity);
  evolve->add_option("--backend", evolve_backend, "evolution backend")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed", "full", "both"}));
  evolve->add_option("--out", evolve_out, "output path (default stdout)");

  int entangle_qubits = 0;
  long entangle_steps = 100;
  Parity entangle_parity = Parity::Even;
  std::string entangle_out;
  auto* entangle = app.add_subcommand(
      "entangle", "entanglement measure series for the qubit encoding");
  entangle
      ->add_option("--n-qubits", entangle_qubits,
                   "qubits per register (graph size 2^(n-1) per side, k=1)")
      ->required()
      ->check(CLI::Range(2, 24));
  entangle->add_option("--steps", entangle_steps, "largest step count")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_parity_flag(entangle, entangle_parity);
  entangle->add_option("--out", entangle_out, "output path (default stdout)");

  InstanceFlags noise_flags;
  long noise_steps = 30;
  Parity noise_parity = Parity::Even;
  std::vector<double> noise_alphas;
  std::string noise_out;
  auto* noise = app.add_subcommand(
      "noise", "noiseless vs depolarizing-noise series as CSV");
  add_instance_flags(noise, noise_flags);
  noise->add_option("--steps", noise_steps, "largest step count")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_parity_flag(noise, noise_parity);
  noise->add_option("--alpha", noise_alphas,
                    "depolarizing parameters (default 0.5)")
      ->delimiter(',');
  noise->add_option("--out", noise_out, "output path (default stdout)");

  bool validate_quick = false;
  bool validate_inject = false;
  double validate_tol = 0.0;
  std::string validate_report = "text";
  auto* validate = app.add_subcommand(
      "validate", "run the cross-validation suite; exit 1 on hard failure");
  validate->add_flag("--quick", validate_quick, "smaller instance grid");
  validate->add_flag("--inject-no-oracle", validate_inject,
                     "self-test fixture: drop the oracle from the walk");
  validate->add_option("--tol", validate_tol,
                       "override the pairwise-concurrence soft tolerance");
  validate->add_option("--report", validate_report, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string plot_input;
  std::vector<std::string> plot_cols;
  std::string plot_out;
  auto* plot =
      app.add_subcommand("plot", "render a CSV produced by this tool as SVG");
  plot->add_option("input", plot_input, "input CSV path")->required();
  plot->add_option("--cols", plot_cols,
                   "columns to plot (default: every numeric column)")
      ->delimiter(',');
  plot->add_option("--out", plot_out, "output path (default stdout)");

  int rc = 0;
  params->callback([&]() { rc = cmd_params(params_flags, params_report); });
  evolve->callback([&]() {
    rc = cmd_evolve(evolve_flags, evolve_steps, evolve_parity, evolve_backend,
                    evolve_out);
  });
  entangle->callback([&]() {
    rc = cmd_entangle(entangle_qubits, entangle_steps, entangle_parity,
                      entangle_out);
  });
  noise->callback([&]() {
    rc = cmd_noise(noise_flags, noise_steps, noise_parity, noise_alphas,
                   noise_out);
  });
  validate->callback([&]() {
    rc = cmd_validate(validate_quick, validate_inject, validate_tol,
                      validate_report);
  });
  plot->callback([&]() { rc = cmd_plot(plot_input, plot_cols, plot_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qws::DimensionTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qws::EncodingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const qws::CsvFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const qws::SubspaceLeak& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qws::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
