// Command-line frontend: coherence and duality reports for states stored as
// JSON files, correlation reports for Bell-diagonal parameter triples,
// figure-data CSV emission, and the property-suite runner.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/duality.hpp"
#include "qcoh/entropy.hpp"
#include "qcoh/io.hpp"
#include "qcoh/state.hpp"
#include "qcoh/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qcoh;

// Exit-code contract: 0 success, 1 verification failure, 2 malformed input,
// 3 dimension mismatch, 4 I/O failure.
int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DimensionMismatch:
      return 3;
    case ErrorKind::IoFailure:
      return 4;
    default:
      return 2;
  }
}

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Basis resolve_basis(const std::string& spec, int dim) {
  if (spec == "computational") return Basis::computational(dim);
  if (spec == "fourier") return fourier_basis(dim);
  Basis b = read_basis_file(spec);
  if (b.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "basis dim " + std::to_string(b.dim()) +
                    " does not match state dim " + std::to_string(dim));
  }
  return b;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

void emit_report(const ordered_json& report, const std::string& format,
                 const std::string& out_path) {
  if (format == "csv") {
    std::string header, row;
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it.value().is_array() || it.value().is_object()) continue;
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      if (it.value().is_number_float()) {
        row += fmt10(it.value().get<double>());
      } else {
        row += it.value().dump();
      }
    }
    emit(header + "\n" + row + "\n", out_path);
  } else {
    emit(report.dump(2) + "\n", out_path);
  }
}

int cmd_compute(const std::string& state_path, const std::string& basis_spec,
                const std::string& format, const std::string& out_path) {
  DensityMatrix rho = read_state_file(state_path);
  Basis b = resolve_basis(basis_spec, rho.dim());
  CoherenceSplit split = coherence_split(rho, b);
  ordered_json report{{"dim", rho.dim()},
                      {"entropy", von_neumann(rho)},
                      {"bi_coherence", split.total},
                      {"basis_coherence", split.basis_part},
                      {"residual", split.residual}};
  emit_report(report, format, out_path);
  return 0;
}

int cmd_decompose(const std::string& state_path,
                  const std::vector<std::string>& basis_specs,
                  const std::string& format, const std::string& out_path) {
  DensityMatrix rho = read_state_file(state_path);
  std::vector<Basis> bases;
  for (const std::string& spec : basis_specs) {
    bases.push_back(resolve_basis(spec, rho.dim()));
  }
  ChainReport chain = chain_split(rho, bases);
  if (format == "csv") {
    std::string text = "step,basis_coherence,residual\n";
    for (std::size_t k = 0; k < chain.step_coherences.size(); ++k) {
      text += std::to_string(k + 1) + "," + fmt10(chain.step_coherences[k]) +
              "," + fmt10(chain.residuals[k]) + "\n";
    }
    emit(text, out_path);
    return 0;
  }
  ordered_json steps = ordered_json::array();
  for (std::size_t k = 0; k < chain.step_coherences.size(); ++k) {
    steps.push_back({{"basis_coherence", chain.step_coherences[k]},
                     {"residual", chain.residuals[k]}});
  }
  ordered_json report{{"dim", rho.dim()},
                      {"total", chain.total},
                      {"steps", std::move(steps)},
                      {"terminal_residual", chain.terminal_residual}};
  emit_report(report, format, out_path);
  return 0;
}

int cmd_duality(const std::string& state_path, const std::string& basis_spec,
                const std::string& format, const std::string& out_path) {
  DensityMatrix rho = read_state_file(state_path);
  Basis b = resolve_basis(basis_spec, rho.dim());
  DualityBudget budget = duality_budget(rho, b);
  ordered_json report{{"wave", budget.wave},
                      {"particle", budget.particle},
                      {"entanglement", budget.entanglement},
                      {"total", budget.total}};
  emit_report(report, format, out_path);
  return 0;
}

int cmd_bell_diagonal(const std::vector<double>& c, int grid,
                      const std::string& format,
                      const std::string& out_path) {
  BellDiagonalParams params{c[0], c[1], c[2]};
  CorrelationReport r = bd_report(params);
  ordered_json report{{"bi_coherence", r.bi_coherence},
                      {"comp_coherence", r.comp_coherence},
                      {"discord", r.discord},
                      {"entanglement", r.entanglement},
                      {"hierarchy_ok", r.hierarchy_ok}};
  if (grid > 0) {
    report["discord_oracle"] = discord_oracle(bell_diagonal(params), grid);
  }
  emit_report(report, format, out_path);
  return 0;
}

std::string figure_surface_rows(bool include_y) {
  // Bloch-ball slice at x = 0.4: the full (y, z) grid for the surface data,
  // or the z sweep at y = 0.2 for the line data.
  std::string text =
      include_y ? "y,z,C,C_comp,res_comp,C_x,res_x\n"
                : "z,C,C_comp,res_comp,C_x,res_x\n";
  int range = include_y ? 50 : 200;
  double step = include_y ? 0.02 : 0.005;
  for (int i = include_y ? -50 : 0; i <= (include_y ? 50 : 0); ++i) {
    for (int j = -range; j <= range; ++j) {
      double y = include_y ? i * step : 0.2;
      double z = j * step;
      BlochVector v{0.4, y, z};
      if (v.squared_norm() > 1.0 + 1e-12) continue;
      CoherenceSplit comp = qubit_split_closed_form(v, BlochAxis::Z);
      CoherenceSplit flip = qubit_split_closed_form(v, BlochAxis::X);
      if (include_y) text += fmt10(y) + ",";
      text += fmt10(z) + "," + fmt10(comp.total) + "," +
              fmt10(comp.basis_part) + "," + fmt10(comp.residual) + "," +
              fmt10(flip.basis_part) + "," + fmt10(flip.residual) + "\n";
    }
  }
  return text;
}

std::string figure_sweep_rows() {
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
  std::string text = "p,wave,particle,entanglement\n";
  for (const DualityRow& row :
       bitflip_duality_sweep(grid, Basis::computational(2))) {
    text += fmt10(row.p) + "," + fmt10(row.wave) + "," + fmt10(row.particle) +
            "," + fmt10(row.entanglement) + "\n";
  }
  return text;
}

int cmd_figure(const std::string& which, const std::string& out_path) {
  std::string text;
  if (which == "fig2") {
    text = figure_surface_rows(true);
  } else if (which == "fig3") {
    text = figure_surface_rows(false);
  } else {
    text = figure_sweep_rows();
  }
  emit(text, out_path);
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, const std::string& out_path) {
  VerifySummary summary = run_suites(standard_suites(), seed, trials);
  emit(summary_to_json(summary).dump(2) + "\n", out_path);
  return summary.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Basis-independent quantum-coherence calculator: coherence splits, "
      "wave-particle budgets, correlation ladders, figure data, and "
      "self-verification"};
  app.require_subcommand(1);

  std::string state_path, basis_spec = "computational", out_path;
  std::string format = "json";
  std::vector<std::string> basis_specs;
  std::vector<double> c_params;
  std::string which;
  std::uint64_t seed = 42;
  int trials = 200;
  int grid = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "Write output to this file");
  };

  CLI::App* compute =
      app.add_subcommand("compute", "Coherence split of a state in a basis");
  compute->add_option("--state", state_path, "State JSON file")->required();
  compute->add_option("--basis", basis_spec,
                      "computational, fourier, or a basis JSON file");
  add_format(compute);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Coherence chain through a sequence of bases");
  decompose->add_option("--state", state_path, "State JSON file")->required();
  decompose
      ->add_option("--bases", basis_specs,
                   "Basis specs, applied in order (at least one)")
      ->required()
      ->expected(1, -1);
  add_format(decompose);

  CLI::App* duality = app.add_subcommand(
      "duality", "Wave, particle, and entanglement budget of a state");
  duality->add_option("--state", state_path, "State JSON file")->required();
  duality->add_option("--basis", basis_spec,
                      "computational, fourier, or a basis JSON file");
  add_format(duality);

  CLI::App* bell = app.add_subcommand(
      "bell-diagonal", "Correlation ladder of a Bell-diagonal state");
  bell->add_option("--c", c_params, "Correlation triple c1 c2 c3")
      ->required()
      ->expected(3);
  bell->add_option("--grid", grid,
                   "Also run the discord grid search at this resolution")
      ->check(CLI::Range(2, 1000));
  add_format(bell);

  CLI::App* figure =
      app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("which", which, "Which dataset")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig5"}));
  figure->add_option("--out", out_path, "Write CSV to this file");

  CLI::App* verify =
      app.add_subcommand("verify", "Run every property suite");
  verify->add_option("--seed", seed, "Random seed")->envname("QCOH_SEED");
  verify->add_option("--trials", trials, "Trial-count scale (200 = standard)")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--out", out_path, "Write the JSON summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // a bad command line is malformed input
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(state_path, basis_spec, format, out_path);
    }
    if (decompose->parsed()) {
      return cmd_decompose(state_path, basis_specs, format, out_path);
    }
    if (duality->parsed()) {
      return cmd_duality(state_path, basis_spec, format, out_path);
    }
    if (bell->parsed()) {
      return cmd_bell_diagonal(c_params, grid, format, out_path);
    }
    if (figure->parsed()) {
      return cmd_figure(which, out_path);
    }
    return cmd_verify(seed, trials, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
