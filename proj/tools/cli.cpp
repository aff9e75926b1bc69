// Copyright 2026 The divisi Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "divisi/channels.hpp"
#include "divisi/divisibility.hpp"
#include "divisi/scenarios.hpp"
#include "divisi/serialize.hpp"

namespace divisi::cli {
namespace {

// Everything the parsed command line asks for.
struct RunConfig {
  std::string command;
  std::string scenario;
  std::string mode = "exact";
  std::string metric = "trace";
  std::string format = "table";
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  std::string unitary_path;
  std::string state1_path;
  std::string state2_path;
  std::string state_path;
  std::string kraus_path;
  std::string env_state_path;
  std::string init1_path;
  std::string init2_path;
  std::string out_dir;
  std::string split;
  std::string system;
  bool repair_polar = false;
  bool lenient = false;
  bool correlated = false;
  std::size_t restarts = 8;
  std::size_t iters = 2000;
  double step = 0.25;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  // Avoid printing "-0.000000" for tiny negative round-off.
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

Metric metric_of(const RunConfig& cfg) {
  return cfg.metric == "hs" ? Metric::HilbertSchmidt : Metric::TraceNorm;
}

double verdict_tolerance(const RunConfig& cfg, double builtin_default) {
  if (cfg.tolerance) return *cfg.tolerance;
  if (builtin_default != kDefaultVerdictTol) return builtin_default;
  if (const char* env = std::getenv("DIVISI_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) {
      throw UsageError(std::string("DIVISI_TOL is not a nonnegative number: ") + env);
    }
    return v;
  }
  return builtin_default;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad qubit index list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty qubit index list");
  return out;
}

Bipartition parse_split(const RunConfig& cfg, std::size_t total_qubits) {
  if (!cfg.split.empty() && !cfg.system.empty()) {
    throw UsageError("--split and --system are mutually exclusive");
  }
  if (!cfg.system.empty()) return Bipartition::from_system(parse_index_list(cfg.system), total_qubits);
  if (cfg.split.empty()) throw UsageError("one of --split or --system is required");
  const auto colon = cfg.split.find(':');
  if (colon == std::string::npos) throw UsageError("--split must look like S:E, e.g. 2:1");
  std::size_t ns = 0;
  std::size_t ne = 0;
  try {
    ns = std::stoul(cfg.split.substr(0, colon));
    ne = std::stoul(cfg.split.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--split must look like S:E, e.g. 2:1");
  }
  if (ns + ne != total_qubits) {
    throw DimensionError("--split " + cfg.split + " does not cover the unitary's " +
                         std::to_string(total_qubits) + " qubits");
  }
  return Bipartition::contiguous(ns, ne);
}

StateTolerance state_tolerance(const RunConfig& cfg) {
  return cfg.lenient ? StateTolerance::lenient() : StateTolerance::strict();
}

double unitarity_tolerance(const RunConfig& cfg) {
  return cfg.lenient ? kPaperUnitarityTol : kDefaultUnitarityTol;
}

ComplexMatrix load_unitary(const RunConfig& cfg) {
  ComplexMatrix u = unitary_from_json(read_json_file(cfg.unitary_path));
  if (cfg.repair_polar) u = repair_polar(u);
  return u;
}

UnitaryDilation load_dilation(const RunConfig& cfg) {
  ComplexMatrix u = load_unitary(cfg);
  std::size_t n = 0;
  while (qubit_dim(n) < u.rows()) ++n;
  Bipartition split = parse_split(cfg, n);
  DensityMatrix env = cfg.env_state_path.empty()
                          ? density_from_pure(PureState::basis(
                                std::string(split.environment().size(), '0')))
                          : state_from_json(read_json_file(cfg.env_state_path),
                                            state_tolerance(cfg));
  return UnitaryDilation::make(std::move(u), std::move(split), std::move(env),
                               unitarity_tolerance(cfg));
}

std::vector<Complex> load_amplitudes(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("amps") || !j.at("amps").is_array()) {
    throw FormatError(path + ": initial witness states need an \"amps\" array");
  }
  std::vector<Complex> amps;
  for (const Json& z : j.at("amps")) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw FormatError(path + ": amplitudes must be [re, im]");
    }
    amps.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return amps;
}

void print_table(std::ostream& out, const AnalysisReport& r,
                 const std::array<double, 6>* published = nullptr) {
  const StepReport& s = r.step;
  const std::string label =
      s.metric == Metric::TraceNorm ? "trace distance" : "Hilbert-Schmidt distance";
  const std::array<const char*, 6> rows = {"System input",      "System output",
                                           "Environment input", "Environment output",
                                           "Full input state",  "Full output state"};
  const std::array<double, 6> values = {s.d_sys_in,  s.d_sys_out,  s.d_env_in,
                                        s.d_env_out, s.d_full_in, s.d_full_out};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i] << ' ' << label << ": " << fixed6(values[i]);
    if (published) out << " (published " << fixed6((*published)[i]) << ')';
    out << '\n';
  }
  out      << "System step: " << to_string(s.sys_verdict) << '\n'
      << "Environment step: " << to_string(s.env_verdict) << '\n'
      << "Full step: " << to_string(s.full_verdict) << '\n'
      << "System channel: " << (r.system_channel.unital ? "unital" : "non-unital")
      << " (deviation " << fixed6(r.system_channel.deviation) << ")\n";

  const Theorem2Report& t = r.theorem2;
  auto flag = [](const BoundCheck& b) {
    return std::string(b.holds ? "holds" : "fails") + " (slack " + fixed6(b.slack) + ")";
  };
  out << "gamma: " << fixed6(t.gamma) << " (output " << fixed6(t.gamma_out) << ")\n"
      << "alpha_S: " << fixed6(t.alpha_s) << "  alpha_E: " << fixed6(t.alpha_e) << '\n'
      << "beta_S: " << fixed6(t.beta_s) << "  beta_E: " << fixed6(t.beta_e) << '\n'
      << "T_SE: " << fixed6(t.t_se) << "  T_S: " << fixed6(t.t_s) << "  T_E: " << fixed6(t.t_e)
      << '\n'
      << "alpha_S*alpha_E <= gamma: " << flag(t.product_bound_in) << '\n'
      << "beta_S*beta_E <= gamma: " << flag(t.product_bound_out) << '\n'
      << "T_S*T_E <= T_SE: " << flag(t.ts_te_bound) << '\n'
      << "beta_S*beta_E - alpha_S*alpha_E: " << fixed6(t.eq6_lhs) << '\n'
      << "(beta_S-alpha_S)*beta_E + (beta_E-alpha_E)*alpha_S: " << fixed6(t.eq7_lhs) << '\n'
      << "(beta_S-alpha_S)*alpha_E + (beta_E-alpha_E)*beta_S: " << fixed6(t.eq8_lhs) << '\n';
}

void emit(std::ostream& out, const RunConfig& cfg, const AnalysisReport& report,
          const std::vector<std::string>* warnings,
          const std::array<double, 6>* published = nullptr) {
  if (cfg.format == "json") {
    Json j = to_json(report);
    if (warnings) j["warnings"] = *warnings;
    out << j.dump(2) << '\n';
    return;
  }
  print_table(out, report, published);
  if (warnings) {
    for (const std::string& w : *warnings) out << "warning: " << w << '\n';
  }
}

int cmd_scenario(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = build_scenario(parse_scenario_name(cfg.scenario), parse_mode(cfg.mode));
  const double tol = verdict_tolerance(cfg, s.verdict_tolerance());
  ScenarioReport rep = run_scenario(s, metric_of(cfg));
  if (tol != s.verdict_tolerance()) {
    rep.analysis = analyze(s.dilation(), s.s1, s.s2, metric_of(cfg), tol);
  }
  if (cfg.format == "table") {
    out << "Scenario: " << to_string(s.name) << " (" << to_string(s.mode) << ")\n";
  }
  const bool paper = s.mode == Mode::PaperTruncated;
  const std::array<double, 6> published = printed_table(s.name);
  const bool annotate = paper && metric_of(cfg) == Metric::TraceNorm;
  emit(out, cfg, rep.analysis, paper ? &rep.warnings : nullptr, annotate ? &published : nullptr);
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const UnitaryDilation d = load_dilation(cfg);
  const DensityMatrix s1 = state_from_json(read_json_file(cfg.state1_path), state_tolerance(cfg));
  const DensityMatrix s2 = state_from_json(read_json_file(cfg.state2_path), state_tolerance(cfg));
  const AnalysisReport rep =
      analyze(d, s1, s2, metric_of(cfg), verdict_tolerance(cfg, kDefaultVerdictTol));
  emit(out, cfg, rep, nullptr);
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const UnitaryDilation d = load_dilation(cfg);
  WitnessConfig wc;
  wc.restarts = cfg.restarts;
  wc.iters = cfg.iters;
  wc.step = cfg.step;
  wc.seed = cfg.seed;
  wc.correlated = cfg.correlated;
  if (cfg.init1_path.empty() != cfg.init2_path.empty()) {
    throw UsageError("--init1 and --init2 must be given together");
  }
  if (!cfg.init1_path.empty()) {
    wc.initial_pair.emplace(load_amplitudes(cfg.init1_path), load_amplitudes(cfg.init2_path));
  }
  out << to_json(witness_search(d, wc)).dump(2) << '\n';
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const int given = !cfg.unitary_path.empty() + !cfg.state_path.empty() +
                    !cfg.kraus_path.empty() + !cfg.scenario.empty();
  if (given != 1) {
    throw UsageError("validate needs exactly one of --unitary, --state, --kraus, --scenario");
  }
  if (!cfg.unitary_path.empty()) {
    const ComplexMatrix u = load_unitary(cfg);
    const double dev = unitarity_deviation(u);
    if (dev > unitarity_tolerance(cfg)) {
      throw NonUnitaryError("matrix is not unitary: unitarity deviation " + fixed6(dev), dev);
    }
    out << "ok: unitary on " << unitary_to_json(u)["qubits"].get<std::size_t>()
        << " qubits (unitarity deviation " << dev << ")\n";
  } else if (!cfg.state_path.empty()) {
    const DensityMatrix rho = state_from_json(read_json_file(cfg.state_path), state_tolerance(cfg));
    out << "ok: state on " << rho.qubits() << " qubits (purity " << fixed6(purity(rho)) << ")\n";
  } else if (!cfg.kraus_path.empty()) {
    const KrausChannel k = kraus_from_json(read_json_file(cfg.kraus_path));
    const double min_eig = hermitian_eigvals(choi_matrix(k)).front();
    if (min_eig < -1e-9) {
      throw ValidationError("channel is not completely positive: Choi min eigenvalue " +
                            std::to_string(min_eig));
    }
    out << "ok: channel with " << k.ops().size() << " Kraus operators (completeness deviation "
        << k.completeness_deviation() << ")\n";
  } else {
    const Scenario s = build_scenario(parse_scenario_name(cfg.scenario), parse_mode(cfg.mode));
    const UnitaryDilation d = s.dilation();
    out << "ok: scenario " << to_string(s.name) << " (" << to_string(s.mode)
        << "), unitarity deviation " << d.unitarity_deviation() << '\n';
  }
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = build_scenario(parse_scenario_name(cfg.scenario), parse_mode(cfg.mode));
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  write_json_file(dir / "unitary.json", unitary_to_json(s.u));
  write_json_file(dir / "state1.json", state_to_json(s.s1));
  write_json_file(dir / "state2.json", state_to_json(s.s2));
  out << "wrote " << (dir / "unitary.json").string() << ", state1.json, state2.json\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"divisi: one-step divisibility analysis of system-environment unitaries"};
  app.name("divisi");
  app.require_subcommand(1);

  const std::vector<std::string> names{"bell", "ghz", "w"};
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tolerance, "Verdict tolerance (default 1e-9, or DIVISI_TOL)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "trace or hs")->check(CLI::IsMember({"trace", "hs"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "exact or paper")
        ->check(CLI::IsMember({"exact", "paper"}));
  };
  auto add_split = [&](CLI::App* sub) {
    sub->add_option("--split", cfg.split, "S:E qubit counts, system first (e.g. 2:1)");
    sub->add_option("--system", cfg.system, "Comma-separated system qubit indices");
    sub->add_option("--env-state", cfg.env_state_path, "Environment initial state (default |0..0>)");
    sub->add_flag("--repair-polar", cfg.repair_polar, "Project the unitary onto the nearest unitary");
    sub->add_flag("--lenient", cfg.lenient, "Accept truncated-constant inputs (trace/unitarity 2e-3)");
  };

  CLI::App* scenario = app.add_subcommand("scenario", "Run a built-in Bell/GHZ/W scenario");
  scenario->add_option("name", cfg.scenario, "bell, ghz or w")
      ->required()
      ->check(CLI::IsMember(names, CLI::ignore_case));
  add_mode(scenario);
  add_metric(scenario);
  add_format(scenario);
  add_tol(scenario);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a unitary and a pair of states");
  analyze_cmd->add_option("--unitary", cfg.unitary_path, "Unitary JSON")->required();
  analyze_cmd->add_option("--state1", cfg.state1_path, "First joint input state JSON")->required();
  analyze_cmd->add_option("--state2", cfg.state2_path, "Second joint input state JSON")->required();
  add_split(analyze_cmd);
  add_metric(analyze_cmd);
  add_format(analyze_cmd);
  add_tol(analyze_cmd);

  CLI::App* witness = app.add_subcommand("witness", "Search for a pair whose system distance grows");
  witness->add_option("--unitary", cfg.unitary_path, "Unitary JSON")->required();
  add_split(witness);
  witness->add_flag("--correlated", cfg.correlated, "Search over joint pure inputs");
  witness->add_option("--restarts", cfg.restarts, "Number of restarts");
  witness->add_option("--iters", cfg.iters, "Iterations per restart");
  witness->add_option("--step", cfg.step, "Initial perturbation size");
  witness->add_option("--seed", cfg.seed, "Random seed");
  witness->add_option("--init1", cfg.init1_path, "Starting amplitudes for restart 0 (first)");
  witness->add_option("--init2", cfg.init2_path, "Starting amplitudes for restart 0 (second)");

  CLI::App* validate = app.add_subcommand("validate", "Validate a unitary, state, channel or scenario");
  validate->add_option("--unitary", cfg.unitary_path, "Unitary JSON");
  validate->add_option("--state", cfg.state_path, "State JSON");
  validate->add_option("--kraus", cfg.kraus_path, "Kraus channel JSON");
  validate->add_option("--scenario", cfg.scenario, "Built-in scenario name")
      ->check(CLI::IsMember(names, CLI::ignore_case));
  validate->add_flag("--repair-polar", cfg.repair_polar, "Project the unitary onto the nearest unitary");
  validate->add_flag("--lenient", cfg.lenient, "Accept truncated-constant inputs");
  add_mode(validate);

  CLI::App* export_cmd = app.add_subcommand("export", "Write a built-in scenario as JSON files");
  export_cmd->add_option("name", cfg.scenario, "bell, ghz or w")
      ->required()
      ->check(CLI::IsMember(names, CLI::ignore_case));
  export_cmd->add_option("--out-dir", cfg.out_dir, "Output directory")->required();
  add_mode(export_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (scenario->parsed()) return cmd_scenario(cfg, out);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (witness->parsed()) return cmd_witness(cfg, out);
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (export_cmd->parsed()) return cmd_export(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace divisi::cli
