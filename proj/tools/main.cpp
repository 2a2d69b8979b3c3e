// Copyright 2026 The spinqsde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line front end. Exit codes: 0 = all requested checks passed,
// 1 = a mathematical check failed (model not realizable, residual beyond
// tolerance, harness counterexample), 2 = input or usage error.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinqsde/algebra.hpp"
#include "spinqsde/io.hpp"
#include "spinqsde/ito.hpp"
#include "spinqsde/model.hpp"
#include "spinqsde/pauli.hpp"
#include "spinqsde/realizability.hpp"
#include "spinqsde/version.hpp"

namespace {

using nlohmann::json;
using namespace spinqsde;

bool use_color() {
  return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

const char* verdict_str(bool ok) {
  if (!use_color()) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct Input {
  std::string path;
  std::string digest;
  SystemFile sys;
};

Input load_input(const std::string& path) {
  Input in;
  in.path = path;
  const std::string text = read_file(path);
  in.digest = fnv1a_digest(text);
  in.sys = parse_system(text);
  return in;
}

// Coefficient form of the input; parameter files are realized first.
BilinearQSDE to_qsde(const SystemFile& sys) {
  return sys.qsde ? *sys.qsde : realize(*sys.params);
}

json report_envelope(const std::string& command_echo, const std::string& digest,
                     double tol) {
  json j;
  j["command"] = command_echo;
  j["input_digest"] = digest;
  j["tolerance"] = tol;
  j["version"] = kVersion;
  j["timestamp"] = iso_timestamp();
  return j;
}

json residuals_to_json(const std::map<std::string, double>& residuals) {
  json j = json::object();
  for (const auto& [name, value] : residuals) j[name] = value;
  return j;
}

void emit_report(const std::string& out_path, const json& report) {
  if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
}

void print_residuals(const std::map<std::string, double>& residuals) {
  for (const auto& [name, value] : residuals)
    std::printf("    %-14s %.9g\n", name.c_str(), value);
}

std::string format_complex(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.9g%+.9gi)", z.real(), z.imag());
  return buf;
}

void print_params(const PhysicalParams& p) {
  std::printf("    alpha  = [%.9g, %.9g, %.9g]\n", p.alpha(0), p.alpha(1),
              p.alpha(2));
  std::printf("    lambda = [%s, %s, %s]\n", format_complex(p.lambda(0)).c_str(),
              format_complex(p.lambda(1)).c_str(),
              format_complex(p.lambda(2)).c_str());
}

Vec3 parse_r0(const std::string& s) {
  Vec3 r;
  int consumed = 0;
  if (std::sscanf(s.c_str(), " %lf , %lf , %lf %n", &r(0), &r(1), &r(2),
                  &consumed) != 3 ||
      s[static_cast<std::size_t>(consumed)] != '\0')
    throw LoadError("invalid --r0: expected three comma-separated reals, got \"" +
                    s + "\"");
  if (r.norm() > 1.0 + 1e-9) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "invalid --r0: state must lie in the unit ball, got norm %.9g",
                  r.norm());
    throw LoadError(buf);
  }
  return r;
}

int run_check(const std::string& echo, const std::string& path, double tol,
              const std::string& out_path) {
  const Input in = load_input(path);
  const BilinearQSDE q = to_qsde(in.sys);

  const RealizabilityReport real = check_physical_realizability(q, tol);
  const CCRReport ccr = check_ccr_preservation(q, tol);

  std::printf("input: %s (%s)\n", in.path.c_str(), in.digest.c_str());
  std::printf("physical realizability: %s  (tolerance %.9g)\n",
              verdict_str(real.verdict), tol);
  print_residuals(real.residuals);
  std::printf("commutation preservation: %s\n", verdict_str(ccr.verdict));
  print_residuals(ccr.residuals);
  if (real.extracted) {
    std::printf("extracted parameters:\n");
    print_params(*real.extracted);
  }

  json report = report_envelope(echo, in.digest, tol);
  report["verdicts"] = {{"physically_realizable", real.verdict},
                        {"ccr_preserving", ccr.verdict}};
  report["residuals"] = {{"realizability", residuals_to_json(real.residuals)},
                         {"ccr", residuals_to_json(ccr.residuals)}};
  if (real.extracted) report["extracted"] = to_json(*real.extracted);
  emit_report(out_path, report);

  return real.verdict ? 0 : 1;
}

int run_extract(const std::string& echo, const std::string& path, double tol,
                const std::string& out_path) {
  const Input in = load_input(path);
  const BilinearQSDE q = to_qsde(in.sys);

  const RealizabilityReport real = check_physical_realizability(q, tol);
  if (!real.verdict) {
    std::printf("input: %s (%s)\n", in.path.c_str(), in.digest.c_str());
    std::printf("extraction refused: model is not physically realizable (%s)\n",
                verdict_str(false));
    print_residuals(real.residuals);
    return 1;
  }

  const PhysicalParams p = *real.extracted;
  std::printf("input: %s (%s)\n", in.path.c_str(), in.digest.c_str());
  std::printf("extracted parameters:\n");
  print_params(p);

  json system;
  system["params"] = to_json(p);
  if (!out_path.empty()) write_file(out_path, system.dump(2) + "\n");
  (void)echo;
  return 0;
}

int run_realize(const std::string& echo, const std::string& path,
                const std::string& out_path) {
  const Input in = load_input(path);
  if (!in.sys.params)
    throw LoadError(
        "realize requires a system file with a \"params\" section");
  const BilinearQSDE q = realize(*in.sys.params);

  json system;
  system["qsde"] = to_json(q);
  const std::string text = system.dump(2) + "\n";
  if (!out_path.empty())
    write_file(out_path, text);
  else
    std::fputs(text.c_str(), stdout);
  (void)echo;
  return 0;
}

int run_oracle(const std::string& echo, const std::string& path, bool random,
               std::uint64_t seed, int trials, double tol,
               const std::string& out_path) {
  if (random) {
    if (!path.empty())
      throw LoadError("oracle --random takes no input file");
    const EquivalenceReport rep = oracle_equivalence(seed, trials, tol);
    std::printf(
        "oracle agreement: %s  (%d disagreements over %d realizable + %d "
        "arbitrary models, seed %llu)\n",
        verdict_str(rep.pass()), rep.disagreements, rep.realizable_trials,
        rep.arbitrary_trials, static_cast<unsigned long long>(seed));
    for (const auto& note : rep.notes) std::printf("    %s\n", note.c_str());

    json report = report_envelope(echo, "-", tol);
    report["verdicts"] = {{"oracle_agreement", rep.pass()}};
    report["disagreements"] = rep.disagreements;
    report["realizable_trials"] = rep.realizable_trials;
    report["arbitrary_trials"] = rep.arbitrary_trials;
    report["seed"] = seed;
    emit_report(out_path, report);
    return rep.pass() ? 0 : 1;
  }

  if (path.empty()) throw LoadError("oracle requires an input file (or --random)");
  const Input in = load_input(path);
  const BilinearQSDE q = to_qsde(in.sys);
  const double residual = ccr_residual(q);
  const bool ok = residual <= tol * std::max(1.0, coefficient_norm(q));

  std::printf("input: %s (%s)\n", in.path.c_str(), in.digest.c_str());
  std::printf("commutation preservation (increment algebra): %s\n",
              verdict_str(ok));
  std::printf("    flow defect    %.9g\n", residual);

  json report = report_envelope(echo, in.digest, tol);
  report["verdicts"] = {{"ccr_preserving", ok}};
  report["residuals"] = {{"increment", json{{"flow-defect", residual}}}};
  emit_report(out_path, report);
  return ok ? 0 : 1;
}

int run_simulate(const std::string& echo, const std::string& path,
                 const std::string& r0_str, double T, double dt,
                 bool with_oracle, double tol, const std::string& out_path) {
  const Input in = load_input(path);
  const Vec3 r0 = parse_r0(r0_str);
  const BilinearQSDE q = to_qsde(in.sys);

  std::vector<BlochState> traj;
  std::vector<BlochState> oracle;
  try {
    traj = simulate_mean(q, r0, T, dt);
    if (with_oracle) {
      PhysicalParams p;
      if (in.sys.params) {
        p = *in.sys.params;
      } else {
        const RealizabilityReport real = check_physical_realizability(q, tol);
        if (!real.verdict) {
          std::fprintf(stderr,
                       "error: --oracle needs physical parameters, and the "
                       "input model is not realizable\n");
          return 1;
        }
        p = *real.extracted;
      }
      oracle = master_mean_oracle(p, r0, T, dt);
    }
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  } catch (const std::domain_error& e) {
    throw LoadError(e.what());
  }

  std::string csv = with_oracle ? "t,r1,r2,r3,m1,m2,m3,maxdev\n" : "t,r1,r2,r3\n";
  char line[512];
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const BlochState& s = traj[k];
    if (with_oracle) {
      const BlochState& m = oracle[k];
      const double maxdev = (s.r - m.r).cwiseAbs().maxCoeff();
      std::snprintf(line, sizeof line,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                    s.r(0), s.r(1), s.r(2), m.r(0), m.r(1), m.r(2), maxdev);
    } else {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s.t, s.r(0),
                    s.r(1), s.r(2));
    }
    csv += line;
  }

  if (!out_path.empty())
    write_file(out_path, csv);
  else
    std::fputs(csv.c_str(), stdout);
  (void)echo;
  return 0;
}

int run_selftest(const std::string& echo, std::uint64_t seed, int trials,
                 double tol, const std::string& out_path) {
  const IdentityReport ids = selftest_identities(seed, trials);
  const bool ids_ok = ids.pass(tol);
  std::printf("identity sweep:          %s  (worst residual %.9g, %d trials)\n",
              verdict_str(ids_ok), ids.max_residual(), ids.trials);

  const OuterRelationsReport outer = pauli_outer_relations_check();
  const bool outer_ok = outer.max_residual() <= tol;
  std::printf("pauli outer relations:   %s  (worst residual %.9g)\n",
              verdict_str(outer_ok), outer.max_residual());

  const HarnessReport harness = check_realizable_preserves_ccr(seed + 1, trials);
  std::printf(
      "realizable preserves ccr: %s  (%zu counterexamples in %d trials, worst "
      "defect %.9g)\n",
      verdict_str(harness.pass()), harness.counterexamples.size(),
      harness.trials, harness.worst_residual);

  const EquivalenceReport equiv = oracle_equivalence(seed + 2, trials, tol);
  std::printf(
      "oracle agreement:        %s  (%d disagreements over %d + %d models)\n",
      verdict_str(equiv.pass()), equiv.disagreements, equiv.realizable_trials,
      equiv.arbitrary_trials);

  const bool ok = ids_ok && outer_ok && harness.pass() && equiv.pass();
  std::printf("overall: %s\n", verdict_str(ok));

  json report = report_envelope(echo, "-", tol);
  json id_res = json::object();
  for (const auto& [name, value] : ids.residuals) id_res[name] = value;
  report["residuals"] = {
      {"identities", id_res},
      {"pauli-outer", json{{"product", outer.product_residual},
                           {"commutator", outer.commutator_residual}}}};
  report["verdicts"] = {{"identities", ids_ok},
                        {"pauli_outer_relations", outer_ok},
                        {"realizable_preserves_ccr", harness.pass()},
                        {"oracle_agreement", equiv.pass()}};
  report["seed"] = seed;
  report["trials"] = trials;
  emit_report(out_path, report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification and synthesis of bilinear quantum stochastic models of "
      "open two-level systems"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  std::string r0_str = "0,0,1";
  double tol = 1e-9;
  double T = 1.0;
  double dt = 1e-3;
  std::uint64_t seed = 0;
  int trials = 500;
  bool random = false;
  bool with_oracle = false;

  auto* check = app.add_subcommand(
      "check", "Decide physical realizability and commutation preservation");
  check->add_option("file", path, "system JSON file")->required();
  check->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  check->add_option("--out", out_path, "write a JSON report to this path");

  auto* extract = app.add_subcommand(
      "extract", "Recover physical parameters from a realizable model");
  extract->add_option("file", path, "system JSON file")->required();
  extract->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  extract->add_option("--out", out_path, "write the params system file here");

  auto* realize_cmd = app.add_subcommand(
      "realize", "Build the coefficient model generated by physical parameters");
  realize_cmd->add_option("file", path, "system JSON file with a params section")
      ->required();
  realize_cmd->add_option("--out", out_path, "write the qsde system file here");

  auto* oracle = app.add_subcommand(
      "oracle", "Run the increment-algebra commutation oracle");
  oracle->add_option("file", path, "system JSON file");
  oracle->add_flag("--random", random,
                   "sweep random models and compare against the matrix checker");
  oracle->add_option("--seed", seed, "random seed (default 0)");
  oracle->add_option("--trials", trials, "models per batch (default 500)");
  oracle->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  oracle->add_option("--out", out_path, "write a JSON report to this path");

  auto* simulate = app.add_subcommand(
      "simulate", "Integrate the vacuum mean flow and emit CSV");
  simulate->add_option("file", path, "system JSON file")->required();
  simulate->add_option("--r0", r0_str, "initial Bloch vector x,y,z (default 0,0,1)");
  simulate->add_option("--T", T, "final time (default 1)");
  simulate->add_option("--dt", dt, "step size (default 1e-3)");
  simulate->add_flag("--oracle", with_oracle,
                     "also integrate the density-operator route and report "
                     "per-row deviation");
  simulate->add_option("--tol", tol,
                       "realizability tolerance used when --oracle needs to "
                       "recover parameters");
  simulate->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* selftest = app.add_subcommand(
      "selftest", "Run the built-in identity, bridge and oracle sweeps");
  selftest->add_option("--seed", seed, "random seed (default 0)");
  selftest->add_option("--trials", trials, "trials per sweep (default 500)");
  selftest->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  selftest->add_option("--out", out_path, "write a JSON report to this path");

  // Reports record the subcommand, not the raw argument list, so the same
  // input content yields the same report bytes regardless of file paths.
  int rc = 0;
  check->callback([&] { rc = run_check("check", path, tol, out_path); });
  extract->callback([&] { rc = run_extract("extract", path, tol, out_path); });
  realize_cmd->callback([&] { rc = run_realize("realize", path, out_path); });
  oracle->callback([&] {
    rc = run_oracle("oracle", path, random, seed, trials, tol, out_path);
  });
  simulate->callback([&] {
    rc = run_simulate("simulate", path, r0_str, T, dt, with_oracle, tol,
                      out_path);
  });
  selftest->callback(
      [&] { rc = run_selftest("selftest", seed, trials, tol, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const LoadError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
