#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "opcheck/errors.hpp"
#include "opcheck/kernels.hpp"
#include "opcheck/suites.hpp"

// Exit codes: 0 pass, 1 inequality failure (or replay mismatch),
// 2 config error, 3 numerical failure.

namespace {

void validate_config(const opcheck::SuiteConfig& cfg) {
  if (cfg.dim < 1) throw opcheck::ConfigError("--dim must be >= 1");
  if (cfg.dim_out < 0) throw opcheck::ConfigError("--dim-out must be >= 1 when given");
  if (cfg.trials < 1) throw opcheck::ConfigError("--trials must be >= 1");
  if (!(cfg.tol_abs > 0.0)) throw opcheck::ConfigError("--tol-abs must be > 0");
  if (!(cfg.tol_rel > 0.0)) throw opcheck::ConfigError("--tol-rel must be > 0");
  if (!(cfg.cond_cap >= 1.0)) throw opcheck::ConfigError("--cond-cap must be >= 1");
  if (cfg.terms < 1) throw opcheck::ConfigError("--terms must be >= 1");
}

int run_verify(const opcheck::SuiteConfig& cfg, const opcheck::RunOptions& opts,
               const std::string& out_path) {
  validate_config(cfg);
  const opcheck::SuiteReport report = opcheck::run_suite(cfg, opts);

  std::ofstream out(out_path);
  if (!out) throw opcheck::ConfigError("cannot write report file '" + out_path + "'");
  out << opcheck::to_json(report).dump(2) << '\n';

  std::cout << std::setprecision(17) << cfg.suite << ": " << report.trials.size()
            << " trials, " << report.failures << " failures, worst slack "
            << report.worst_slack << " (kernel " << opcheck::kernels::active_backend()
            << ") -> " << out_path << '\n';
  for (const auto& d : report.dumps) std::cout << "  dumped " << d << '\n';
  return report.failures == 0 ? 0 : 1;
}

int run_replay(const std::string& path, const std::string& kernel_flag) {
  std::ifstream in(path);
  if (!in) throw opcheck::ConfigError("cannot read instance file '" + path + "'");
  opcheck::json dump;
  try {
    dump = opcheck::json::parse(in);
  } catch (const std::exception& e) {
    throw opcheck::ConfigError("instance file '" + path + "' is not valid JSON: " + e.what());
  }
  // Replays default to the kernel backend that produced the dump so the
  // slack reproduces bit-for-bit; --kernel overrides.
  if (kernel_flag.empty() && dump.contains("kernel"))
    opcheck::kernels::set_backend(dump.at("kernel").get<std::string>());

  const opcheck::ReplayOutcome out = opcheck::replay_instance(dump);
  std::cout << std::setprecision(17) << "recorded slack  " << out.recorded_slack << '\n'
            << "replayed slack  " << out.replayed_slack << '\n'
            << "tolerance       " << out.tol << '\n'
            << "verdict         " << (out.pass ? "pass" : "fail") << '\n'
            << "reproduced      " << (out.reproduced ? "yes" : "no") << '\n';
  return out.reproduced ? 0 : 1;
}

int run_list() {
  for (const auto& name : opcheck::suite_names())
    std::cout << name << "\n    " << opcheck::suite_summary(name) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewner-order verification suites for operator constructions"};
  app.require_subcommand(1);

  opcheck::SuiteConfig cfg;
  opcheck::RunOptions opts;
  std::string out_path = "report.json";
  std::string kernel;
  std::string instance_path;

  CLI::App* verify =
      app.add_subcommand("verify", "Run one inequality suite and write a JSON report");
  verify->add_option("--suite", cfg.suite, "Suite name (see list-suites)")->required();
  verify->add_option("--dim", cfg.dim, "Operand dimension (default 4)");
  verify->add_option("--dim-out", cfg.dim_out, "Output-side dimension (default: dim)");
  verify->add_option("--trials", cfg.trials, "Number of trials (default 200)");
  verify->add_option("--seed", cfg.seed, "Master seed (default 1)");
  verify->add_option("--tol-abs", cfg.tol_abs, "Absolute slack tolerance");
  verify->add_option("--tol-rel", cfg.tol_rel, "Relative slack tolerance");
  verify->add_option("--cond-cap", cfg.cond_cap, "Condition cap for PD draws (default 1e3)");
  verify->add_option("--map", cfg.map, "Operator map specifier (default lift:square)");
  verify->add_option("--mean", cfg.mean, "Mean specifier (default binary:0.5)");
  verify->add_option("--channel", cfg.channel, "CP-map specifier (default identity)");
  verify->add_option("--terms", cfg.terms, "Family size for jensen-sum (default 3)");
  verify->add_option("--out", out_path, "Report file (default report.json)");
  verify->add_option("--dump-dir", opts.dump_dir, "Directory for instance dumps");
  verify->add_flag("--dump-all", opts.dump_all, "Dump every instance, not just failures");
  verify->add_option("--kernel", kernel, "Kernel backend: scalar | avx2 | auto");

  CLI::App* replay = app.add_subcommand("replay", "Re-evaluate a dumped instance");
  replay->add_option("--instance", instance_path, "Instance dump file")->required();
  replay->add_option("--kernel", kernel, "Kernel backend override");

  app.add_subcommand("list-suites", "List the available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (!kernel.empty()) opcheck::kernels::set_backend(kernel);
    if (verify->parsed()) return run_verify(cfg, opts, out_path);
    if (replay->parsed()) return run_replay(instance_path, kernel);
    return run_list();
  } catch (const opcheck::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const opcheck::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  }
}
