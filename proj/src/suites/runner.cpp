#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "opcheck/kernels.hpp"
#include "opcheck/serialize.hpp"
#include "suites_internal.hpp"

namespace opcheck {
namespace suites_detail {

namespace {

std::vector<SuiteDef> build_registry() {
  std::vector<SuiteDef> defs;
  for (auto span : {jensen_suites(), filtering_suites(), lr_suites()})
    defs.insert(defs.end(), span.begin(), span.end());
  return defs;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = build_registry();
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& def : registry())
    if (name == def.name) return def;
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

ChannelSpec parse_channel(const std::string& spec) {
  ChannelSpec ch;
  if (spec == "identity") return ch;
  if (spec.rfind("random:", 0) == 0) {
    ch.kind = ChannelSpec::Kind::random;
    const std::string rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw ConfigError("channel '" + spec + "': expected random:<norm>:rank=<r>");
    const std::string norm = rest.substr(0, colon);
    if (norm == "none")
      ch.norm = Normalization::none;
    else if (norm == "unital")
      ch.norm = Normalization::unital;
    else if (norm == "trace_preserving")
      ch.norm = Normalization::trace_preserving;
    else
      throw ConfigError("channel '" + spec + "': unknown normalization '" + norm + "'");
    const std::string rankpart = rest.substr(colon + 1);
    if (rankpart.rfind("rank=", 0) != 0)
      throw ConfigError("channel '" + spec + "': expected rank=<r>");
    try {
      ch.rank = std::stoi(rankpart.substr(5));
    } catch (const std::exception&) {
      throw ConfigError("channel '" + spec + "': bad rank");
    }
    if (ch.rank < 1) throw ConfigError("channel '" + spec + "': rank must be >= 1");
    return ch;
  }
  if (spec.rfind("ptrace:", 0) == 0) {
    ch.kind = ChannelSpec::Kind::ptrace;
    const std::string rest = spec.substr(7);
    int d1 = 0, d2 = 0, factor = 0;
    char x = 0;
    std::istringstream is(rest);
    std::string dims, fac;
    if (!std::getline(is, dims, ':') || !std::getline(is, fac))
      throw ConfigError("channel '" + spec + "': expected ptrace:<d1>x<d2>:factor=<1|2>");
    std::istringstream ds(dims);
    if (!(ds >> d1 >> x >> d2) || x != 'x' || d1 < 1 || d2 < 1)
      throw ConfigError("channel '" + spec + "': bad dimensions '" + dims + "'");
    if (fac.rfind("factor=", 0) != 0)
      throw ConfigError("channel '" + spec + "': expected factor=<1|2>");
    try {
      factor = std::stoi(fac.substr(7));
    } catch (const std::exception&) {
      throw ConfigError("channel '" + spec + "': bad factor");
    }
    if (factor != 1 && factor != 2)
      throw ConfigError("channel '" + spec + "': factor must be 1 or 2");
    ch.d1 = d1;
    ch.d2 = d2;
    ch.factor = factor;
    return ch;
  }
  throw ConfigError("unknown channel spec '" + spec + "'");
}

void check_channel(const ChannelSpec& ch, const SuiteConfig& cfg) {
  const int out = cfg.resolved_dim_out();
  switch (ch.kind) {
    case ChannelSpec::Kind::identity:
      if (out != cfg.dim)
        throw ConfigError("identity channel requires dim_out == dim");
      break;
    case ChannelSpec::Kind::random:
      break;  // any in/out dims
    case ChannelSpec::Kind::ptrace: {
      if (cfg.dim != ch.d1 * ch.d2)
        throw ConfigError("ptrace channel needs dim == d1*d2 (" +
                          std::to_string(ch.d1 * ch.d2) + "), got " + std::to_string(cfg.dim));
      const int kept = ch.factor == 2 ? ch.d1 : ch.d2;
      if (out != kept)
        throw ConfigError("ptrace channel output dim is " + std::to_string(kept) +
                          ", but dim_out is " + std::to_string(out));
      break;
    }
  }
}

CPMap realize_channel(const ChannelSpec& ch, const SuiteConfig& cfg, rng::Stream& rng) {
  switch (ch.kind) {
    case ChannelSpec::Kind::identity:
      return identity_channel(cfg.dim);
    case ChannelSpec::Kind::random:
      return random_cp(cfg.dim, cfg.resolved_dim_out(), ch.rank, ch.norm, rng);
    case ChannelSpec::Kind::ptrace:
      return partial_trace_map(ch.d1, ch.d2, ch.factor);
  }
  throw ConfigError("unreachable channel kind");
}

std::vector<HermitianMatrix> hermitian_list_from_json(const json& j) {
  std::vector<HermitianMatrix> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(hermitian_from_json(item));
  return out;
}

json hermitian_list_to_json(std::span<const HermitianMatrix> list) {
  json out = json::array();
  for (const auto& h : list) out.push_back(to_json(h));
  return out;
}

}  // namespace suites_detail

using suites_detail::find_suite;
using suites_detail::registry;

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& def : registry()) names.emplace_back(def.name);
  return names;
}

std::string suite_summary(const std::string& name) { return find_suite(name).summary; }

json build_instance(const SuiteConfig& cfg, int trial) {
  const auto& def = find_suite(cfg.suite);
  rng::Stream stream = rng::substream(cfg.seed, static_cast<std::uint64_t>(trial));
  return def.sample(cfg, trial, stream);
}

EvalResult evaluate_instance(const json& payload) {
  if (!payload.is_object() || !payload.contains("suite"))
    throw ConfigError("instance payload missing 'suite'");
  const auto& def = find_suite(payload.at("suite").get<std::string>());
  return def.evaluate(payload);
}

namespace {

json config_to_json(const SuiteConfig& cfg) {
  return json{{"suite", cfg.suite},
              {"dim", cfg.dim},
              {"dim_out", cfg.resolved_dim_out()},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"tol_abs", cfg.tol_abs},
              {"tol_rel", cfg.tol_rel},
              {"cond_cap", cfg.cond_cap},
              {"map", cfg.map},
              {"mean", cfg.mean},
              {"channel", cfg.channel},
              {"terms", cfg.terms}};
}

std::string write_dump(const RunOptions& opts, const SuiteConfig& cfg, int trial,
                       const TrialRecord& rec, const json& payload) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.dump_dir);
  // Digest of the full config so runs differing only in map/dim/... don't
  // overwrite each other's dumps in a shared directory.
  std::ostringstream digest;
  digest << std::hex << std::setw(8) << std::setfill('0')
         << static_cast<std::uint32_t>(std::hash<std::string>{}(config_to_json(cfg).dump()));
  fs::path path = fs::path(opts.dump_dir) /
                  (cfg.suite + "-" + digest.str() + "-seed" + std::to_string(cfg.seed) +
                   "-trial" + std::to_string(trial) + ".json");
  json dump{{"suite", cfg.suite},
            {"trial", trial},
            {"stream_seed", rec.seed},
            {"recorded_slack", rec.slack},
            {"recorded_tol", rec.tol},
            {"recorded_pass", rec.pass},
            {"kernel", kernels::active_backend()},
            {"payload", payload}};
  std::ofstream out(path);
  out << dump.dump(2) << '\n';
  return path.string();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg, const RunOptions& opts) {
  const auto& def = find_suite(cfg.suite);
  // Surface config problems (bad map/mean/channel, dim mismatches) before
  // the trial loop so they land as ConfigError, not trial failures.
  build_instance(cfg, 0);

  SuiteReport report;
  report.config = cfg;
  report.trials.reserve(static_cast<std::size_t>(cfg.trials));

  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < cfg.trials; ++t) {
    const json payload = build_instance(cfg, t);
    const EvalResult res = def.evaluate(payload);
    TrialRecord rec;
    rec.i = t;
    rec.seed = rng::derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    rec.slack = res.slack;
    rec.tol = res.tol;
    rec.pass = res.pass();
    if (!rec.pass) ++report.failures;
    if (t == 0 || rec.slack < report.worst_slack) report.worst_slack = rec.slack;
    if (!rec.pass || opts.dump_all)
      report.dumps.push_back(write_dump(opts, cfg, t, rec, payload));
    report.trials.push_back(rec);
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
  return report;
}

json to_json(const SuiteReport& report) {
  json trials = json::array();
  for (const auto& rec : report.trials)
    trials.push_back(json{{"i", rec.i},
                          {"seed", rec.seed},
                          {"slack", rec.slack},
                          {"tol", rec.tol},
                          {"pass", rec.pass}});
  return json{{"config", config_to_json(report.config)},
              {"trials", std::move(trials)},
              {"worst_slack", report.worst_slack},
              {"failures", report.failures},
              {"wall_ms", report.wall_ms},
              {"dumps", report.dumps}};
}

ReplayOutcome replay_instance(const json& dump) {
  if (!dump.is_object() || !dump.contains("payload") || !dump.contains("recorded_slack"))
    throw ConfigError("replay: not an instance dump (missing payload/recorded_slack)");
  ReplayOutcome out;
  out.recorded_slack = dump.at("recorded_slack").get<double>();
  const EvalResult res = evaluate_instance(dump.at("payload"));
  out.replayed_slack = res.slack;
  out.tol = res.tol;
  out.reproduced = std::abs(out.replayed_slack - out.recorded_slack) <= 1e-12;
  out.pass = res.pass();
  return out;
}

}  // namespace opcheck
