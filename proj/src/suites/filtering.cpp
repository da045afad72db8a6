#include "opcheck/means.hpp"
#include "opcheck/perspective.hpp"
#include "opcheck/serialize.hpp"
#include "suites_internal.hpp"

// Filtering suites: how constructions commute with a CP map Phi.
//   perspective-filter:  P_F(Phi(A_1),...,Phi(B)) <= Phi(P_F(A_1,...,B))
//   homogeneous-filter:  F(Phi(args)) <= Phi(F(args)) for convex positively
//                        homogeneous F
//   mean-filter:         G(Phi(args)) >= Phi(G(args)) for geometric means G
// Phi is arbitrary CP throughout (no unitality or trace preservation).

namespace opcheck::suites_detail {
namespace {

// ---- perspective-filter ---------------------------------------------------

json sample_perspective_filter(const SuiteConfig& cfg, int /*trial*/, rng::Stream& rng) {
  const OperatorMapDescriptor base = find_map(cfg.map);
  const OperatorMapDescriptor PF = perspective_descriptor(base);
  const ChannelSpec ch = parse_channel(cfg.channel);
  check_channel(ch, cfg);

  return sample_with_budget("perspective-filter", [&]() -> std::optional<json> {
    const CPMap phi = realize_channel(ch, cfg, rng);
    // Perspective operands are PD (the last one is inverted); redraw when
    // an image the evaluation must invert is nearly singular.
    std::vector<HermitianMatrix> args;
    args.reserve(static_cast<std::size_t>(PF.arity));
    for (int i = 0; i < PF.arity; ++i) args.push_back(random_pd(cfg.dim, cfg.cond_cap, rng));
    for (int i = 0; i < PF.arity; ++i) {
      const bool inverted = i == PF.arity - 1 || base.domain == SpectralDomain::pd;
      if (inverted && !comfortably_pd(apply(phi, args[i]))) return std::nullopt;
    }
    json p = payload_header(cfg, "perspective-filter");
    p["map"] = cfg.map;
    p["channel"] = to_json(phi);
    p["A"] = hermitian_list_to_json(args);
    return p;
  });
}

EvalResult eval_perspective_filter(const json& p) {
  const OperatorMapDescriptor base = find_map(p.at("map").get<std::string>());
  const CPMap phi = cpmap_from_json(p.at("channel"));
  const std::vector<HermitianMatrix> args = hermitian_list_from_json(p.at("A"));

  std::vector<HermitianMatrix> images;
  images.reserve(args.size());
  for (const auto& a : args) images.push_back(apply(phi, a));

  const HermitianMatrix hi = apply(phi, perspective(base, args));
  const HermitianMatrix lo = perspective(base, images);
  return loewner_slack(p, hi, lo, base.residual_tol, hi.dim());
}

// ---- homogeneous-filter ---------------------------------------------------

json sample_homogeneous_filter(const SuiteConfig& cfg, int trial, rng::Stream& rng) {
  const OperatorMapDescriptor F = find_map(cfg.map);
  if (!F.homogeneous)
    throw ConfigError("homogeneous-filter: map '" + cfg.map +
                      "' is not positively homogeneous");
  const ChannelSpec ch = parse_channel(cfg.channel);
  check_channel(ch, cfg);

  return sample_with_budget("homogeneous-filter", [&]() -> std::optional<json> {
    const CPMap phi = realize_channel(ch, cfg, rng);
    std::vector<HermitianMatrix> args;
    args.reserve(static_cast<std::size_t>(F.arity));
    for (int i = 0; i < F.arity; ++i) args.push_back(draw_operand(F, cfg, trial, rng));
    if (F.domain == SpectralDomain::pd)
      for (const auto& a : args)
        if (!comfortably_pd(apply(phi, a))) return std::nullopt;
    json p = payload_header(cfg, "homogeneous-filter");
    p["map"] = cfg.map;
    p["channel"] = to_json(phi);
    p["A"] = hermitian_list_to_json(args);
    return p;
  });
}

EvalResult eval_homogeneous_filter(const json& p) {
  const OperatorMapDescriptor F = find_map(p.at("map").get<std::string>());
  const CPMap phi = cpmap_from_json(p.at("channel"));
  const std::vector<HermitianMatrix> args = hermitian_list_from_json(p.at("A"));

  std::vector<HermitianMatrix> images;
  images.reserve(args.size());
  for (const auto& a : args) images.push_back(apply(phi, a));

  const HermitianMatrix hi = apply(phi, F(args));
  const HermitianMatrix lo = F(images);
  return loewner_slack(p, hi, lo, F.residual_tol, hi.dim());
}

// ---- mean-filter ----------------------------------------------------------

json sample_mean_filter(const SuiteConfig& cfg, int /*trial*/, rng::Stream& rng) {
  const MeanSpec mean = MeanSpec::parse(cfg.mean);
  const ChannelSpec ch = parse_channel(cfg.channel);
  check_channel(ch, cfg);

  return sample_with_budget("mean-filter", [&]() -> std::optional<json> {
    const CPMap phi = realize_channel(ch, cfg, rng);
    std::vector<HermitianMatrix> args;
    args.reserve(static_cast<std::size_t>(mean.arity()));
    for (int i = 0; i < mean.arity(); ++i) args.push_back(random_pd(cfg.dim, cfg.cond_cap, rng));
    for (const auto& a : args)
      if (!comfortably_pd(apply(phi, a))) return std::nullopt;
    json p = payload_header(cfg, "mean-filter");
    p["mean"] = cfg.mean;
    p["channel"] = to_json(phi);
    p["A"] = hermitian_list_to_json(args);
    return p;
  });
}

EvalResult eval_mean_filter(const json& p) {
  const MeanSpec mean = MeanSpec::parse(p.at("mean").get<std::string>());
  const CPMap phi = cpmap_from_json(p.at("channel"));
  const std::vector<HermitianMatrix> args = hermitian_list_from_json(p.at("A"));

  std::vector<HermitianMatrix> images;
  images.reserve(args.size());
  for (const auto& a : args) images.push_back(apply(phi, a));

  // Means are concave-side: the filtered mean dominates the mean's image.
  const HermitianMatrix hi = evaluate_mean(mean, images);
  const HermitianMatrix lo = apply(phi, evaluate_mean(mean, args));
  const double residual_tol = mean.kind == MeanSpec::Kind::karcher ? mean.karcher_tol : 0.0;
  return loewner_slack(p, hi, lo, residual_tol, hi.dim());
}

constexpr SuiteDef kFilteringSuites[] = {
    {"perspective-filter",
     "P_F(Phi(A),...,Phi(B)) <= Phi(P_F(A,...,B)) for arbitrary CP maps Phi",
     &sample_perspective_filter, &eval_perspective_filter},
    {"homogeneous-filter",
     "F(Phi(args)) <= Phi(F(args)) for convex positively homogeneous maps F",
     &sample_homogeneous_filter, &eval_homogeneous_filter},
    {"mean-filter", "G(Phi(args)) >= Phi(G(args)) for geometric means G under CP maps",
     &sample_mean_filter, &eval_mean_filter},
};

}  // namespace

std::span<const SuiteDef> filtering_suites() { return kFilteringSuites; }

}  // namespace opcheck::suites_detail
