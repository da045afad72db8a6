#include "opcheck/lieb_ruskai.hpp"
#include "opcheck/serialize.hpp"
#include "suites_internal.hpp"

// lr suite: the generalized Lieb-Ruskai filtering inequalities
//   basic:     Phi(K)^H Phi(A)^{-1} Phi(K) <= Phi(K^H A^{-1} K), K arbitrary
//   n-ary:     L(Phi(C), Phi(A_1), ..., Phi(A_n)) <= Phi(L(C, A_1, ..., A_n))
//   weighted:  same shape for the two-variable weighted map
// convexity suite: midpoint/lambda probes of the catalog maps plus the
// joint-argument forms of the basic and weighted maps.

namespace opcheck::suites_detail {
namespace {

enum class LrVariant { basic, nary, weighted };

LrVariant parse_lr_variant(const std::string& map) {
  find_map(map);  // validate the full specifier (mean / alpha ranges)
  if (map == "lr:basic") return LrVariant::basic;
  if (map.rfind("lr:n:", 0) == 0) return LrVariant::nary;
  if (map.rfind("lr:weighted:", 0) == 0) return LrVariant::weighted;
  throw ConfigError("lr suite: map must be lr:basic, lr:n:<mean>[:n], or lr:weighted:<alpha>");
}

// ---- lr -------------------------------------------------------------------

json sample_lr(const SuiteConfig& cfg, int /*trial*/, rng::Stream& rng) {
  const LrVariant variant = parse_lr_variant(cfg.map);
  const ChannelSpec ch = parse_channel(cfg.channel);
  check_channel(ch, cfg);

  return sample_with_budget("lr", [&]() -> std::optional<json> {
    const CPMap phi = realize_channel(ch, cfg, rng);
    json p = payload_header(cfg, "lr");
    p["channel"] = to_json(phi);
    switch (variant) {
      case LrVariant::basic: {
        const HermitianMatrix A = random_pd(cfg.dim, cfg.cond_cap, rng);
        if (!comfortably_pd(apply(phi, A))) return std::nullopt;
        p["variant"] = "basic";
        p["A"] = to_json(A);
        p["K"] = to_json(random_ginibre(cfg.dim, cfg.dim, rng));
        return p;
      }
      case LrVariant::nary: {
        const MeanSpec mean = MeanSpec::parse(cfg.map.substr(5));
        std::vector<HermitianMatrix> A;
        A.reserve(static_cast<std::size_t>(mean.arity()));
        for (int i = 0; i < mean.arity(); ++i)
          A.push_back(random_pd(cfg.dim, cfg.cond_cap, rng));
        const HermitianMatrix C = random_pd(cfg.dim, cfg.cond_cap, rng);
        for (const auto& a : A)
          if (!comfortably_pd(apply(phi, a))) return std::nullopt;
        if (!comfortably_pd(apply(phi, C))) return std::nullopt;
        p["variant"] = "n";
        p["mean"] = cfg.map.substr(5);
        p["A"] = hermitian_list_to_json(A);
        p["C"] = to_json(C);
        return p;
      }
      case LrVariant::weighted: {
        const double alpha = std::stod(cfg.map.substr(12));
        const HermitianMatrix A = random_pd(cfg.dim, cfg.cond_cap, rng);
        const HermitianMatrix B = random_pd(cfg.dim, cfg.cond_cap, rng);
        if (!comfortably_pd(apply(phi, A)) || !comfortably_pd(apply(phi, B)))
          return std::nullopt;
        p["variant"] = "weighted";
        p["alpha"] = alpha;
        p["A"] = to_json(A);
        p["B"] = to_json(B);
        p["K"] = to_json(random_ginibre(cfg.dim, cfg.dim, rng));
        return p;
      }
    }
    return std::nullopt;
  });
}

EvalResult eval_lr(const json& p) {
  const CPMap phi = cpmap_from_json(p.at("channel"));
  const std::string variant = p.at("variant").get<std::string>();

  if (variant == "basic") {
    const HermitianMatrix A = hermitian_from_json(p.at("A"));
    const GeneralMatrix K = general_from_json(p.at("K"));
    const HermitianMatrix hi = apply(phi, lr_basic(A, K));
    const HermitianMatrix lo = lr_basic(apply(phi, A), apply(phi, K));
    return loewner_slack(p, hi, lo, 0.0, hi.dim());
  }
  if (variant == "n") {
    const MeanSpec mean = MeanSpec::parse(p.at("mean").get<std::string>());
    const std::vector<HermitianMatrix> A = hermitian_list_from_json(p.at("A"));
    const HermitianMatrix C = hermitian_from_json(p.at("C"));
    std::vector<HermitianMatrix> images;
    images.reserve(A.size());
    for (const auto& a : A) images.push_back(apply(phi, a));
    const HermitianMatrix hi = apply(phi, lr_n(mean, A, C));
    const HermitianMatrix lo = lr_n(mean, images, apply(phi, C));
    const double residual_tol = mean.kind == MeanSpec::Kind::karcher ? mean.karcher_tol : 0.0;
    return loewner_slack(p, hi, lo, residual_tol, hi.dim());
  }
  if (variant == "weighted") {
    const double alpha = p.at("alpha").get<double>();
    const HermitianMatrix A = hermitian_from_json(p.at("A"));
    const HermitianMatrix B = hermitian_from_json(p.at("B"));
    const GeneralMatrix K = general_from_json(p.at("K"));
    const HermitianMatrix hi = apply(phi, lr_weighted(alpha, A, B, K));
    const HermitianMatrix lo = lr_weighted(alpha, apply(phi, A), apply(phi, B), apply(phi, K));
    return loewner_slack(p, hi, lo, 0.0, hi.dim());
  }
  throw ConfigError("lr: unknown variant '" + variant + "'");
}

// ---- convexity ------------------------------------------------------------

json sample_convexity(const SuiteConfig& cfg, int trial, rng::Stream& rng) {
  json p = payload_header(cfg, "convexity");
  p["map"] = cfg.map;

  if (cfg.map == "lr:basic") {
    // Joint convexity in (A, K) with K arbitrary (not just Hermitian).
    p["lambda"] = rng.uniform();
    p["A1"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["K1"] = to_json(random_ginibre(cfg.dim, cfg.dim, rng));
    p["A2"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["K2"] = to_json(random_ginibre(cfg.dim, cfg.dim, rng));
    return p;
  }
  if (cfg.map.rfind("lr:weighted:", 0) == 0) {
    find_map(cfg.map);  // validate alpha
    // Joint convexity in (A, B) with the outer factor K fixed per pair.
    p["lambda"] = rng.uniform();
    p["alpha"] = std::stod(cfg.map.substr(12));
    p["A1"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["B1"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["A2"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["B2"] = to_json(random_pd(cfg.dim, cfg.cond_cap, rng));
    p["K"] = to_json(random_ginibre(cfg.dim, cfg.dim, rng));
    return p;
  }

  const OperatorMapDescriptor F = find_map(cfg.map);
  p["lambda"] = rng.uniform();
  std::vector<HermitianMatrix> X, Y;
  X.reserve(static_cast<std::size_t>(F.arity));
  Y.reserve(static_cast<std::size_t>(F.arity));
  for (int i = 0; i < F.arity; ++i) {
    X.push_back(draw_operand(F, cfg, trial, rng));
    Y.push_back(draw_operand(F, cfg, trial, rng));
  }
  p["X"] = hermitian_list_to_json(X);
  p["Y"] = hermitian_list_to_json(Y);
  return p;
}

GeneralMatrix mix_general(double lambda, const GeneralMatrix& a, const GeneralMatrix& b) {
  return lambda * a + (1.0 - lambda) * b;
}

EvalResult eval_convexity(const json& p) {
  const double lambda = p.at("lambda").get<double>();

  if (p.contains("K1")) {
    const HermitianMatrix A1 = hermitian_from_json(p.at("A1"));
    const HermitianMatrix A2 = hermitian_from_json(p.at("A2"));
    const GeneralMatrix K1 = general_from_json(p.at("K1"));
    const GeneralMatrix K2 = general_from_json(p.at("K2"));
    const HermitianMatrix hi = lambda * lr_basic(A1, K1) + (1.0 - lambda) * lr_basic(A2, K2);
    const HermitianMatrix lo =
        lr_basic(lambda * A1 + (1.0 - lambda) * A2, mix_general(lambda, K1, K2));
    return loewner_slack(p, hi, lo, 0.0, hi.dim());
  }
  if (p.contains("alpha")) {
    const double alpha = p.at("alpha").get<double>();
    const HermitianMatrix A1 = hermitian_from_json(p.at("A1"));
    const HermitianMatrix B1 = hermitian_from_json(p.at("B1"));
    const HermitianMatrix A2 = hermitian_from_json(p.at("A2"));
    const HermitianMatrix B2 = hermitian_from_json(p.at("B2"));
    const GeneralMatrix K = general_from_json(p.at("K"));
    const HermitianMatrix hi =
        lambda * lr_weighted(alpha, A1, B1, K) + (1.0 - lambda) * lr_weighted(alpha, A2, B2, K);
    const HermitianMatrix lo = lr_weighted(alpha, lambda * A1 + (1.0 - lambda) * A2,
                                           lambda * B1 + (1.0 - lambda) * B2, K);
    return loewner_slack(p, hi, lo, 0.0, hi.dim());
  }

  const OperatorMapDescriptor F = find_map(p.at("map").get<std::string>());
  const std::vector<HermitianMatrix> X = hermitian_list_from_json(p.at("X"));
  const std::vector<HermitianMatrix> Y = hermitian_list_from_json(p.at("Y"));
  std::vector<HermitianMatrix> M;
  M.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    M.push_back(lambda * X[i] + (1.0 - lambda) * Y[i]);
  const HermitianMatrix hi = lambda * F(X) + (1.0 - lambda) * F(Y);
  const HermitianMatrix lo = F(M);
  return loewner_slack(p, hi, lo, F.residual_tol, hi.dim());
}

constexpr SuiteDef kLrSuites[] = {
    {"lr", "Phi(K)^H Phi(A)^{-1} Phi(K) <= Phi(K^H A^{-1} K) and n-ary/weighted variants",
     &sample_lr, &eval_lr},
    {"convexity",
     "lambda F(X) + (1-lambda) F(Y) >= F(lambda X + (1-lambda) Y) for catalog maps",
     &sample_convexity, &eval_convexity},
};

}  // namespace

std::span<const SuiteDef> lr_suites() { return kLrSuites; }

}  // namespace opcheck::suites_detail
