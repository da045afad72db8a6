#include "opcheck/serialize.hpp"
#include "suites_internal.hpp"

// The three Jensen-type suites.  Each checks a sub-homomorphism
// inequality for an operator convex map F in the Loewner order:
//   contraction:  F(C^H A_1 C, ...) <= C^H F(A_1, ...) C
//   sum:          F(sum_i C_i^H A_i1 C_i, ...) <= sum_i C_i^H F(A_i1, ...) C_i
//   cp:           F(Phi(A_1), ...) <= Phi(F(A_1, ...))   (Phi unital)

namespace opcheck::suites_detail {
namespace {

// ---- jensen-contraction ---------------------------------------------------

json sample_jensen_contraction(const SuiteConfig& cfg, int trial, rng::Stream& rng) {
  const OperatorMapDescriptor F = find_map(cfg.map);
  if (F.domain != SpectralDomain::psd)
    throw ConfigError("jensen-contraction: map '" + cfg.map +
                      "' is not defined on all of PSD (the contraction form needs it)");
  if (!F.zero_value_nonpositive)
    throw ConfigError("jensen-contraction: map '" + cfg.map + "' lacks F(0,...,0) <= 0");

  json p = payload_header(cfg, "jensen-contraction");
  p["map"] = cfg.map;
  p["C"] = to_json(random_contraction(cfg.dim, cfg.resolved_dim_out(), rng));
  json ops = json::array();
  for (int i = 0; i < F.arity; ++i)
    ops.push_back(to_json(draw_operand(F, cfg, trial, rng)));
  p["A"] = std::move(ops);
  return p;
}

EvalResult eval_jensen_contraction(const json& p) {
  const OperatorMapDescriptor F = find_map(p.at("map").get<std::string>());
  const GeneralMatrix C = general_from_json(p.at("C"));
  const std::vector<HermitianMatrix> A = hermitian_list_from_json(p.at("A"));

  std::vector<HermitianMatrix> compressed;
  compressed.reserve(A.size());
  for (const auto& a : A) compressed.push_back(congruence(a, C));

  const HermitianMatrix hi = congruence(F(A), C);
  const HermitianMatrix lo = F(compressed);
  return loewner_slack(p, hi, lo, F.residual_tol, hi.dim());
}

// ---- jensen-sum -----------------------------------------------------------

json sample_jensen_sum(const SuiteConfig& cfg, int trial, rng::Stream& rng) {
  const OperatorMapDescriptor F = find_map(cfg.map);
  if (cfg.terms < 1) throw ConfigError("jensen-sum: terms must be >= 1");
  const int out = cfg.resolved_dim_out();

  return sample_with_budget("jensen-sum", [&]() -> std::optional<json> {
    // Exact sum-to-identity family: C_i = D_i S^{-1/2} with S = sum D_i^H D_i.
    std::vector<GeneralMatrix> D;
    D.reserve(static_cast<std::size_t>(cfg.terms));
    for (int i = 0; i < cfg.terms; ++i) D.push_back(random_ginibre(cfg.dim, out, rng));

    GeneralMatrix gram(out, out);
    for (const auto& d : D) gram += matmul_adjoint_left(d, d);
    const HermitianMatrix S = HermitianMatrix::from_general(gram);
    if (!comfortably_pd(S)) return std::nullopt;
    const HermitianMatrix Sih = apply_spectral(ScalarFn::inv_sqrt(), S);

    json cs = json::array();
    for (const auto& d : D) cs.push_back(to_json(matmul(d, Sih.mat())));

    json rows = json::array();
    for (int i = 0; i < cfg.terms; ++i) {
      json row = json::array();
      for (int j = 0; j < F.arity; ++j)
        row.push_back(to_json(draw_operand(F, cfg, trial, rng)));
      rows.push_back(std::move(row));
    }

    json p = payload_header(cfg, "jensen-sum");
    p["map"] = cfg.map;
    p["C"] = std::move(cs);
    p["A"] = std::move(rows);
    return p;
  });
}

EvalResult eval_jensen_sum(const json& p) {
  const OperatorMapDescriptor F = find_map(p.at("map").get<std::string>());
  std::vector<GeneralMatrix> C;
  for (const auto& item : p.at("C")) C.push_back(general_from_json(item));
  std::vector<std::vector<HermitianMatrix>> A;
  for (const auto& row : p.at("A")) A.push_back(hermitian_list_from_json(row));
  const std::size_t n = C.size();
  const std::size_t k = A.front().size();

  // Argument-slot mixtures sum_i C_i^H A_ij C_i.
  std::vector<HermitianMatrix> mixed;
  mixed.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    HermitianMatrix X = congruence(A[0][j], C[0]);
    for (std::size_t i = 1; i < n; ++i) X += congruence(A[i][j], C[i]);
    mixed.push_back(std::move(X));
  }

  HermitianMatrix hi = congruence(F(A[0]), C[0]);
  for (std::size_t i = 1; i < n; ++i) hi += congruence(F(A[i]), C[i]);
  const HermitianMatrix lo = F(mixed);
  return loewner_slack(p, hi, lo, F.residual_tol, hi.dim());
}

// ---- jensen-cp ------------------------------------------------------------

json sample_jensen_cp(const SuiteConfig& cfg, int trial, rng::Stream& rng) {
  const OperatorMapDescriptor F = find_map(cfg.map);
  const ChannelSpec ch = parse_channel(cfg.channel);
  const bool unital = ch.kind == ChannelSpec::Kind::identity ||
                      (ch.kind == ChannelSpec::Kind::random && ch.norm == Normalization::unital);
  if (!unital)
    throw ConfigError("jensen-cp: channel '" + cfg.channel +
                      "' is not unital (use identity or random:unital:rank=<r>)");
  check_channel(ch, cfg);

  return sample_with_budget("jensen-cp", [&]() -> std::optional<json> {
    const CPMap phi = realize_channel(ch, cfg, rng);
    json p = payload_header(cfg, "jensen-cp");
    p["map"] = cfg.map;
    p["channel"] = to_json(phi);
    json ops = json::array();
    for (int j = 0; j < F.arity; ++j)
      ops.push_back(to_json(draw_operand(F, cfg, trial, rng)));
    p["A"] = std::move(ops);
    return p;
  });
}

EvalResult eval_jensen_cp(const json& p) {
  const OperatorMapDescriptor F = find_map(p.at("map").get<std::string>());
  const CPMap phi = cpmap_from_json(p.at("channel"));
  const std::vector<HermitianMatrix> A = hermitian_list_from_json(p.at("A"));

  std::vector<HermitianMatrix> images;
  images.reserve(A.size());
  for (const auto& a : A) images.push_back(apply(phi, a));

  const HermitianMatrix hi = apply(phi, F(A));
  const HermitianMatrix lo = F(images);
  return loewner_slack(p, hi, lo, F.residual_tol, hi.dim());
}

constexpr SuiteDef kJensenSuites[] = {
    {"jensen-contraction",
     "F(C^H A C) <= C^H F(A) C for strict contractions C and PSD operand tuples",
     &sample_jensen_contraction, &eval_jensen_contraction},
    {"jensen-sum",
     "F(sum C_i^H A_i C_i) <= sum C_i^H F(A_i) C_i for families with sum C_i^H C_i = I",
     &sample_jensen_sum, &eval_jensen_sum},
    {"jensen-cp", "F(Phi(A)) <= Phi(F(A)) argumentwise for unital CP maps Phi",
     &sample_jensen_cp, &eval_jensen_cp},
};

}  // namespace

std::span<const SuiteDef> jensen_suites() { return kJensenSuites; }

}  // namespace opcheck::suites_detail
