#ifndef OPCHECK_SUITES_INTERNAL_HPP
#define OPCHECK_SUITES_INTERNAL_HPP

#include <optional>
#include <span>

#include "opcheck/cpmaps.hpp"
#include "opcheck/errors.hpp"
#include "opcheck/regular_maps.hpp"
#include "opcheck/suites.hpp"

namespace opcheck::suites_detail {

struct SuiteDef {
  const char* name;
  const char* summary;
  json (*sample)(const SuiteConfig&, int trial, rng::Stream& rng);
  EvalResult (*evaluate)(const json& payload);
};

std::span<const SuiteDef> jensen_suites();
std::span<const SuiteDef> filtering_suites();
std::span<const SuiteDef> lr_suites();

// ---- shared sampling helpers -------------------------------------------

inline constexpr int kResampleBudget = 64;

/// Common payload fields every evaluator needs.
inline json payload_header(const SuiteConfig& cfg, const char* suite) {
  return json{{"suite", suite}, {"tol_abs", cfg.tol_abs}, {"tol_rel", cfg.tol_rel}};
}

/// Operand draw honoring a map's domain: PD in general; for psd-domain
/// maps whose spectral function is Lipschitz at 0, every fourth trial
/// uses singular PSD operands to exercise the boundary.
inline HermitianMatrix draw_operand(const OperatorMapDescriptor& F, const SuiteConfig& cfg,
                                    int trial, rng::Stream& rng) {
  if (F.domain == SpectralDomain::psd && F.boundary_stable && trial % 4 == 3 && cfg.dim > 1)
    return random_psd_rank(cfg.dim, cfg.dim - 1, rng);
  return random_pd(cfg.dim, cfg.cond_cap, rng);
}

/// True when an operand image is comfortably PD: lambda_min > 0 and
/// lambda_min >= 1e-8 * ||X||_2.  Near-singular images measure roundoff
/// rather than the inequality, so samplers redraw instead.
inline bool comfortably_pd(const HermitianMatrix& X) {
  const auto ed = eigh(X);
  const double lo = ed.eigenvalues.front();
  const double scale = std::max(std::abs(lo), std::abs(ed.eigenvalues.back()));
  return lo > 0.0 && lo >= 1e-8 * scale;
}

[[noreturn]] inline void resample_exhausted(const char* suite) {
  throw NumericalFailure(std::string(suite) +
                         ": resampling budget exhausted (persistently near-singular images)");
}

/// Run `fn` until it yields a payload, retrying (continuing on the same
/// trial stream) on a returned nullopt or a SingularNormalization from a
/// channel draw.  Gives up after kResampleBudget attempts.
template <typename Fn>
json sample_with_budget(const char* suite, Fn&& fn) {
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    try {
      std::optional<json> p = fn();
      if (p) return std::move(*p);
    } catch (const SingularNormalization&) {
      // channel normalizer was singular for this draw; redraw
    }
  }
  resample_exhausted(suite);
}

// ---- channel specifiers --------------------------------------------------

struct ChannelSpec {
  enum class Kind { identity, random, ptrace } kind = Kind::identity;
  Normalization norm = Normalization::none;
  int rank = 1;
  int d1 = 0, d2 = 0, factor = 0;
};

/// "identity" | "random:<none|unital|trace_preserving>:rank=<r>" |
/// "ptrace:<d1>x<d2>:factor=<1|2>"
ChannelSpec parse_channel(const std::string& spec);

/// Input/output dimensions the channel will have under `cfg`; validates
/// compatibility with cfg.dim / cfg.dim_out (ConfigError).
void check_channel(const ChannelSpec& ch, const SuiteConfig& cfg);

/// Draw/construct the channel for one trial.  Deterministic given the
/// stream state; random channels that fail normalization are reported
/// via SingularNormalization (caller redraws within its budget).
CPMap realize_channel(const ChannelSpec& ch, const SuiteConfig& cfg, rng::Stream& rng);

// ---- evaluation helpers --------------------------------------------------

/// tol_abs + tol_rel * max spectral norm + iterative-map widening
/// 10 * residual_tol * dim.
inline double slack_tolerance(const json& payload, const HermitianMatrix& a,
                              const HermitianMatrix& b, double residual_tol, int dim) {
  return effective_tolerance(payload.at("tol_abs").get<double>(),
                             payload.at("tol_rel").get<double>(), a, b) +
         10.0 * residual_tol * dim;
}

/// lambda_min(hi - lo) packaged with its tolerance.
inline EvalResult loewner_slack(const json& payload, const HermitianMatrix& hi,
                                const HermitianMatrix& lo, double residual_tol, int dim) {
  EvalResult r;
  r.tol = slack_tolerance(payload, hi, lo, residual_tol, dim);
  const auto ed = eigh(hi - lo);
  r.slack = ed.eigenvalues.front();
  return r;
}

std::vector<HermitianMatrix> hermitian_list_from_json(const json& j);
json hermitian_list_to_json(std::span<const HermitianMatrix> list);

}  // namespace opcheck::suites_detail

#endif  // OPCHECK_SUITES_INTERNAL_HPP
