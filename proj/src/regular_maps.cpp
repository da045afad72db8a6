#include "opcheck/regular_maps.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "opcheck/errors.hpp"
#include "opcheck/lieb_ruskai.hpp"
#include "opcheck/means.hpp"
#include "opcheck/perspective.hpp"

namespace opcheck {

HermitianMatrix OperatorMapDescriptor::operator()(
    std::span<const HermitianMatrix> args) const {
  if (static_cast<int>(args.size()) != arity)
    throw ShapeError("map '" + name + "' takes " + std::to_string(arity) + " operands, got " +
                     std::to_string(args.size()));
  for (const auto& a : args)
    if (a.dim() != args.front().dim())
      throw ShapeError("map '" + name + "': operands of mixed dimension");
  return evaluate(args);
}

HermitianMatrix OperatorMapDescriptor::operator()(
    std::initializer_list<HermitianMatrix> args) const {
  return (*this)(std::span<const HermitianMatrix>(args.begin(), args.size()));
}

namespace {

double parse_param(const std::string& spec, const std::string& body) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &pos);
  } catch (const std::exception&) {
    throw ConfigError("map specifier '" + spec + "': bad numeric parameter '" + body + "'");
  }
  if (pos != body.size())
    throw ConfigError("map specifier '" + spec + "': bad numeric parameter '" + body + "'");
  return v;
}

// One summand of a lift or sum-of-lifts map.
struct LiftPart {
  std::function<HermitianMatrix(const HermitianMatrix&)> eval;
  SpectralDomain domain = SpectralDomain::psd;
  bool zero_ok = true;
  bool homogeneous = false;
  bool boundary_stable = true;
};

LiftPart parse_lift(const std::string& spec, const std::string& body) {
  LiftPart part;
  if (body == "square") {
    part.eval = [](const HermitianMatrix& A) {
      return HermitianMatrix::from_general(matmul(A.mat(), A.mat()));
    };
    return part;
  }
  if (body == "inverse") {
    part.eval = [](const HermitianMatrix& A) {
      return apply_spectral(ScalarFn::inverse(), A);
    };
    part.domain = SpectralDomain::pd;
    part.zero_ok = false;
    return part;
  }
  if (body == "xlogx") {
    part.eval = [](const HermitianMatrix& A) {
      return map_spectrum(A, SpectralDomain::pd, "xlogx",
                          [](double x) { return x * std::log(x); });
    };
    part.domain = SpectralDomain::pd;
    part.zero_ok = false;
    return part;
  }
  if (body.rfind("power:", 0) == 0) {
    const double p = parse_param(spec, body.substr(6));
    if (!(p >= 1.0 && p <= 2.0))
      throw ConfigError("map specifier '" + spec +
                        "': operator convexity of t^p requires p in [1,2]");
    part.eval = [p](const HermitianMatrix& A) { return apply_spectral(ScalarFn::power(p), A); };
    part.homogeneous = (p == 1.0);
    return part;
  }
  if (body.rfind("negpow:", 0) == 0) {
    const double a = parse_param(spec, body.substr(7));
    if (!(a > 0.0 && a < 1.0))
      throw ConfigError("map specifier '" + spec +
                        "': operator concavity of t^a requires a in (0,1)");
    part.eval = [a](const HermitianMatrix& A) {
      return -1.0 * apply_spectral(ScalarFn::power(a), A);
    };
    part.boundary_stable = false;  // d/dt t^a blows up at 0
    return part;
  }
  throw ConfigError("map specifier '" + spec + "': unknown lift '" + body + "'");
}

OperatorMapDescriptor from_lift_parts(std::string name, std::vector<LiftPart> parts) {
  OperatorMapDescriptor d;
  d.name = std::move(name);
  d.arity = 1;
  d.curvature = OperatorMapDescriptor::Curvature::convex;
  d.domain = SpectralDomain::psd;
  d.zero_value_nonpositive = true;
  d.homogeneous = true;
  for (const auto& p : parts) {
    if (p.domain == SpectralDomain::pd) d.domain = SpectralDomain::pd;
    d.zero_value_nonpositive = d.zero_value_nonpositive && p.zero_ok;
    d.homogeneous = d.homogeneous && p.homogeneous;
    d.boundary_stable = d.boundary_stable && p.boundary_stable;
  }
  if (d.domain == SpectralDomain::pd) d.zero_value_nonpositive = false;
  d.evaluate = [parts = std::move(parts)](std::span<const HermitianMatrix> args) {
    HermitianMatrix acc = parts.front().eval(args[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc += parts[i].eval(args[0]);
    return acc;
  };
  return d;
}

OperatorMapDescriptor negated_mean(const std::string& spec, const MeanSpec& m) {
  OperatorMapDescriptor d;
  d.name = spec;
  d.arity = m.arity();
  d.curvature = OperatorMapDescriptor::Curvature::convex;
  d.homogeneous = true;
  d.domain = SpectralDomain::pd;
  d.residual_tol = (m.kind == MeanSpec::Kind::karcher) ? kKarcherTol : 0.0;
  d.evaluate = [m](std::span<const HermitianMatrix> args) {
    return -1.0 * evaluate_mean(m, args);
  };
  return d;
}

}  // namespace

OperatorMapDescriptor find_map(const std::string& spec) {
  if (spec.rfind("lift:", 0) == 0)
    return from_lift_parts(spec, {parse_lift(spec, spec.substr(5))});

  if (spec.rfind("sum:", 0) == 0) {
    std::vector<LiftPart> parts;
    std::string rest = spec.substr(4);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const std::size_t plus = rest.find('+', start);
      const std::string body =
          rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      if (body.empty()) throw ConfigError("map specifier '" + spec + "': empty summand");
      parts.push_back(parse_lift(spec, body));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    if (parts.size() < 2)
      throw ConfigError("map specifier '" + spec + "': sum needs at least two summands");
    return from_lift_parts(spec, std::move(parts));
  }

  if (spec.rfind("negmean:", 0) == 0)
    return negated_mean(spec, MeanSpec::parse(spec.substr(8)));

  if (spec == "lr:basic") {
    OperatorMapDescriptor d;
    d.name = spec;
    d.arity = 2;
    d.curvature = OperatorMapDescriptor::Curvature::convex;
    d.homogeneous = true;
    d.domain = SpectralDomain::pd;
    d.evaluate = [](std::span<const HermitianMatrix> args) {
      return lr_basic(args[0], args[1].mat());
    };
    return d;
  }

  if (spec.rfind("lr:n:", 0) == 0) {
    const MeanSpec m = MeanSpec::parse(spec.substr(5));
    OperatorMapDescriptor d;
    d.name = spec;
    d.arity = m.arity() + 1;
    d.curvature = OperatorMapDescriptor::Curvature::convex;
    d.homogeneous = true;
    d.domain = SpectralDomain::pd;
    d.residual_tol = (m.kind == MeanSpec::Kind::karcher) ? kKarcherTol : 0.0;
    d.evaluate = [m](std::span<const HermitianMatrix> args) {
      return lr_n(m, args.subspan(0, args.size() - 1), args.back());
    };
    return d;
  }

  if (spec.rfind("lr:weighted:", 0) == 0) {
    const double a = parse_param(spec, spec.substr(12));
    if (!(a >= 0.0 && a <= 1.0))
      throw ConfigError("map specifier '" + spec + "': alpha must be in [0,1]");
    OperatorMapDescriptor d;
    d.name = spec;
    d.arity = 3;
    d.curvature = OperatorMapDescriptor::Curvature::convex;
    d.homogeneous = true;
    d.domain = SpectralDomain::pd;
    d.evaluate = [a](std::span<const HermitianMatrix> args) {
      return lr_weighted(a, args[0], args[1], args[2].mat());
    };
    return d;
  }

  if (spec.rfind("persp:", 0) == 0) return perspective_descriptor(find_map(spec.substr(6)));

  throw ConfigError("unknown map specifier '" + spec + "'");
}

const std::vector<OperatorMapDescriptor>& catalog() {
  static const std::vector<OperatorMapDescriptor> maps = [] {
    const char* names[] = {
        "lift:square",          "lift:power:1.0",       "lift:power:1.5",
        "lift:power:2.0",       "lift:inverse",         "lift:negpow:0.25",
        "lift:negpow:0.5",      "lift:negpow:0.75",     "lift:xlogx",
        "sum:square+negpow:0.5", "sum:inverse+xlogx",   "negmean:binary:0.25",
        "negmean:binary:0.5",   "negmean:binary:0.75",  "negmean:inductive:3",
        "negmean:karcher:3",    "lr:basic",             "lr:n:karcher:3",
        "lr:weighted:0.5",
    };
    std::vector<OperatorMapDescriptor> v;
    for (const char* n : names) v.push_back(find_map(n));
    return v;
  }();
  return maps;
}

CurvatureProbe probe_curvature(const OperatorMapDescriptor& F, int dim, int trials,
                               std::uint64_t seed, double tol_abs, double tol_rel,
                               double cond_cap) {
  if (dim < 1 || trials < 1) throw ConfigError("probe_curvature: dim and trials must be >= 1");
  CurvatureProbe probe;
  probe.trials = trials;
  probe.worst_slack = std::numeric_limits<double>::infinity();

  const bool convex = F.curvature == OperatorMapDescriptor::Curvature::convex;
  for (int t = 0; t < trials; ++t) {
    rng::Stream rng = rng::substream(seed, static_cast<std::uint64_t>(t));
    const bool singular = F.domain == SpectralDomain::psd && t % 4 == 3 && dim > 1;
    auto draw = [&]() {
      return singular ? random_psd_rank(dim, dim - 1, rng) : random_pd(dim, cond_cap, rng);
    };
    std::vector<HermitianMatrix> X, Y, M;
    const double lambda = rng.uniform();
    for (int i = 0; i < F.arity; ++i) {
      X.push_back(draw());
      Y.push_back(draw());
      M.push_back(lambda * X.back() + (1.0 - lambda) * Y.back());
    }
    const HermitianMatrix lhs = lambda * F(X) + (1.0 - lambda) * F(Y);
    const HermitianMatrix rhs = F(M);
    const double tol = effective_tolerance(tol_abs, tol_rel, lhs, rhs) +
                       10.0 * F.residual_tol * dim;
    const LoewnerVerdict v =
        convex ? loewner_geq(lhs, rhs, tol) : loewner_geq(rhs, lhs, tol);
    if (!v.holds) ++probe.failures;
    probe.worst_slack = std::min(probe.worst_slack, v.min_slack);
  }
  return probe;
}

}  // namespace opcheck
