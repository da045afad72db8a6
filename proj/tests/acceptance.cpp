// Acceptance gate: exercises the full verification surface and prints one
// [PASS]/[FAIL] line per criterion.  Exit status is the number of failed
// criteria, so it slots directly into ctest.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "opcheck/cpmaps.hpp"
#include "opcheck/lieb_ruskai.hpp"
#include "opcheck/suites.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace opcheck;
using testutil::diag;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << v;
  return os.str();
}

fs::path g_dump_root;

/// Accumulates run_suite results across a criterion's sweep.
struct Tally {
  int runs = 0;
  long trials = 0;
  int failures = 0;
  double worst = 0.0;
  bool any = false;

  void add(const SuiteReport& r) {
    ++runs;
    trials += static_cast<long>(r.trials.size());
    failures += r.failures;
    if (!any || r.worst_slack < worst) worst = r.worst_slack;
    any = true;
  }

  std::string summary() const {
    std::ostringstream os;
    os << runs << " runs, " << trials << " trials, " << failures
       << " failures, worst slack " << sci(worst);
    return os.str();
  }
};

SuiteReport run(const SuiteConfig& cfg) {
  RunOptions opts;
  opts.dump_dir = (g_dump_root / cfg.suite).string();
  return run_suite(cfg, opts);
}

double max_unit_action_diff(const CPMap& a, const CPMap& b) {
  double worst = 0.0;
  for (int i = 0; i < a.dim_in; ++i)
    for (int j = 0; j < a.dim_in; ++j) {
      GeneralMatrix E(a.dim_in, a.dim_in);
      E(i, j) = 1.0;
      worst = std::max(worst, testutil::frob_diff(apply(a, E), apply(b, E)));
    }
  return worst;
}

HermitianMatrix random_diag(int dim, rng::Stream& rng) {
  std::vector<double> d(static_cast<std::size_t>(dim));
  for (auto& x : d) x = 0.5 + 0.5 * rng.uniform();  // entries in [0.5, 1]
  return HermitianMatrix::diagonal(d);
}

// Maps defined on all of PSD with F(0) <= 0: the set every Jensen-type
// compression form accepts.
const std::vector<std::string> kJensenMaps = {
    "lift:square",      "lift:power:1.0",   "lift:power:1.5",
    "lift:power:2.0",   "lift:negpow:0.25", "lift:negpow:0.5",
    "lift:negpow:0.75", "sum:square+negpow:0.5"};

// --- criterion 1: Jensen suites across the eligible catalog -----------------

Outcome criterion_jensen() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  for (const char* suite : {"jensen-contraction", "jensen-sum", "jensen-cp"}) {
    for (const auto& map : kJensenMaps) {
      for (int dim = 2; dim <= 6; ++dim) {
        for (std::uint64_t seed : {1, 2, 3}) {
          SuiteConfig cfg;
          cfg.suite = suite;
          cfg.map = map;
          cfg.dim = dim;
          cfg.trials = 200;
          cfg.seed = seed;
          if (cfg.suite == "jensen-cp") cfg.channel = "random:unital:rank=4";
          tally.add(run(cfg));
        }
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << tally.summary() << ", " << std::fixed;
  os.precision(1);
  os << secs << "s (limit 60s)";
  return {tally.failures == 0 && secs < 60.0, os.str()};
}

// --- criterion 2: perspective filtering under CP maps -----------------------

Outcome criterion_perspective_filter() {
  struct Channel {
    std::string spec;
    int dim;
    int dim_out;
  };
  std::vector<Channel> channels = {{"identity", 4, 0},
                                   {"ptrace:2x2:factor=2", 4, 2},
                                   {"ptrace:2x3:factor=1", 6, 3}};
  for (int rank : {2, 4, 6})
    for (const char* norm : {"none", "unital", "trace_preserving"})
      channels.push_back({"random:" + std::string(norm) + ":rank=" + std::to_string(rank), 4, 0});

  Tally tally;
  for (const char* map : {"lift:inverse", "lift:square", "negmean:binary:0.5"}) {
    for (const auto& ch : channels) {
      SuiteConfig cfg;
      cfg.suite = "perspective-filter";
      cfg.map = map;
      cfg.channel = ch.spec;
      cfg.dim = ch.dim;
      cfg.dim_out = ch.dim_out;
      cfg.trials = 200;
      tally.add(run(cfg));
    }
  }
  return {tally.failures == 0, tally.summary()};
}

// --- criterion 3: geometric means filter through CP maps --------------------

Outcome criterion_mean_filter() {
  Tally tally;
  for (const char* mean : {"binary:0.25", "binary:0.5", "binary:0.75", "inductive:3",
                           "inductive:4", "karcher:2", "karcher:3", "karcher:4"}) {
    SuiteConfig cfg;
    cfg.suite = "mean-filter";
    cfg.mean = mean;
    cfg.channel = "random:none:rank=4";
    cfg.dim = 4;
    cfg.trials = 200;
    tally.add(run(cfg));
  }
  return {tally.failures == 0, tally.summary()};
}

// --- criterion 4: Lieb-Ruskai family -----------------------------------------

Outcome criterion_lieb_ruskai() {
  Tally filter;
  for (int dim = 2; dim <= 6; ++dim) {
    SuiteConfig cfg;
    cfg.suite = "lr";
    cfg.map = "lr:basic";
    cfg.channel = "random:none:rank=4";
    cfg.dim = dim;
    cfg.trials = 200;
    filter.add(run(cfg));
  }

  Tally convex;
  for (const char* map : {"lr:basic", "lr:n:binary:0.5", "lr:n:inductive:3", "lr:n:karcher:3",
                          "lr:weighted:0.5"}) {
    SuiteConfig cfg;
    cfg.suite = "convexity";
    cfg.map = map;
    cfg.dim = 4;
    cfg.trials = 200;
    convex.add(run(cfg));
  }

  // Commuting closed forms on diagonal instances.
  rng::Stream rng(404);
  double worst_closed = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int dim = 2 + t % 4;
    for (const char* m : {"binary:0.5", "inductive:3", "karcher:3"}) {
      const MeanSpec spec = MeanSpec::parse(m);
      const int n = spec.arity();
      std::vector<HermitianMatrix> A;
      for (int i = 0; i < n; ++i) A.push_back(random_diag(dim, rng));
      const HermitianMatrix C = random_diag(dim, rng);
      std::vector<double> d(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        double prod = 1.0;
        for (const auto& a : A) prod *= std::pow(a(i, i).real(), -1.0 / n);
        d[i] = C(i, i).real() * prod * C(i, i).real();
      }
      worst_closed =
          std::max(worst_closed, testutil::frob_diff(lr_n(spec, A, C), diag(d)));
    }
    for (double alpha : {0.25, 0.5, 0.75}) {
      const HermitianMatrix A = random_diag(dim, rng);
      const HermitianMatrix B = random_diag(dim, rng);
      const HermitianMatrix C = random_diag(dim, rng);
      std::vector<double> d(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i)
        d[i] = C(i, i).real() * std::pow(A(i, i).real(), -alpha) *
               std::pow(B(i, i).real(), -(1.0 - alpha)) * C(i, i).real();
      worst_closed = std::max(
          worst_closed, testutil::frob_diff(lr_weighted(alpha, A, B, C.mat()), diag(d)));
    }
  }

  std::ostringstream os;
  os << "filter " << filter.summary() << "; convexity " << convex.summary()
     << "; closed-form diff " << sci(worst_closed) << " (tol 1e-10)";
  return {filter.failures == 0 && convex.failures == 0 && worst_closed <= 1e-10, os.str()};
}

// --- criterion 5: geometric mean axioms --------------------------------------

Outcome criterion_mean_axioms() {
  rng::Stream rng(505);
  double worst = 0.0;
  const char* worst_axiom = "none";
  bool ok = true;
  const auto check = [&](const char* axiom, double rel, double tol) {
    const double excess = rel / tol;  // normalized so axioms share a scoreboard
    if (excess > worst) {
      worst = excess;
      worst_axiom = axiom;
    }
    if (rel > tol) ok = false;
  };

  for (const char* m : {"binary:0.5", "inductive:3", "karcher:3"}) {
    const MeanSpec spec = MeanSpec::parse(m);
    const int n = spec.arity();
    for (int t = 0; t < 200; ++t) {
      const int dim = 2 + t % 5;
      std::vector<HermitianMatrix> A;
      for (int i = 0; i < n; ++i) A.push_back(random_pd(dim, 1e3, rng));
      const HermitianMatrix G = evaluate_mean(spec, A);

      // Homogeneity: G(tA) = t G(A).
      const double scale = 0.5 + 2.0 * rng.uniform();
      std::vector<HermitianMatrix> tA;
      for (const auto& a : A) tA.push_back(scale * a);
      check("homogeneity", testutil::rel_diff(evaluate_mean(spec, tA), scale * G), 1e-9);

      // Self-duality: G(A^{-1}) = G(A)^{-1}.
      std::vector<HermitianMatrix> inv;
      for (const auto& a : A) inv.push_back(apply_spectral(ScalarFn::inverse(), a));
      check("self-duality",
            testutil::rel_diff(evaluate_mean(spec, inv),
                               apply_spectral(ScalarFn::inverse(), G)),
            1e-8);

      // Congruence invariance: G(C^H A C) = C^H G(A) C.
      const GeneralMatrix C = random_ginibre(dim, dim, rng);
      std::vector<HermitianMatrix> conj;
      for (const auto& a : A) conj.push_back(congruence(a, C));
      check("congruence", testutil::rel_diff(evaluate_mean(spec, conj), congruence(G, C)),
            1e-8);

      // Idempotence: G(X, ..., X) = X.
      const std::vector<HermitianMatrix> copies(static_cast<std::size_t>(n), A[0]);
      check("idempotence", testutil::rel_diff(evaluate_mean(spec, copies), A[0]), 1e-9);

      // Commuting reduction: diagonal operands give entrywise weighted products.
      std::vector<HermitianMatrix> D;
      for (int i = 0; i < n; ++i) D.push_back(random_diag(dim, rng));
      std::vector<double> want(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        double v = 1.0;
        if (spec.kind == MeanSpec::Kind::binary)
          v = std::pow(D[0](i, i).real(), spec.alpha) *
              std::pow(D[1](i, i).real(), 1.0 - spec.alpha);
        else
          for (const auto& a : D) v *= std::pow(a(i, i).real(), 1.0 / n);
        want[i] = v;
      }
      check("commuting", testutil::frob_diff(evaluate_mean(spec, D), diag(want)), 1e-10);
    }
  }

  std::ostringstream os;
  os << "3 means x 200 trials x 5 axioms, worst margin " << sci(worst)
     << " of budget (" << worst_axiom << ")";
  return {ok, os.str()};
}

// --- criterion 6: cross-implementation oracles -------------------------------

Outcome criterion_oracles() {
  rng::Stream rng(606);
  double karcher_vs_binary = 0.0, nary_vs_weighted = 0.0, roundtrip = 0.0;

  for (int t = 0; t < 30; ++t) {
    const int dim = 2 + t % 4;
    const HermitianMatrix A = random_pd(dim, 1e3, rng);
    const HermitianMatrix B = random_pd(dim, 1e3, rng);
    const std::vector<HermitianMatrix> pair{A, B};
    karcher_vs_binary = std::max(
        karcher_vs_binary,
        testutil::rel_diff(karcher_mean(pair), binary_geometric(0.5, A, B)));

    const HermitianMatrix C = random_pd(dim, 1e2, rng);
    nary_vs_weighted = std::max(
        nary_vs_weighted, testutil::rel_diff(lr_n(MeanSpec::parse("karcher:2"), pair, C),
                                             lr_weighted(0.5, A, B, C.mat())));
  }

  for (int t = 0; t < 20; ++t) {
    const int din = 2 + t % 3, dout = 2 + (t + 1) % 3, rank = 1 + t % 8;
    const CPMap phi = random_cp(din, dout, rank, Normalization::none, rng);
    roundtrip = std::max(roundtrip, max_unit_action_diff(phi, kraus_from_choi(choi(phi))));
  }

  std::ostringstream os;
  os << "karcher(2) vs binary " << sci(karcher_vs_binary) << " (tol 1e-8), n-ary vs weighted "
     << sci(nary_vs_weighted) << " (tol 1e-8), Choi/Kraus roundtrip " << sci(roundtrip)
     << " (tol 1e-9)";
  return {karcher_vs_binary <= 1e-8 && nary_vs_weighted <= 1e-8 && roundtrip <= 1e-9, os.str()};
}

// --- criterion 7: numerical core ---------------------------------------------

Outcome criterion_numerical_core() {
  rng::Stream rng(707);
  double recon = 0.0, sqrt_back = 0.0, inv_resid = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int dim = 1 + t % 16;
    const HermitianMatrix H = random_hermitian(dim, rng);
    const auto ed = eigh(H);
    GeneralMatrix scaled = ed.vectors;
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) scaled(i, j) *= ed.eigenvalues[static_cast<std::size_t>(j)];
    const auto back = HermitianMatrix::from_general(matmul_adjoint_right(scaled, ed.vectors));
    recon = std::max(recon, testutil::frob_diff(back, H) / (1.0 + H.frobenius_norm()));

    const HermitianMatrix P = random_pd(dim, 1e3, rng);
    const HermitianMatrix R = apply_spectral(ScalarFn::sqrt(), P);
    sqrt_back = std::max(
        sqrt_back,
        testutil::frob_diff(HermitianMatrix::from_general(matmul(R.mat(), R.mat())), P) /
            (1.0 + P.frobenius_norm()));

    const HermitianMatrix I = HermitianMatrix::identity(dim);
    const auto prod = matmul(P.mat(), apply_spectral(ScalarFn::inverse(), P).mat());
    inv_resid = std::max(inv_resid, testutil::frob_diff(GeneralMatrix(prod), I.mat()));
  }
  std::ostringstream os;
  os << "1000 trials dims<=16: eigh recon " << sci(recon) << " (tol 1e-12), sqrt^2 back "
     << sci(sqrt_back) << " (tol 1e-10), inverse residual " << sci(inv_resid)
     << " (tol 1e-10)";
  return {recon <= 1e-12 && sqrt_back <= 1e-10 && inv_resid <= 1e-10, os.str()};
}

// --- criterion 8: determinism -------------------------------------------------

Outcome criterion_determinism() {
  bool ok = true;
  std::string note;
  for (const char* suite : {"jensen-sum", "lr", "mean-filter"}) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.dim = 4;
    cfg.trials = 50;
    cfg.seed = 7;
    if (cfg.suite == "lr") cfg.map = "lr:weighted:0.5";
    if (cfg.suite == "mean-filter") cfg.mean = "karcher:3";
    cfg.channel = cfg.suite == std::string("jensen-sum") ? "identity" : "random:none:rank=4";

    json a = to_json(run(cfg));
    json b = to_json(run(cfg));
    a.erase("wall_ms");
    b.erase("wall_ms");
    if (a.dump() != b.dump()) {
      ok = false;
      note += std::string(suite) + " differs; ";
    }
  }
  return {ok, ok ? "3 suites byte-identical across repeat runs (wall time excluded)" : note};
}

}  // namespace

int main() {
  g_dump_root = fs::temp_directory_path() / "opcheck-acceptance-dumps";
  fs::remove_all(g_dump_root);

  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"jensen suites over eligible catalog maps", criterion_jensen},
      {"perspective filtering under CP maps", criterion_perspective_filter},
      {"mean filtering for all geometric means", criterion_mean_filter},
      {"Lieb-Ruskai filtering, convexity, closed forms", criterion_lieb_ruskai},
      {"geometric mean axioms", criterion_mean_axioms},
      {"cross-implementation oracles", criterion_oracles},
      {"numerical core accuracy", criterion_numerical_core},
      {"bitwise deterministic reports", criterion_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.ok) ++failed;
    std::cout << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].name << " — " << out.detail << '\n';
  }
  std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << " criteria passed\n";
  if (failed == 0) fs::remove_all(g_dump_root);
  return failed;
}
