// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "ratpull/configlib.hpp"
#include "ratpull/error.hpp"
#include "ratpull/mmatrix.hpp"
#include "ratpull/pullback.hpp"

using namespace ratpull;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    if (!ok) ++count_;
  }
  Outcome outcome(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failure(s), first: " + first_};
  }

 private:
  int count_ = 0;
  std::string first_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

DivisorInput lambda_only(RatVector lambda) {
  DivisorInput d;
  d.lambda = std::move(lambda);
  return d;
}

IntersectionConfig config_of(RatMatrix phi) {
  IntersectionConfig cfg;
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    cfg.divisors.push_back("E" + std::to_string(i + 1));
    cfg.chosen_curves.push_back("C" + std::to_string(i + 1));
  }
  cfg.phi = std::move(phi);
  return cfg;
}

std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Outcome golden_suite() {
  const auto t0 = Clock::now();
  Failures f;
  auto check = [&](const std::string& name, const RatMatrix& phi, const RatVector& lambda,
                   const RatVector& expected) {
    const auto got = compute_pullback(config_of(phi), lambda_only(lambda)).coefficients;
    f.expect(got == expected, name);
  };
  check("A1", RatMatrix{{-2}}, {1}, {rat(1, 2)});
  check("A2", RatMatrix{{-2, 1}, {1, -2}}, {1, 0}, {rat(2, 3), rat(1, 3)});
  check("A3", RatMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}, {1, 0, 0},
        {rat(3, 4), rat(1, 2), rat(1, 4)});
  for (long long n = 2; n <= 10; ++n) {
    check("-" + std::to_string(n) + " curve", RatMatrix{{-n}}, {1}, {rat(1, n)});
  }
  check("HJ-5/2", RatMatrix{{-3, 1}, {1, -2}}, {1, 0}, {rat(2, 5), rat(1, 5)});
  check("nonsymmetric", RatMatrix{{-2, 3}, {1, -4}}, {1, 1}, {1, 1});

  // the same values through the builtin library
  for (const auto& e : builtin_examples()) {
    f.expect(run_example(e).empty(), "library entry " + e.name);
  }
  const double elapsed = seconds_since(t0);
  f.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
  std::ostringstream os;
  os << "exact match, " << elapsed << " s";
  return f.outcome(os.str());
}

Outcome m_matrix_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  Failures f;
  const int instances = 1500;
  int positive = 0;
  for (int k = 0; k < instances; ++k) {
    const ZMatrix a = as_z_matrix(gen::z_matrix(rng, gen::dimension(rng, 1, 6)));
    const bool minors = check_minors(a).all_positive;
    const bool inverse = check_inverse_nonneg(a).nonnegative;
    const auto x = check_certificate(a);
    const bool certificate = x.has_value() && verify_certificate(a, *x);
    f.expect(minors == inverse && inverse == certificate,
             "instance " + std::to_string(k) + " disagrees");
    positive += minors;
  }
  const double elapsed = seconds_since(t0);
  f.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
  std::ostringstream os;
  os << instances << " Z-matrices, " << positive << " M / " << instances - positive
     << " non-M, " << elapsed << " s";
  return f.outcome(os.str());
}

Outcome theorem_contracts() {
  std::mt19937_64 rng(777);
  Failures f;
  const int instances = 600;
  for (int k = 0; k < instances; ++k) {
    const std::size_t n = gen::dimension(rng, 1, 6);
    const IntersectionConfig cfg = gen::certified_config(rng, n);
    const RatVector l1 = gen::nonneg_vector(rng, n);
    const RatVector l2 = gen::nonneg_vector(rng, n);
    const std::string tag = "config " + std::to_string(k);

    const auto r1 = compute_pullback(cfg, lambda_only(l1));
    const auto r2 = compute_pullback(cfg, lambda_only(l2));
    const auto r12 = compute_pullback(cfg, lambda_only(add(l1, l2)));

    for (const auto& c : r1.coefficients) f.expect(c.sign() >= 0, tag + ": effectivity");
    f.expect(r1.effectivity, tag + ": effectivity flag");
    f.expect(r12.coefficients == add(r1.coefficients, r2.coefficients), tag + ": linearity");

    const Rational c = gen::nonneg_rational(rng, 20, 7) + rat(1, 11);
    const auto rc = compute_pullback(cfg, lambda_only(scale(c, l1)));
    f.expect(rc.coefficients == scale(c, r1.coefficients), tag + ": scale covariance");

    for (const auto* r : {&r1, &r2, &r12, &rc}) {
      for (const auto& x : r->projection_residuals) {
        f.expect(x.is_zero(), tag + ": projection residual");
      }
    }
    // recompute residuals independently of the library's own check
    const RatVector residual = add(l1, vec_mat(r1.coefficients, cfg.phi));
    for (const auto& x : residual) f.expect(x.is_zero(), tag + ": recomputed residual");

    for (std::size_t i = 0; i < n; ++i) {
      Rational delta = gen::small_rational(rng);
      if (delta.is_zero()) delta = rat(-2, 9);
      f.expect(perturbation_breaks_residuals(cfg, lambda_only(l1), r1, i, delta),
               tag + ": uniqueness at " + std::to_string(i));
    }
  }
  return f.outcome(std::to_string(instances) +
                   " certified configs: effectivity, linearity, scale covariance, "
                   "zero residuals, uniqueness");
}

Outcome cartier_compatibility() {
  std::mt19937_64 rng(31415);
  Failures f;
  int accepted = 0;
  int attempts = 0;
  while (accepted < 250 && attempts < 50000) {
    ++attempts;
    const std::size_t n = gen::dimension(rng, 1, 6);
    const IntersectionConfig cfg = gen::certified_config(rng, n);
    RatVector w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(Rational(std::uniform_int_distribution<long long>(0, 12)(rng)));
    }
    // lambda = w * (-phi), i.e. D' + sum w_i E_i numerically trivial on every C_j
    const RatVector lambda = vec_mat(w, scale(Rational(-1), cfg.phi));
    bool nonneg = true;
    for (const auto& x : lambda) nonneg = nonneg && x.sign() >= 0;
    if (!nonneg) continue;
    ++accepted;
    const auto r = compute_pullback(cfg, lambda_only(lambda));
    f.expect(r.coefficients == w, "instance " + std::to_string(accepted));
  }
  f.expect(accepted >= 200, "only " + std::to_string(accepted) + " instances generated");
  return f.outcome(std::to_string(accepted) + " integer w recovered exactly");
}

Outcome symmetric_path_agreement() {
  Failures f;
  int checked = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "E6", "E7", "E8"}) {
    const auto& e = find_example(name);
    const std::size_t r = e.config.rank();
    for (std::size_t k = 0; k < r; ++k) {
      RatVector lambda(r, Rational(0));
      lambda[k] = Rational(1);
      const auto generic = compute_pullback(e.config, lambda_only(lambda));
      const auto symmetric = mumford_surface_pullback(e.config, lambda_only(lambda));
      f.expect(generic.coefficients == symmetric.coefficients &&
                   symmetric.symmetric_path_agrees == true,
               std::string(name) + " lambda=e" + std::to_string(k + 1));
      ++checked;
    }
  }
  return f.outcome("A1-A4, D4, E6, E7, E8 over all unit lambdas (" + std::to_string(checked) +
                   " solves)");
}

Outcome failure_paths() {
  Failures f;
  const auto& conifold = find_example("conifold");
  f.expect(error_kind([&] { compute_pullback(conifold.config, conifold.divisor); }) ==
               ErrorKind::NoRationalPullback,
           "conifold");
  f.expect(error_kind([] {
             compute_pullback(config_of(RatMatrix{{-1, 2}, {2, -1}}), lambda_only({1, 0}));
           }) == ErrorKind::NotMMatrix,
           "indefinite symmetric");
  f.expect(error_kind([] {
             compute_pullback(config_of(RatMatrix{{-2, -1}, {1, -2}}), lambda_only({1, 0}));
           }) == ErrorKind::SignViolation,
           "sign violation");
  const auto& disconnected = find_example("disconnected");
  f.expect(error_kind([&] { compute_pullback(disconnected.config, disconnected.divisor); }) ==
               ErrorKind::DisconnectedConfiguration,
           "disconnected");
  return f.outcome("NoRationalPullback, NotMMatrix, SignViolation, DisconnectedConfiguration");
}

Outcome spectral_advisory() {
  Failures f;
  const ZMatrix a = as_z_matrix(RatMatrix{{2, -1}, {-1, 2}});
  const Rational s = canonical_shift(a);
  f.expect(s == Rational(2), "s = " + s.to_string());
  f.expect(shifted_complement(a, s) == RatMatrix{{0, 1}, {1, 0}}, "B = [[0,1],[1,0]]");
  const auto est = spectral_estimate(a);
  f.expect(std::abs(est.rho_hat - 1.0) <= 1e-6, "rho_hat = " + std::to_string(est.rho_hat));

  const Rational s2 = s + Rational(3);
  const auto est2 = spectral_estimate(a, s2);
  f.expect((est.rho_hat < est.s) == (est2.rho_hat < est2.s), "advisory verdict changes with s");
  const RatMatrix rebuilt = subtract(scale(s2, RatMatrix::identity(2)), shifted_complement(a, s2));
  f.expect(is_invertible_m_matrix(as_z_matrix(rebuilt)).verdict ==
               is_invertible_m_matrix(a).verdict,
           "exact verdict changes with s");
  std::ostringstream os;
  os << "rho_hat = " << est.rho_hat << " (s = 2), rho_hat' = " << est2.rho_hat << " (s' = 5)";
  return f.outcome(os.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden suite", golden_suite},
      {"M-matrix equivalence property", m_matrix_equivalence},
      {"theorem-contract properties", theorem_contracts},
      {"Cartier compatibility", cartier_compatibility},
      {"symmetric path agreement", symmetric_path_agreement},
      {"failure paths", failure_paths},
      {"advisory spectral estimate", spectral_advisory},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first
              << ": " << o.detail << "\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
