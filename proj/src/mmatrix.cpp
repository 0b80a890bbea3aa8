#include "ratpull/mmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ratpull/error.hpp"

namespace ratpull {

ZMatrix as_z_matrix(const RatMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare, "Z-matrix must be square");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j).sign() > 0) {
        throw Error(ErrorKind::NotZPattern,
                    "positive off-diagonal entry " + m(i, j).to_string() + " at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")",
                    i, j);
      }
    }
  }
  return ZMatrix(m);
}

MinorsCheck check_minors(const ZMatrix& a) {
  MinorsCheck out;
  out.all_positive = true;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    Rational minor = det(a.matrix().leading_block(k));
    if (minor.sign() <= 0) out.all_positive = false;
    out.minors.push_back(std::move(minor));
  }
  return out;
}

InverseCheck check_inverse_nonneg(const ZMatrix& a) {
  InverseCheck out;
  try {
    out.inverse = inverse(a.matrix());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    return out;
  }
  out.nonnegative = std::all_of(out.inverse->entries().begin(),
                                out.inverse->entries().end(),
                                [](const Rational& x) { return x.sign() >= 0; });
  return out;
}

std::optional<RatVector> check_certificate(const ZMatrix& a) {
  const RatVector ones(a.size(), Rational(1));
  RatVector x;
  try {
    x = solve_right(a.matrix(), ones);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    return std::nullopt;
  }
  if (!std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() > 0; })) {
    return std::nullopt;
  }
  return x;
}

bool verify_certificate(const ZMatrix& a, const RatVector& x) {
  if (x.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "certificate length " + std::to_string(x.size()) +
                    " does not match dimension " + std::to_string(a.size()));
  }
  auto positive = [](const Rational& v) { return v.sign() > 0; };
  if (!std::all_of(x.begin(), x.end(), positive)) return false;
  const RatVector ax = mat_vec(a.matrix(), x);
  return std::all_of(ax.begin(), ax.end(), positive);
}

Rational canonical_shift(const ZMatrix& a) {
  if (a.size() == 0) return Rational(1);
  Rational s = a.matrix()(0, 0);
  for (std::size_t i = 1; i < a.size(); ++i) s = std::max(s, a.matrix()(i, i));
  return s.sign() > 0 ? s : Rational(1);
}

RatMatrix shifted_complement(const ZMatrix& a, const Rational& s) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.matrix()(i, i) > s) {
      throw Error(ErrorKind::InvariantViolation,
                  "shift " + s.to_string() + " is below diagonal entry " +
                      a.matrix()(i, i).to_string());
    }
  }
  return subtract(scale(s, RatMatrix::identity(a.size())), a.matrix());
}

SpectralEstimate spectral_estimate(const ZMatrix& a) {
  return spectral_estimate(a, canonical_shift(a));
}

SpectralEstimate spectral_estimate(const ZMatrix& a, const Rational& s) {
  const RatMatrix exact_b = shifted_complement(a, s);
  const std::size_t n = a.size();
  std::vector<double> b(n * n);
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = exact_b.entries()[k].to_double();

  SpectralEstimate out;
  out.s = s.to_double();
  if (n == 0) return out;

  std::vector<double> x(n, 1.0), y(n);
  double previous = 0.0;
  double estimate = 0.0;
  for (std::size_t it = 0; it < kPowerIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += b[i * n + j] * x[j];
      y[i] = acc;
    }
    // x is L-infinity normalized, so ||Bx|| / ||x|| is just ||Bx||.
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, std::abs(v));
    previous = estimate;
    estimate = norm;
    out.iterations = it + 1;
    if (norm == 0.0) {
      previous = 0.0;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  out.rho_hat = estimate;
  out.converged = std::abs(estimate - previous) <= kPowerTolerance;
  return out;
}

MMatrixReport is_invertible_m_matrix(const ZMatrix& a) {
  MMatrixReport report;
  report.minors = check_minors(a);
  report.inverse = check_inverse_nonneg(a);
  report.certificate_x = check_certificate(a);

  const bool by_minors = report.minors.all_positive;
  const bool by_inverse = report.inverse.nonnegative;
  const bool by_certificate =
      report.certificate_x.has_value() && verify_certificate(a, *report.certificate_x);

  if (by_minors != by_inverse || by_minors != by_certificate) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string("M-matrix characterizations disagree: minors=") +
                    (by_minors ? "true" : "false") +
                    " inverse=" + (by_inverse ? "true" : "false") +
                    " certificate=" + (by_certificate ? "true" : "false"));
  }
  report.verdict = by_minors;
  report.spectral = spectral_estimate(a);
  return report;
}

}  // namespace ratpull
