#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratpull/ratmat.hpp"

namespace ratpull {

/// Square matrix with every off-diagonal entry <= 0.
class ZMatrix {
 public:
  const RatMatrix& matrix() const noexcept { return inner_; }
  std::size_t size() const noexcept { return inner_.rows(); }

  friend ZMatrix as_z_matrix(const RatMatrix& m);

 private:
  explicit ZMatrix(RatMatrix m) : inner_(std::move(m)) {}
  RatMatrix inner_;
};

/// Throws NonSquare, or NotZPattern(row, col) at the first positive
/// off-diagonal entry in row-major order.
ZMatrix as_z_matrix(const RatMatrix& m);

struct MinorsCheck {
  std::vector<Rational> minors;  // leading principal minors, sizes 1..r
  bool all_positive = false;
};

struct InverseCheck {
  bool nonnegative = false;
  std::optional<RatMatrix> inverse;  // present whenever A is invertible
};

/// Floating power-iteration estimate for A = sE - B. Diagnostics only.
struct SpectralEstimate {
  double s = 0.0;
  double rho_hat = 0.0;
  bool converged = true;
  std::size_t iterations = 0;
};

struct MMatrixReport {
  bool verdict = false;
  MinorsCheck minors;
  InverseCheck inverse;
  std::optional<RatVector> certificate_x;
  std::optional<SpectralEstimate> spectral;
};

MinorsCheck check_minors(const ZMatrix& a);
InverseCheck check_inverse_nonneg(const ZMatrix& a);

/// x solving A x = (1, ..., 1), returned only when every entry is > 0.
std::optional<RatVector> check_certificate(const ZMatrix& a);

/// True iff every x_i > 0 and every (A x)_i > 0. Throws DimensionMismatch.
bool verify_certificate(const ZMatrix& a, const RatVector& x);

/// Canonical shift: the largest diagonal entry when positive, otherwise 1.
Rational canonical_shift(const ZMatrix& a);

/// B = sE - A. Nonnegative whenever s is at least every diagonal entry.
RatMatrix shifted_complement(const ZMatrix& a, const Rational& s);

inline constexpr std::size_t kPowerIterations = 200;
inline constexpr double kPowerTolerance = 1e-9;

/// Power iteration on B = sE - A with s = canonical_shift(a).
SpectralEstimate spectral_estimate(const ZMatrix& a);
/// Same, with a caller-chosen shift s (must be >= every diagonal entry).
SpectralEstimate spectral_estimate(const ZMatrix& a, const Rational& s);

/// Runs all three exact checks and requires them to agree; the verdict never
/// depends on the spectral estimate. Throws InternalInconsistency on
/// disagreement.
MMatrixReport is_invertible_m_matrix(const ZMatrix& a);

}  // namespace ratpull
