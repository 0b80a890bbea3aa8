#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratpull/mmatrix.hpp"
#include "ratpull/ratmat.hpp"

namespace ratpull {

/// A further curve C' lying on exceptional divisor `host`, with its
/// intersection numbers (E_i . C') for every i.
struct ExtraCurve {
  std::size_t host = 0;
  RatVector row;
  std::string name;
};

using Adjacency = std::vector<std::vector<bool>>;

/// Intersection data of a proper birational morphism.
///
/// Convention: phi(i, j) = (E_i . C_j), i the divisor index and j the index of
/// the curve chosen on E_j. The chosen curve C_j is therefore described by
/// column j of phi.
struct IntersectionConfig {
  std::vector<std::string> divisors;
  std::vector<std::string> chosen_curves;
  RatMatrix phi;
  std::vector<ExtraCurve> extra_curves;
  std::optional<Adjacency> adjacency;

  std::size_t rank() const noexcept { return divisors.size(); }

  /// Structural invariants: phi is r x r, one chosen curve per divisor,
  /// extra-curve rows of length r with a valid host, adjacency r x r and
  /// symmetric. Throws InvariantViolation.
  void check_invariants() const;
};

/// A vertical curve not hosted on any exceptional divisor, with its
/// intersection number against the strict transform. Only meaningful when
/// the configuration has no exceptional divisors.
struct VerticalCurve {
  std::string name;
  Rational lambda;
};

struct DivisorInput {
  RatVector lambda;               // (D' . C_j)
  RatVector extra_lambda;         // (D' . C') per extra curve, or empty
  Integer cartier_denominator = 1;  // n' with n'D' Cartier
  std::vector<VerticalCurve> vertical_curves;

  /// Throws InvariantViolation unless lambda has length r, extra_lambda is
  /// empty or matches the extra curves, and n' >= 1.
  void check_invariants(const IntersectionConfig& cfg) const;
};

struct PullbackOptions {
  /// Solve each connected block of the adjacency graph independently
  /// instead of refusing with DisconnectedConfiguration.
  bool allow_disconnected = false;
  /// Accept negative lambda entries. Effectivity is then not guaranteed.
  bool allow_signed_lambda = false;
};

struct ValidationReport {
  /// Connected blocks of divisor indices. A single block covering every
  /// divisor unless adjacency says otherwise.
  std::vector<std::vector<std::size_t>> components;
};

struct PullbackResult {
  RatVector coefficients;        // m_i / n
  Integer common_denominator = 1;  // n: lcm of the coefficient denominators
  std::vector<Integer> numerators;  // m_i
  RatVector full_coefficients;   // m_i / (n n')
  MMatrixReport mreport;
  RatVector projection_residuals;
  RatVector extra_residuals;
  bool effectivity = true;
  /// Set by mumford_surface_pullback: symmetric and generic solves agree.
  std::optional<bool> symmetric_path_agrees;
};

/// Diagonal entries < 0, off-diagonal >= 0; with adjacency, phi(i, j) = 0
/// exactly when E_i and E_j are disjoint, and the adjacency graph is
/// connected. Throws SignViolation(i, j) or DisconnectedConfiguration.
ValidationReport validate_signs(const IntersectionConfig& cfg,
                                const PullbackOptions& options = {});

/// Certifies A = -phi^t. Throws NotZPattern if the sign pattern is broken.
MMatrixReport certify(const IntersectionConfig& cfg);

/// Solves (m_1/n, ..., m_r/n) * (-phi) = lambda exactly and checks every
/// guarantee of the result. Throws NotMMatrix, NegativeLambda(j),
/// NoRationalPullback (r = 0 with a non-trivial vertical curve), plus the
/// validate_signs errors.
PullbackResult compute_pullback(const IntersectionConfig& cfg, const DivisorInput& d,
                                const PullbackOptions& options = {});

/// curve_lambda + sum_i (m_i / n) * curve_row[i]; zero when the pullback is
/// numerically trivial on the curve. Throws DimensionMismatch.
Rational verify_on_curve(const IntersectionConfig& cfg, const PullbackResult& result,
                         const RatVector& curve_row, const Rational& curve_lambda);

/// mu > 0 with curve_row = mu * (column j of phi), if it exists.
/// Throws DimensionMismatch.
std::optional<Rational> check_curve_ratio(const IntersectionConfig& cfg, std::size_t j,
                                          const RatVector& curve_row);

/// True when changing coefficient i by `delta` leaves some chosen-curve
/// residual nonzero.
bool perturbation_breaks_residuals(const IntersectionConfig& cfg, const DivisorInput& d,
                                   const PullbackResult& result, std::size_t i,
                                   const Rational& delta);

/// Surface case: phi = (E_i . E_j) symmetric and negative definite.
/// Throws NotSymmetric, NotNegativeDefinite, plus compute_pullback errors.
PullbackResult mumford_surface_pullback(const IntersectionConfig& cfg,
                                        const DivisorInput& d,
                                        const PullbackOptions& options = {});

enum class SmallResolutionVerdict { NotApplicable, TriviallyAdmits, NoRationalPullback };

struct SmallResolutionReport {
  SmallResolutionVerdict verdict = SmallResolutionVerdict::NotApplicable;
  std::optional<VerticalCurve> witness;
};

/// With no exceptional divisors, any vertical curve meeting the divisor
/// class nontrivially rules out a rational pullback.
SmallResolutionReport detect_small_resolution(const IntersectionConfig& cfg,
                                              const std::vector<VerticalCurve>& curves);

}  // namespace ratpull
