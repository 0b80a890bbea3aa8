#include "ratpull/pullback.hpp"

#include <algorithm>
#include <string>

#include "ratpull/error.hpp"

namespace ratpull {

namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

[[noreturn]] void invariant(const std::string& what) {
  throw Error(ErrorKind::InvariantViolation, what);
}

// Residuals lambda_j + sum_i c_i phi(i, j) for every chosen curve C_j.
RatVector chosen_curve_residuals(const IntersectionConfig& cfg, const RatVector& lambda,
                                 const RatVector& coefficients) {
  return add(lambda, vec_mat(coefficients, cfg.phi));
}

std::vector<std::vector<std::size_t>> adjacency_components(const Adjacency& adj) {
  const std::size_t r = adj.size();
  std::vector<int> seen(r, 0);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < r; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> block;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (std::size_t w = 0; w < r; ++w) {
        if (w != v && adj[v][w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    components.push_back(std::move(block));
  }
  return components;
}

}  // namespace

void IntersectionConfig::check_invariants() const {
  const std::size_t r = rank();
  if (chosen_curves.size() != r) {
    invariant("chosen_curves has length " + std::to_string(chosen_curves.size()) +
              ", expected " + std::to_string(r));
  }
  if (phi.rows() != r || phi.cols() != r) {
    invariant("phi is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
              ", expected " + std::to_string(r) + "x" + std::to_string(r));
  }
  for (const auto& c : extra_curves) {
    if (c.row.size() != r) {
      invariant("extra curve '" + c.name + "' row has length " +
                std::to_string(c.row.size()) + ", expected " + std::to_string(r));
    }
    if (c.host >= r) {
      invariant("extra curve '" + c.name + "' host index " + std::to_string(c.host) +
                " out of range");
    }
  }
  if (adjacency) {
    if (adjacency->size() != r) invariant("adjacency must be r x r");
    for (const auto& row : *adjacency) {
      if (row.size() != r) invariant("adjacency must be r x r");
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if ((*adjacency)[i][j] != (*adjacency)[j][i]) {
          invariant("adjacency is not symmetric at " + pos(i, j));
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (i != j && !(*adjacency)[i][j] && !phi(i, j).is_zero()) {
          invariant("phi" + pos(i, j) + " = " + phi(i, j).to_string() +
                    " but the divisors are declared disjoint");
        }
      }
    }
  }
}

void DivisorInput::check_invariants(const IntersectionConfig& cfg) const {
  if (lambda.size() != cfg.rank()) {
    invariant("lambda has length " + std::to_string(lambda.size()) + ", expected " +
              std::to_string(cfg.rank()));
  }
  if (!extra_lambda.empty() && extra_lambda.size() != cfg.extra_curves.size()) {
    invariant("extra_lambda has length " + std::to_string(extra_lambda.size()) +
              ", expected " + std::to_string(cfg.extra_curves.size()));
  }
  if (cartier_denominator < 1) invariant("cartier_denominator must be >= 1");
}

ValidationReport validate_signs(const IntersectionConfig& cfg, const PullbackOptions& options) {
  cfg.check_invariants();
  const std::size_t r = cfg.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Rational& v = cfg.phi(i, j);
      if (i == j && v.sign() >= 0) {
        throw Error(ErrorKind::SignViolation,
                    "diagonal entry " + v.to_string() + " at " + pos(i, j) +
                        " must be negative",
                    i, j);
      }
      if (i != j && v.sign() < 0) {
        throw Error(ErrorKind::SignViolation,
                    "off-diagonal entry " + v.to_string() + " at " + pos(i, j) +
                        " must be nonnegative",
                    i, j);
      }
    }
  }

  ValidationReport report;
  if (!cfg.adjacency) {
    if (r > 0) {
      std::vector<std::size_t> all(r);
      for (std::size_t i = 0; i < r; ++i) all[i] = i;
      report.components.push_back(std::move(all));
    }
    return report;
  }

  const Adjacency& adj = *cfg.adjacency;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      // The disjoint => zero direction is a structural invariant.
      if (adj[i][j] && cfg.phi(i, j).is_zero()) {
        throw Error(ErrorKind::SignViolation,
                    "entry at " + pos(i, j) + " is zero but the divisors meet", i, j);
      }
    }
  }
  report.components = adjacency_components(adj);
  if (report.components.size() > 1 && !options.allow_disconnected) {
    throw Error(ErrorKind::DisconnectedConfiguration,
                "disconnected configuration: " +
                    std::to_string(report.components.size()) + " components");
  }
  return report;
}

MMatrixReport certify(const IntersectionConfig& cfg) {
  cfg.check_invariants();
  const RatMatrix a = scale(Rational(-1), transpose(cfg.phi));
  return is_invertible_m_matrix(as_z_matrix(a));
}

SmallResolutionReport detect_small_resolution(const IntersectionConfig& cfg,
                                              const std::vector<VerticalCurve>& curves) {
  SmallResolutionReport out;
  if (cfg.rank() != 0) return out;
  for (const auto& c : curves) {
    if (!c.lambda.is_zero()) {
      out.verdict = SmallResolutionVerdict::NoRationalPullback;
      out.witness = c;
      return out;
    }
  }
  out.verdict = SmallResolutionVerdict::TriviallyAdmits;
  return out;
}

PullbackResult compute_pullback(const IntersectionConfig& cfg, const DivisorInput& d,
                                const PullbackOptions& options) {
  cfg.check_invariants();
  d.check_invariants(cfg);
  const std::size_t r = cfg.rank();

  if (r == 0) {
    const auto small = detect_small_resolution(cfg, d.vertical_curves);
    if (small.verdict == SmallResolutionVerdict::NoRationalPullback) {
      throw Error(ErrorKind::NoRationalPullback,
                  "no rational pullback: small-resolution obstruction (curve '" +
                      small.witness->name + "' has intersection number " +
                      small.witness->lambda.to_string() +
                      " but there are no exceptional divisors)");
    }
    PullbackResult trivial;
    trivial.mreport = certify(cfg);
    return trivial;
  }

  const ValidationReport validation = validate_signs(cfg, options);

  PullbackResult result;
  result.mreport = certify(cfg);
  if (!result.mreport.verdict) {
    throw Error(ErrorKind::NotMMatrix,
                "not an invertible M-matrix: -phi^t fails the M-matrix conditions");
  }

  bool lambda_nonneg = true;
  for (std::size_t j = 0; j < r; ++j) {
    if (d.lambda[j].sign() < 0) {
      lambda_nonneg = false;
      if (!options.allow_signed_lambda) {
        throw Error(ErrorKind::NegativeLambda,
                    "lambda[" + std::to_string(j) + "] = " + d.lambda[j].to_string() +
                        " is negative",
                    j);
      }
    }
  }

  const RatMatrix neg_phi = scale(Rational(-1), cfg.phi);
  result.coefficients.assign(r, Rational(0));
  for (const auto& block : validation.components) {
    RatVector block_lambda;
    for (std::size_t j : block) block_lambda.push_back(d.lambda[j]);
    RatVector block_coeffs;
    try {
      block_coeffs = solve_left(block_lambda, neg_phi.principal_submatrix(block));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      throw Error(ErrorKind::InternalInconsistency,
                  "certified intersection matrix turned out singular");
    }
    for (std::size_t k = 0; k < block.size(); ++k) {
      result.coefficients[block[k]] = block_coeffs[k];
    }
  }

  for (const auto& c : result.coefficients) {
    result.common_denominator = lcm(result.common_denominator, c.denominator());
  }
  for (const auto& c : result.coefficients) {
    result.numerators.push_back(c.numerator() * (result.common_denominator / c.denominator()));
  }

  result.projection_residuals = chosen_curve_residuals(cfg, d.lambda, result.coefficients);
  for (std::size_t j = 0; j < r; ++j) {
    if (!result.projection_residuals[j].is_zero()) {
      throw Error(ErrorKind::InternalInconsistency,
                  "projection residual on C_" + std::to_string(j) + " is " +
                      result.projection_residuals[j].to_string());
    }
  }

  const Rational inv_cartier = Rational::from_fraction(1, d.cartier_denominator);
  result.full_coefficients = scale(inv_cartier, result.coefficients);

  if (!d.extra_lambda.empty()) {
    for (std::size_t k = 0; k < cfg.extra_curves.size(); ++k) {
      result.extra_residuals.push_back(
          verify_on_curve(cfg, result, cfg.extra_curves[k].row, d.extra_lambda[k]));
    }
  }

  result.effectivity = std::all_of(result.coefficients.begin(), result.coefficients.end(),
                                   [](const Rational& c) { return c.sign() >= 0; });
  if (lambda_nonneg && !result.effectivity) {
    throw Error(ErrorKind::InternalInconsistency,
                "nonnegative lambda produced a negative coefficient");
  }
  return result;
}

Rational verify_on_curve(const IntersectionConfig& cfg, const PullbackResult& result,
                         const RatVector& curve_row, const Rational& curve_lambda) {
  if (curve_row.size() != cfg.rank() || result.coefficients.size() != cfg.rank()) {
    throw Error(ErrorKind::DimensionMismatch,
                "curve row has length " + std::to_string(curve_row.size()) +
                    ", expected " + std::to_string(cfg.rank()));
  }
  return curve_lambda + dot(result.coefficients, curve_row);
}

std::optional<Rational> check_curve_ratio(const IntersectionConfig& cfg, std::size_t j,
                                          const RatVector& curve_row) {
  if (curve_row.size() != cfg.rank() || j >= cfg.rank()) {
    throw Error(ErrorKind::DimensionMismatch,
                "curve row has length " + std::to_string(curve_row.size()) +
                    ", expected " + std::to_string(cfg.rank()));
  }
  const RatVector chosen = cfg.phi.col(j);
  std::optional<Rational> mu;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i].is_zero()) {
      if (!curve_row[i].is_zero()) return std::nullopt;
      continue;
    }
    const Rational ratio = curve_row[i] / chosen[i];
    if (mu && *mu != ratio) return std::nullopt;
    mu = ratio;
  }
  if (!mu || mu->sign() <= 0) return std::nullopt;
  return mu;
}

bool perturbation_breaks_residuals(const IntersectionConfig& cfg, const DivisorInput& d,
                                   const PullbackResult& result, std::size_t i,
                                   const Rational& delta) {
  RatVector perturbed = result.coefficients;
  perturbed.at(i) += delta;
  const RatVector residuals = chosen_curve_residuals(cfg, d.lambda, perturbed);
  return std::any_of(residuals.begin(), residuals.end(),
                     [](const Rational& x) { return !x.is_zero(); });
}

PullbackResult mumford_surface_pullback(const IntersectionConfig& cfg, const DivisorInput& d,
                                        const PullbackOptions& options) {
  cfg.check_invariants();
  if (!cfg.phi.is_symmetric()) {
    throw Error(ErrorKind::NotSymmetric, "intersection matrix is not symmetric");
  }
  // Sylvester: phi negative definite iff every leading minor of -phi is > 0.
  const RatMatrix neg_phi = scale(Rational(-1), cfg.phi);
  for (std::size_t k = 1; k <= cfg.rank(); ++k) {
    const Rational minor = det(neg_phi.leading_block(k));
    if (minor.sign() <= 0) {
      throw Error(ErrorKind::NotNegativeDefinite,
                  "intersection matrix is not negative definite: leading minor " +
                      std::to_string(k) + " of -phi is " + minor.to_string());
    }
  }

  PullbackResult result = compute_pullback(cfg, d, options);

  // phi symmetric: m * (-phi) = lambda is also (-phi) * m^t = lambda^t.
  const RatVector symmetric =
      cfg.rank() == 0 ? RatVector{} : mat_vec(inverse(neg_phi), d.lambda);
  result.symmetric_path_agrees = symmetric == result.coefficients;
  if (!*result.symmetric_path_agrees) {
    throw Error(ErrorKind::InternalInconsistency,
                "symmetric and generic pullback solves disagree");
  }
  return result;
}

}  // namespace ratpull
