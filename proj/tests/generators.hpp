#pragma once

// Seeded random generators for the property tests.

#include <random>
#include <vector>

#include "oracle.hpp"
#include "ratpull/pullback.hpp"
#include "ratpull/ratmat.hpp"

namespace gen {

using ratpull::RatMatrix;
using ratpull::Rational;
using ratpull::RatVector;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational small_rational(std::mt19937_64& rng, long long max_num = 20, long long max_den = 5) {
  std::uniform_int_distribution<long long> num(-max_num, max_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return ratpull::rat(num(rng), den(rng));
}

inline Rational nonneg_rational(std::mt19937_64& rng, long long max_num = 20, long long max_den = 5) {
  std::uniform_int_distribution<long long> num(0, max_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return ratpull::rat(num(rng), den(rng));
}

inline std::size_t dimension(std::mt19937_64& rng, std::size_t lo = 1, std::size_t hi = 6) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline RatMatrix square(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> e;
  for (std::size_t k = 0; k < n * n; ++k) e.push_back(small_rational(rng, 9, 4));
  return RatMatrix(n, n, std::move(e));
}

/// Z-matrix with entries p/q, |p| <= 20, q <= 5. Off-diagonals are zero
/// about a third of the time so sparse patterns show up.
inline RatMatrix z_matrix(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution zero(0.3);
  std::vector<Rational> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        e.push_back(small_rational(rng));
      } else {
        e.push_back(zero(rng) ? Rational(0) : -nonneg_rational(rng));
      }
    }
  }
  return RatMatrix(n, n, std::move(e));
}

/// Invertible M-matrix A = sE - B, B >= 0 random, s > max row sum of B.
inline RatMatrix m_matrix(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution zero(0.3);
  std::vector<Rational> b(n * n, Rational(0));
  Rational max_row(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j) {
      b[i * n + j] = zero(rng) ? Rational(0) : nonneg_rational(rng, 10, 4);
      row += b[i * n + j];
    }
    max_row = std::max(max_row, row);
  }
  const Rational s = max_row + nonneg_rational(rng, 5, 3) + ratpull::rat(1, 7);
  std::vector<Rational> a(n * n);
  for (std::size_t k = 0; k < n * n; ++k) a[k] = -b[k];
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] += s;
  return RatMatrix(n, n, std::move(a));
}

/// Config with phi = -A^t for a random invertible M-matrix A. Diagonal
/// entries of phi are automatically negative.
inline ratpull::IntersectionConfig certified_config(std::mt19937_64& rng, std::size_t n) {
  const RatMatrix a = m_matrix(rng, n);
  ratpull::IntersectionConfig cfg;
  for (std::size_t i = 0; i < n; ++i) {
    cfg.divisors.push_back("E" + std::to_string(i + 1));
    cfg.chosen_curves.push_back("C" + std::to_string(i + 1));
  }
  cfg.phi = ratpull::scale(Rational(-1), ratpull::transpose(a));
  return cfg;
}

inline RatVector nonneg_vector(std::mt19937_64& rng, std::size_t n) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(nonneg_rational(rng));
  return v;
}

inline oracle::Grid to_grid(const RatMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

}  // namespace gen
