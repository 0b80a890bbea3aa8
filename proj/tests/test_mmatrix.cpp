#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "ratpull/error.hpp"
#include "ratpull/mmatrix.hpp"

using namespace ratpull;

TEST_CASE("as_z_matrix") {
  CHECK_NOTHROW((void)as_z_matrix(RatMatrix{{2, -1}, {-3, 4}}));
  CHECK_NOTHROW((void)as_z_matrix(RatMatrix::identity(2)));
  try {
    (void)as_z_matrix(RatMatrix{{2, 1}, {0, 2}});
    FAIL("expected NotZPattern");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotZPattern);
    CHECK(e.row() == 0u);
    CHECK(e.col() == 1u);
  }
  CHECK_THROWS_AS((void)as_z_matrix(RatMatrix(2, 3)), Error);
}

TEST_CASE("check_minors") {
  auto m1 = check_minors(as_z_matrix(RatMatrix{{2, -1}, {-1, 2}}));
  CHECK(m1.minors == RatVector{2, 3});
  CHECK(m1.all_positive);
  auto m2 = check_minors(as_z_matrix(RatMatrix{{2, -1}, {-3, 4}}));
  CHECK(m2.minors == RatVector{2, 5});
  CHECK(m2.all_positive);
  auto m3 = check_minors(as_z_matrix(RatMatrix{{1, -2}, {-2, 1}}));
  CHECK(m3.minors == RatVector{1, -3});
  CHECK_FALSE(m3.all_positive);
}

TEST_CASE("check_inverse_nonneg") {
  auto a = check_inverse_nonneg(as_z_matrix(RatMatrix{{2, -1}, {-3, 4}}));
  CHECK(a.nonnegative);
  REQUIRE(a.inverse);
  CHECK(*a.inverse == RatMatrix{{rat(4, 5), rat(1, 5)}, {rat(3, 5), rat(2, 5)}});

  auto id = check_inverse_nonneg(as_z_matrix(RatMatrix::identity(4)));
  CHECK(id.nonnegative);
  CHECK(*id.inverse == RatMatrix::identity(4));

  auto bad = check_inverse_nonneg(as_z_matrix(RatMatrix{{1, -2}, {-2, 1}}));
  CHECK_FALSE(bad.nonnegative);
  REQUIRE(bad.inverse);
  CHECK(*bad.inverse == scale(rat(-1, 3), RatMatrix{{1, 2}, {2, 1}}));

  auto singular = check_inverse_nonneg(as_z_matrix(RatMatrix{{1, -1}, {-1, 1}}));
  CHECK_FALSE(singular.nonnegative);
  CHECK_FALSE(singular.inverse);
}

TEST_CASE("check_certificate and verify_certificate") {
  const ZMatrix a = as_z_matrix(RatMatrix{{2, -1}, {-1, 2}});
  auto x = check_certificate(a);
  REQUIRE(x);
  CHECK(*x == RatVector{1, 1});
  CHECK(*check_certificate(as_z_matrix(RatMatrix::identity(2))) == RatVector{1, 1});
  CHECK_FALSE(check_certificate(as_z_matrix(RatMatrix{{1, -2}, {-2, 1}})));
  CHECK_FALSE(check_certificate(as_z_matrix(RatMatrix{{1, -1}, {-1, 1}})));

  CHECK(verify_certificate(a, {1, 1}));
  CHECK_FALSE(verify_certificate(a, {1, 0}));
  CHECK(verify_certificate(as_z_matrix(RatMatrix::identity(2)), {5, 7}));
  CHECK_THROWS_AS((void)verify_certificate(a, {1, 1, 1}), Error);
}

TEST_CASE("spectral estimate is advisory and matches B = sE - A") {
  auto id = spectral_estimate(as_z_matrix(RatMatrix::identity(2)));
  CHECK(id.s == 1.0);
  CHECK(id.rho_hat == doctest::Approx(0.0));

  auto a2 = spectral_estimate(as_z_matrix(RatMatrix{{2, -1}, {-1, 2}}));
  CHECK(a2.s == 2.0);
  CHECK(std::abs(a2.rho_hat - 1.0) < 1e-6);
  CHECK(a2.converged);

  auto bad = spectral_estimate(as_z_matrix(RatMatrix{{1, -2}, {-2, 1}}));
  CHECK(bad.s == 1.0);
  CHECK(std::abs(bad.rho_hat - 2.0) < 1e-6);
  CHECK(bad.rho_hat >= bad.s);

  // nonpositive diagonal: s falls back to 1 and B keeps a nonnegative diagonal
  const ZMatrix neg = as_z_matrix(RatMatrix{{-1, 0}, {0, -3}});
  CHECK(canonical_shift(neg) == Rational(1));
  auto e = spectral_estimate(neg);
  CHECK(e.rho_hat >= e.s);

  CHECK_THROWS_AS((void)shifted_complement(as_z_matrix(RatMatrix{{2, -1}, {-1, 2}}), Rational(1)),
                  Error);
}

TEST_CASE("is_invertible_m_matrix") {
  auto r1 = is_invertible_m_matrix(as_z_matrix(RatMatrix{{2, -1}, {-3, 4}}));
  CHECK(r1.verdict);
  CHECK(r1.minors.minors == RatVector{2, 5});
  CHECK(r1.certificate_x);
  CHECK(r1.spectral);

  auto r2 = is_invertible_m_matrix(as_z_matrix(RatMatrix{{1, -2}, {-2, 1}}));
  CHECK_FALSE(r2.verdict);
  CHECK_FALSE(r2.certificate_x);

  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_invertible_m_matrix(as_z_matrix(RatMatrix::identity(n))).verdict);
  }
  // singular is a false verdict, not an error
  CHECK_FALSE(is_invertible_m_matrix(as_z_matrix(RatMatrix{{1, -1}, {-1, 1}})).verdict);
}

TEST_CASE("property: the three exact characterizations agree") {
  std::mt19937_64 rng(31337);
  int positives = 0;
  for (int k = 0; k < 600; ++k) {
    const ZMatrix a = as_z_matrix(gen::z_matrix(rng, gen::dimension(rng)));
    const bool minors = check_minors(a).all_positive;
    const bool inverse = check_inverse_nonneg(a).nonnegative;
    const auto x = check_certificate(a);
    const bool cert = x && verify_certificate(a, *x);
    CHECK(minors == inverse);
    CHECK(minors == cert);
    positives += minors;
  }
  // the generator must exercise both verdicts
  CHECK(positives > 30);
  CHECK(positives < 570);
}

TEST_CASE("property: diagonal shift keeps M-matrices") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen::dimension(rng);
    const RatMatrix a = gen::m_matrix(rng, n);
    REQUIRE(is_invertible_m_matrix(as_z_matrix(a)).verdict);
    std::vector<Rational> d(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = gen::nonneg_rational(rng);
    CHECK(is_invertible_m_matrix(as_z_matrix(add(a, RatMatrix(n, n, d)))).verdict);
  }
}

TEST_CASE("property: symmetric Z-matrices are M iff positive definite minors") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = gen::dimension(rng);
    const RatMatrix z = gen::z_matrix(rng, n);
    const RatMatrix sym = scale(rat(1, 2), add(z, transpose(z)));
    const auto report = is_invertible_m_matrix(as_z_matrix(sym));
    bool all_pos = true;
    for (const auto& m : report.minors.minors) all_pos = all_pos && m.sign() > 0;
    CHECK(report.verdict == all_pos);
  }
}

TEST_CASE("property: certificates from check_certificate always verify") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const ZMatrix a = as_z_matrix(gen::z_matrix(rng, gen::dimension(rng)));
    if (auto x = check_certificate(a)) CHECK(verify_certificate(a, *x));
  }
}

TEST_CASE("property: verdict does not depend on the shift s") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const ZMatrix a = as_z_matrix(gen::z_matrix(rng, gen::dimension(rng)));
    const auto report = is_invertible_m_matrix(a);
    const Rational s = canonical_shift(a);
    for (const Rational& s2 : {s, s + Rational(3), s + rat(17, 4)}) {
      const RatMatrix b = shifted_complement(a, s2);
      for (const auto& e : b.entries()) CHECK(e.sign() >= 0);
      // rebuild A = s'E - B' and rerun the exact checks
      const RatMatrix rebuilt = subtract(scale(s2, RatMatrix::identity(a.size())), b);
      CHECK(is_invertible_m_matrix(as_z_matrix(rebuilt)).verdict == report.verdict);
    }
  }
}
