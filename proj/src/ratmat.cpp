#include "ratpull/ratmat.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "ratpull/error.hpp"

namespace ratpull {

namespace {

void check_cap(std::size_t rows, std::size_t cols) {
  const std::size_t cap = max_dimension();
  if (rows > cap || cols > cap) {
    throw Error(ErrorKind::DimensionCap,
                "matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds dimension cap " + std::to_string(cap));
  }
}

void require_square(const RatMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare,
                std::string(op) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

[[noreturn]] void mismatch(const char* op, std::size_t a, std::size_t b) {
  throw Error(ErrorKind::DimensionMismatch,
              std::string(op) + ": dimensions " + std::to_string(a) + " and " +
                  std::to_string(b) + " do not match");
}

// Row-reduces `work` (n x (n + k)) so that its left block becomes the
// identity; the right block then holds the solution. Throws Singular.
void gauss_jordan(std::vector<std::vector<Rational>>& work, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work[pivot][c].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pivot != c) std::swap(work[pivot], work[c]);

    const Rational inv = Rational(1) / work[c][c];
    for (auto& e : work[c]) e *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || work[r][c].is_zero()) continue;
      const Rational factor = work[r][c];
      for (std::size_t k = c; k < work[r].size(); ++k) {
        if (!work[c][k].is_zero()) work[r][k] -= factor * work[c][k];
      }
    }
  }
}

}  // namespace

std::size_t max_dimension() {
  const char* env = std::getenv("RATPULL_MAX_DIM");
  if (env == nullptr) return kDefaultMaxDimension;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return kDefaultMaxDimension;
  }
  return value;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_cap(rows, cols);
  entries_.assign(rows * cols, Rational(0));
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_cap(rows, cols);
  if (entries_.size() != rows * cols) {
    mismatch("RatMatrix", entries_.size(), rows * cols);
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_cap(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) mismatch("RatMatrix", r.size(), cols_);
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Rational(1);
  return RatMatrix(n, n, std::move(e));
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) mismatch("from_rows", row.size(), c);
    e.insert(e.end(), row.begin(), row.end());
  }
  return RatMatrix(r, c, std::move(e));
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

RatMatrix RatMatrix::leading_block(std::size_t k) const {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return principal_submatrix(idx);
}

RatMatrix RatMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  const std::size_t k = indices.size();
  std::vector<Rational> e;
  e.reserve(k * k);
  for (std::size_t i : indices) {
    for (std::size_t j : indices) e.push_back((*this)(i, j));
  }
  return RatMatrix(k, k, std::move(e));
}

RatMatrix transpose(const RatMatrix& m) {
  std::vector<Rational> e;
  e.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(m(i, j));
  }
  return RatMatrix(m.cols(), m.rows(), std::move(e));
}

RatMatrix scale(const Rational& c, const RatMatrix& m) {
  std::vector<Rational> e = m.entries();
  for (auto& x : e) x *= c;
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) mismatch("add", a.rows(), b.rows());
  if (a.cols() != b.cols()) mismatch("add", a.cols(), b.cols());
  std::vector<Rational> e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
  return RatMatrix(a.rows(), a.cols(), std::move(e));
}

RatMatrix subtract(const RatMatrix& a, const RatMatrix& b) {
  return add(a, scale(Rational(-1), b));
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) mismatch("mat_mul", a.cols(), b.rows());
  std::vector<Rational> e(a.rows() * b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        e[i * b.cols() + j] += aik * b(k, j);
      }
    }
  }
  return RatMatrix(a.rows(), b.cols(), std::move(e));
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) mismatch("mat_vec", m.cols(), v.size());
  RatVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

RatVector vec_mat(const RatVector& v, const RatMatrix& m) {
  if (m.rows() != v.size()) mismatch("vec_mat", v.size(), m.rows());
  RatVector out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) mismatch("dot", a.size(), b.size());
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector scale(const Rational& c, const RatVector& v) {
  RatVector out = v;
  for (auto& x : out) x *= c;
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) mismatch("add", a.size(), b.size());
  RatVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Rational det(const RatMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Integer lift: scale row i by the lcm of its denominators.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer row_scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).denominator());
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    row_scale_product *= l;
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return Rational::from_fraction(d, row_scale_product);
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = m(i, j);
    work[i][n + i] = Rational(1);
  }
  gauss_jordan(work, n);
  std::vector<Rational> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e.insert(e.end(), work[i].begin() + static_cast<std::ptrdiff_t>(n), work[i].end());
  }
  return RatMatrix(n, n, std::move(e));
}

RatVector solve_right(const RatMatrix& m, const RatVector& v) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  if (v.size() != n) mismatch("solve", v.size(), n);
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = m(i, j);
    work[i][n] = v[i];
  }
  gauss_jordan(work, n);
  RatVector x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(work[i][n]);
  return x;
}

RatVector solve_left(const RatVector& v, const RatMatrix& m) {
  require_square(m, "solve_left");
  // x * M = v  <=>  M^t * x^t = v^t
  return solve_right(transpose(m), v);
}

}  // namespace ratpull
