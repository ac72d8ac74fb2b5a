#include "macdonald/linsolve.hpp"

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

GenPoly lcm(const GenPoly& x, const GenPoly& y) {
  const GenPoly g = gcd(x, y);
  auto q = exact_quotient(x, g);
  if (!q) throw InvariantViolation("gcd does not divide its argument");
  return *q * y;
}

// Fraction-free Gauss-Jordan over Z[q,t,r,a] on [A | B] after clearing the
// denominators of each row. Every division by the previous pivot is exact,
// so rational functions are only reduced once per solution entry.
std::optional<ScalarMatrix> solve_polynomial(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t cols = b.front().size();
  const std::size_t width = n + cols;
  std::vector<std::vector<GenPoly>> m(n, std::vector<GenPoly>(width));
  for (std::size_t i = 0; i < n; ++i) {
    GenPoly common(1);
    for (const auto& s : a[i]) common = lcm(common, s.denominator());
    for (const auto& s : b[i]) common = lcm(common, s.denominator());
    for (std::size_t j = 0; j < width; ++j) {
      const Scalar& s = j < n ? a[i][j] : b[i][j - n];
      if (s.is_zero()) continue;
      auto factor = exact_quotient(common, s.denominator());
      if (!factor) throw InvariantViolation("row denominator is not a common multiple");
      m[i][j] = s.numerator() * *factor;
    }
  }
  GenPoly previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) std::swap(m[pivot], m[k]);
    const GenPoly p = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const GenPoly lead = m[i][k];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        GenPoly value = m[i][j] * p;
        if (!lead.is_zero() && !m[k][j].is_zero()) value -= lead * m[k][j];
        auto q = exact_quotient(value, previous);
        if (!q) throw InvariantViolation("fraction-free elimination step is not exact");
        m[i][j] = *std::move(q);
      }
      m[i][k] = GenPoly();
    }
    previous = p;
  }
  ScalarMatrix x(n, std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols; ++c) x[i][c] = Scalar::reduce(m[i][n + c], m[i][i]);
  }
  return x;
}

bool all_rational(const ScalarMatrix& m) {
  for (const auto& row : m) {
    for (const auto& s : row) {
      if (!s.is_rational()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<ScalarMatrix> solve_exact(ScalarMatrix a, ScalarMatrix b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("right-hand side has the wrong number of rows");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("linear system matrix is not square");
  }
  const std::size_t cols = n == 0 ? 0 : b.front().size();
  if (n == 0) return ScalarMatrix{};
  if (!all_rational(a) || !all_rational(b)) return solve_polynomial(a, b);

  Scalar previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      std::swap(b[pivot], b[k]);
    }
    const Scalar p = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar lead = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * p - lead * a[k][j]) / previous;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        b[i][j] = (b[i][j] * p - lead * b[k][j]) / previous;
      }
      a[i][k] = Scalar();
    }
    previous = p;
  }

  ScalarMatrix x(n, std::vector<Scalar>(cols));
  for (std::size_t i = n; i-- > 0;) {
    const Scalar inv = a[i][i].inverse();
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar sum = b[i][c];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!a[i][j].is_zero()) sum -= a[i][j] * x[j][c];
      }
      x[i][c] = sum * inv;
    }
  }
  return x;
}

std::optional<ScalarMatrix> invert_exact(const ScalarMatrix& a) {
  const std::size_t n = a.size();
  ScalarMatrix id(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar(1);
  return solve_exact(a, std::move(id));
}

}  // namespace macdonald
