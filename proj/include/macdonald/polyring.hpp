#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "macdonald/scalars.hpp"
#include "macdonald/shapes.hpp"

namespace macdonald {

/// Exponent vector of a Laurent monomial in x_1..x_n.
using Monomial = std::vector<int>;

/// Graded-lex order: total degree first, then x_1 most significant.
struct MonomialLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Image of one variable under an affine substitution: x_i -> scale * x_source + offset.
struct AffineImage {
  Scalar scale;
  std::size_t source = 0;  // 0-based variable index
  Scalar offset;
};

/// Sparse Laurent polynomial in x_1..x_n over the Scalar field.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  explicit LaurentPoly(std::size_t n);
  static LaurentPoly constant(std::size_t n, const Scalar& c);
  /// x_i for 1-based i.
  static LaurentPoly variable(std::size_t n, std::size_t i);
  static LaurentPoly monomial(const Monomial& exponent, const Scalar& coeff);

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff every exponent is nonnegative.
  bool is_polynomial() const;
  /// Largest exponent sum; -1 for the zero polynomial.
  int total_degree() const;

  void add_term(const Monomial& exponent, const Scalar& coeff);
  Scalar coefficient(const Monomial& exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Scalar& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const Scalar& lhs, LaurentPoly rhs) { return rhs *= lhs; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by the monomial x^exponent.
  LaurentPoly times_monomial(const Monomial& exponent) const;
  /// Divide every coefficient by a nonzero scalar.
  LaurentPoly divided_by(const Scalar& c) const;

  /// Exact value at a point. Throws DivisionByZero when a coordinate is zero
  /// where a negative exponent occurs.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// (w f): the monomial x^e goes to x^{w e}, so s_i swaps x_i and x_{i+1}.
  LaurentPoly permute_vars(const Permutation& w) const;
  /// s_i f for 1-based i.
  LaurentPoly swap_adjacent(std::size_t i) const;

  /// Substitute x_i -> images[i].scale * x_{images[i].source} + images[i].offset.
  /// Negative powers are only allowed where the image is a pure monomial.
  LaurentPoly affine_substitute(const std::vector<AffineImage>& images) const;

  /// Sum of the terms of total degree exactly d. Throws DegreeError when f has
  /// terms above d.
  LaurentPoly top_part(int d) const;
  LaurentPoly homogeneous_part(int d) const;

  /// f / (x_i - x_{i+1}) for 1-based i. Throws InvariantViolation on a nonzero
  /// remainder.
  LaurentPoly divide_by_difference(std::size_t i) const;

  LaurentPoly map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;

  /// Terms in descending graded-lex order, e.g. "x1^2 + (t - 1)/t*x2 - 1".
  std::string to_string() const;

 private:
  std::size_t n_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Variable substitution helpers for the common affine maps.
std::vector<AffineImage> identity_images(std::size_t n);
/// x -> factor * x.
LaurentPoly scale_vars(const LaurentPoly& f, const Scalar& factor);
/// x -> x + offset (all coordinates).
LaurentPoly translate_vars(const LaurentPoly& f, const Scalar& offset);

/// True iff f is invariant under every adjacent transposition.
bool is_symmetric(const LaurentPoly& f);

}  // namespace macdonald
