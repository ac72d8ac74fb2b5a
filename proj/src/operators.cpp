#include "macdonald/operators.hpp"

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

void check_hecke_index(std::size_t i, const LaurentPoly& f) {
  if (i < 1 || i + 1 > f.num_vars()) {
    throw IndexError("operator index " + std::to_string(i) + " out of range for n = " + std::to_string(f.num_vars()));
  }
}

// f(x_n * scale + offset, x_1, ..., x_{n-1})
LaurentPoly cyclic_substitute(const LaurentPoly& f, const Scalar& scale, const Scalar& offset) {
  const std::size_t n = f.num_vars();
  std::vector<AffineImage> images(n);
  images[0] = {scale, n - 1, offset};
  for (std::size_t k = 1; k < n; ++k) images[k] = {Scalar(1), k - 1, Scalar()};
  return f.affine_substitute(images);
}

LaurentPoly last_variable_plus(std::size_t n, const Scalar& c) {
  LaurentPoly out = LaurentPoly::variable(n, n);
  out.add_term(Monomial(n, 0), c);
  return out;
}

}  // namespace

LaurentPoly divided_difference(std::size_t i, const LaurentPoly& f) {
  check_hecke_index(i, f);
  return (f - f.swap_adjacent(i)).divide_by_difference(i);
}

LaurentPoly phi_qt(const LaurentPoly& f, const FieldConfig& cfg) {
  const std::size_t n = f.num_vars();
  const Scalar shift = -cfg.t().pow(1 - static_cast<int>(n));
  return last_variable_plus(n, shift) * cyclic_substitute(f, cfg.q().inverse(), Scalar());
}

LaurentPoly hecke(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg) {
  check_hecke_index(i, f);
  const Scalar t = cfg.t();
  LaurentPoly x_i = LaurentPoly::variable(f.num_vars(), i);
  return f.swap_adjacent(i) * t - (x_i * divided_difference(i, f)) * (Scalar(1) - t);
}

LaurentPoly xi_qt(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg) {
  const std::size_t n = f.num_vars();
  if (i < 1 || i > n) throw IndexError("Cherednik operator index out of range");
  LaurentPoly g = f;
  for (std::size_t j = i - 1; j >= 1; --j) g = hecke(j, g, cfg);
  g = phi_qt(g, cfg);
  for (std::size_t j = n - 1; j >= i; --j) g = hecke(j, g, cfg);
  Monomial inv(n, 0);
  inv[i - 1] = -1;
  return (f + g).times_monomial(inv);
}

LaurentPoly sigma_op(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg) {
  check_hecke_index(i, f);
  return f.swap_adjacent(i) + divided_difference(i, f) * cfg.r();
}

LaurentPoly sigma_word(const std::vector<std::size_t>& word, const LaurentPoly& f, const FieldConfig& cfg) {
  LaurentPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = sigma_op(*it, g, cfg);
  return g;
}

LaurentPoly sigma_word(const Permutation& w, const LaurentPoly& f, const FieldConfig& cfg) {
  if (w.size() != f.num_vars()) throw DimensionError("permutation size differs from number of variables");
  return sigma_word(w.reduced_word(), f, cfg);
}

LaurentPoly phi_r(const LaurentPoly& f, const FieldConfig& cfg) {
  if (!f.is_polynomial()) throw UnsupportedSubstitution("Phi~ is only defined on polynomials");
  const std::size_t n = f.num_vars();
  const Scalar shift = Scalar(static_cast<long>(n - 1)) * cfg.r();
  return last_variable_plus(n, shift) * cyclic_substitute(f, Scalar(1), Scalar(-1));
}

LaurentPoly xi_r(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg) {
  const std::size_t n = f.num_vars();
  if (i < 1 || i > n) throw IndexError("Cherednik operator index out of range");
  if (!f.is_polynomial()) throw UnsupportedSubstitution("Xi~ is only defined on polynomials");
  LaurentPoly g = f;
  for (std::size_t j = i - 1; j >= 1; --j) g = sigma_op(j, g, cfg);
  g = phi_r(g, cfg);
  for (std::size_t j = n - 1; j >= i; --j) g = sigma_op(j, g, cfg);
  return LaurentPoly::variable(n, i) * f - g;
}

LaurentPoly symmetrize(const LaurentPoly& f, const FieldConfig& cfg) {
  if (!f.is_polynomial()) throw UnsupportedSubstitution("symmetrizer is only defined on polynomials");
  const std::size_t n = f.num_vars();
  LaurentPoly total(n);
  long count = 0;
  for (const auto& w : Permutation::all(n)) {
    total += sigma_word(w, f, cfg);
    ++count;
  }
  return total.divided_by(Scalar(count));
}

}  // namespace macdonald
