#pragma once

#include <cstddef>
#include <vector>

#include "macdonald/polyring.hpp"

namespace macdonald {

// Indices are 1-based throughout, matching s_i exchanging x_i and x_{i+1}.

/// (x_n - t^{1-n}) f(x_n/q, x_1, ..., x_{n-1}).
LaurentPoly phi_qt(const LaurentPoly& f, const FieldConfig& cfg);

/// H_i = t s_i - (1 - t) x_i / (x_i - x_{i+1}) (1 - s_i).
LaurentPoly hecke(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg);

/// Inhomogeneous Cherednik operator
/// x_i^{-1} + x_i^{-1} H_i ... H_{n-1} Phi H_1 ... H_{i-1},
/// the rightmost factor acting first.
LaurentPoly xi_qt(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg);

/// sigma_i = s_i + r / (x_i - x_{i+1}) (1 - s_i).
LaurentPoly sigma_op(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg);

/// sigma(w) f along the canonical reduced word of w.
LaurentPoly sigma_word(const Permutation& w, const LaurentPoly& f, const FieldConfig& cfg);
/// sigma_{i_1} ... sigma_{i_k} f for an explicit word (rightmost letter first).
LaurentPoly sigma_word(const std::vector<std::size_t>& word, const LaurentPoly& f, const FieldConfig& cfg);

/// (x_n + (n-1) r) f(x_n - 1, x_1, ..., x_{n-1}). Polynomials only.
LaurentPoly phi_r(const LaurentPoly& f, const FieldConfig& cfg);

/// Limit Cherednik operator x_i - sigma_i ... sigma_{n-1} Phi~ sigma_1 ... sigma_{i-1}.
LaurentPoly xi_r(std::size_t i, const LaurentPoly& f, const FieldConfig& cfg);

/// (1/n!) sum over S_n of sigma(w) f.
LaurentPoly symmetrize(const LaurentPoly& f, const FieldConfig& cfg);

/// (1 - s_i) f / (x_i - x_{i+1}).
LaurentPoly divided_difference(std::size_t i, const LaurentPoly& f);

}  // namespace macdonald
