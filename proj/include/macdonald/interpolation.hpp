#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "macdonald/linsolve.hpp"
#include "macdonald/polyring.hpp"
#include "macdonald/shapes.hpp"

namespace macdonald {

enum class Family { G, GOracle, E, Gprime, Gplus, R, Rprime, O };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Identity of one cached polynomial: family, index and coefficient field.
struct FamilyKey {
  Family family;
  Composition index;
  FieldConfig cfg;

  std::string to_string() const;
};

/// Memo cache for constructed polynomials. Concurrent readers, exclusive
/// writers. When a directory is set, entries are also persisted there as one
/// JSON file per key, named by a hash of the key.
class PolyCache {
 public:
  static PolyCache& global();

  void set_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> directory() const;

  std::optional<LaurentPoly> find(const FamilyKey& key);
  void insert(const FamilyKey& key, const LaurentPoly& value);
  LaurentPoly get_or_compute(const FamilyKey& key, const std::function<LaurentPoly()>& compute);

  void clear_memory();
  std::size_t size() const;
  /// Path of the file for key inside the cache directory.
  static std::string file_name(const FamilyKey& key);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly> entries_;
  std::optional<std::filesystem::path> dir_;
};

// ------------------------------------------------------------ families

/// G_alpha by the Phi / Hecke recursions (memoized). For a (q,t) field the
/// steps are G = q^{alpha_n - 1} Phi G_{alpha#} and
/// G = (H_i + (1 - t)/d) G_{s_i alpha}, d = 1 - abar_i / abar_{i+1};
/// in the Jack case G = Phi~ G_{alpha#} and G = (sigma_i + r/d) G_{s_i alpha},
/// d = abar_i - abar_{i+1}.
LaurentPoly g_recursive(const Composition& alpha, const FieldConfig& cfg);

/// Indices i (1-based) with alpha_i > alpha_{i+1}.
std::vector<std::size_t> descents(const Composition& alpha);
/// One Hecke step at descent i from G_{s_i alpha}.
LaurentPoly g_via_descent(const Composition& alpha, std::size_t i, const FieldConfig& cfg);
/// One Phi step from G_{alpha#}; needs alpha_n > 0.
LaurentPoly g_via_phi(const Composition& alpha, const FieldConfig& cfg);

/// G_alpha straight from its defining vanishing conditions by exact solve.
LaurentPoly g_oracle(const Composition& alpha, const FieldConfig& cfg);

/// Top homogeneous part of G_alpha.
LaurentPoly e_top(const Composition& alpha, const FieldConfig& cfg);

/// Same top part as G_alpha, vanishing at beta-tilde for |beta| < |alpha|.
LaurentPoly gprime(const Composition& alpha, const FieldConfig& cfg);

/// (-1)^{|alpha|} G_alpha(-x - (n-1) r; r).
LaurentPoly gplus(const Composition& alpha, const FieldConfig& cfg);

/// Symmetric interpolation polynomial R_lambda.
LaurentPoly r_sym(const Composition& lambda, const FieldConfig& cfg);

/// Symmetric, top part of R_lambda(x;r), vanishing at mu-tilde(r) for |mu| < |lambda|.
LaurentPoly rprime_r(const Composition& lambda, const FieldConfig& cfg);

/// Reciprocity polynomial O_alpha over a field with a. Interpolates
/// G_beta(a alpha~)/G_beta(a tau) at beta-bar^{-1} (q,t) or
/// G_beta(a + alpha~)/G_beta(a + rho) at beta-bar (Jack), |beta| <= |alpha|.
LaurentPoly reciprocity_poly(const Composition& alpha, const FieldConfig& cfg);

/// Value O_alpha is required to take at the point attached to beta.
Scalar reciprocity_target(const Composition& alpha, const Composition& beta, const FieldConfig& cfg);
/// Interpolation node attached to beta: beta-bar^{-1} (q,t) or beta-bar(r).
std::vector<Scalar> reciprocity_node(const Composition& beta, const FieldConfig& cfg);

/// Monomial symmetric function m_lambda in n variables.
LaurentPoly monomial_symmetric(const Composition& lambda);

// -------------------------------------------------------- closed forms

Scalar closed_d(const Composition& alpha, const FieldConfig& cfg);
Scalar closed_e(const Composition& alpha, const FieldConfig& cfg);
/// phi_alpha evaluated at the given value of a.
Scalar closed_phi(const Composition& alpha, const FieldConfig& cfg, const Scalar& a_value);

// ----------------------------------------------------------- binomials

/// G_beta(alpha-bar) / G_beta(beta-bar) in the field of cfg (use inverted
/// parameters for the 1/q, 1/t coefficients).
Scalar binom(const Composition& alpha, const Composition& beta, const FieldConfig& cfg);
/// [alpha over beta] at (1/q, 1/t) obtained by substituting reciprocals into
/// the symbolic coefficient. Symbolic (q,t) fields only.
Scalar binom_reciprocal_by_substitution(const Composition& alpha, const Composition& beta, const FieldConfig& cfg);
/// R_mu(lambda-bar) / R_mu(mu-bar).
Scalar binom_sym(const Composition& lambda, const Composition& mu, const FieldConfig& cfg);

// ---------------------------------------------------------- pre-flight

/// Throws SpecializationCollision (naming the instance) when a specialized
/// field cannot support computations up to degree `degree` in n variables:
/// q or t in {0, 1, -1}, coinciding spectral points, or a vanishing
/// 1 - q^{a+1} t^{l+1} factor.
void preflight(const FieldConfig& cfg, std::size_t n, int degree);

/// Throws SpecializationCollision when a specialized `a` is a root of some
/// phi_beta with |beta| <= degree, or zero.
void preflight_a(const FieldConfig& cfg, std::size_t n, int degree);

/// Deterministic stream of candidate rational values for `a`.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed);
  BigRational next();

 private:
  std::uint64_t state_;
};

/// Field used for polynomials that do not involve a.
FieldConfig base_field(const FieldConfig& cfg);

}  // namespace macdonald
