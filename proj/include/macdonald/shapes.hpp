#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "macdonald/scalars.hpp"

namespace macdonald {

/// Integral vector in Z^n, n >= 1.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<int> entries);
  IntVector(std::initializer_list<int> entries) : IntVector(std::vector<int>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int sum() const;
  bool is_dominant() const;
  bool is_composition() const;
  IntVector negated() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Vector of nonnegative integers. Partitions are dominant compositions.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}
  static Composition zero(std::size_t n) { return Composition(std::vector<int>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int degree() const;
  bool is_partition() const;
  IntVector as_vector() const { return IntVector(entries_); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Permutation of {1..n} in one-line notation w(1), ..., w(n).
///
/// Acts on vectors by (w v)_i = v_{w^{-1}(i)}: the entry in position i moves
/// to position w(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(std::size_t n);
  /// Simple transposition s_i exchanging i and i+1 (1-based).
  static Permutation simple(std::size_t n, std::size_t i);
  /// Longest element, i -> n + 1 - i.
  static Permutation longest(std::size_t n);
  static Permutation from_word(std::size_t n, const std::vector<std::size_t>& word);
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return one_line_.size(); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  /// Inversion count.
  std::size_t length() const;
  bool is_identity() const;
  /// Reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}.
  std::vector<std::size_t> reduced_word() const;

  IntVector act(const IntVector& v) const;
  Composition act(const Composition& v) const;
  std::vector<Scalar> act(const std::vector<Scalar>& v) const;

  /// (lhs * rhs)(i) = lhs(rhs(i)).
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> one_line_;
};

struct DominantSort {
  IntVector dominant;
  Permutation shortest;
};

/// v+ = w_v^{-1}(v) and the shortest w_v realizing it (stable descending sort).
DominantSort dominant_sort(const IntVector& v);

/// All compositions of length n with |beta| <= d in graded-lex order.
std::vector<Composition> enumerate_compositions(std::size_t n, int d);
/// Compositions with |beta| == d.
std::vector<Composition> compositions_of_degree(std::size_t n, int d);
/// Partitions with at most n parts and |lambda| <= d, graded then lex.
std::vector<Composition> enumerate_partitions(std::size_t n, int d);
/// Distinct rearrangements w(alpha), w in S_n, sorted.
std::vector<Composition> rearrangements(const Composition& alpha);
Composition dominant_rearrangement(const Composition& alpha);

struct CellStats {
  int row = 0;
  int column = 0;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
  friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// Arm, leg, coarm and coleg of every cell (i, j), 1 <= j <= alpha_i, row-major.
std::vector<CellStats> diagram_stats(const Composition& alpha);

/// True iff alpha is contained in beta in the nonsymmetric sense.
bool contains(const Composition& beta, const Composition& alpha);

/// v# = (v_n - 1, v_1, ..., v_{n-1}).
IntVector shift_sharp(const IntVector& v);
Composition shift_sharp(const Composition& alpha);

enum class SpectralKind { QtBar, QtTilde, RBar, RTilde };

struct SpectralPoint {
  std::vector<Scalar> coords;
  SpectralKind kind = SpectralKind::QtBar;
  std::size_t size() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const SpectralPoint&, const SpectralPoint&) = default;
};

/// tau = (1, t^{-1}, ..., t^{1-n}).
std::vector<Scalar> tau(std::size_t n, const FieldConfig& cfg);
/// rho = r * (0, -1, ..., 1-n).
std::vector<Scalar> rho(std::size_t n, const FieldConfig& cfg);

/// v-bar(q,t): coordinates q^{v_i} (w_v tau)_i, any integer vector.
SpectralPoint spectral_qt(const IntVector& v, const FieldConfig& cfg);
/// v-bar(r): coordinates v_i + (w_v rho)_i.
SpectralPoint spectral_r(const IntVector& v, const FieldConfig& cfg);
/// Dispatches on cfg's variant family.
SpectralPoint spectral(const IntVector& v, const FieldConfig& cfg);
/// beta-tilde: the spectral point of -w_o(beta).
SpectralPoint tilde(const Composition& beta, const FieldConfig& cfg);

/// k_i = #{k < i : alpha_k >= alpha_i} + #{k > i : alpha_k > alpha_i}.
std::vector<int> spectral_rank(const IntVector& v);

std::vector<Scalar> scaled(const Scalar& factor, const std::vector<Scalar>& v);
std::vector<Scalar> shifted(const Scalar& offset, const std::vector<Scalar>& v);

}  // namespace macdonald
