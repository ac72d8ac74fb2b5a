#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace macdonald {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Coefficient-field generators, in their fixed order q < t < r < a.
enum class Generator : std::uint8_t { q = 0, t = 1, r = 2, a = 3 };

inline constexpr std::size_t kGeneratorCount = 4;
inline constexpr std::array<Generator, kGeneratorCount> kAllGenerators = {
    Generator::q, Generator::t, Generator::r, Generator::a};

std::string_view generator_name(Generator g);
std::optional<Generator> parse_generator(std::string_view name);

using GenExponent = std::array<int, kGeneratorCount>;

/// Graded-lexicographic order with a as the most significant generator.
struct GrlexLess {
  bool operator()(const GenExponent& lhs, const GenExponent& rhs) const;
};

using Assignment = std::map<Generator, BigRational>;

/// Sparse polynomial with integer coefficients in the generators q, t, r, a.
///
/// Exponents are nonnegative. Terms are kept in a grlex-ordered map, so the
/// leading term is the last entry.
class GenPoly {
 public:
  using TermMap = std::map<GenExponent, BigInt, GrlexLess>;

  GenPoly() = default;
  explicit GenPoly(const BigInt& constant);
  explicit GenPoly(long constant) : GenPoly(BigInt(constant)) {}
  /// Takes ownership of a term map; zero coefficients must already be absent.
  explicit GenPoly(TermMap terms) : terms_(std::move(terms)) {}

  static GenPoly generator(Generator g);
  static GenPoly monomial(const GenExponent& exponent, const BigInt& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  BigInt constant_value() const;

  const TermMap& terms() const { return terms_; }
  const BigInt& leading_coefficient() const;
  const GenExponent& leading_exponent() const;

  int degree_in(Generator g) const;
  int total_degree() const;
  /// Bit i set iff generator i occurs.
  unsigned generator_mask() const;
  /// gcd of the integer coefficients (0 for the zero polynomial).
  BigInt integer_content() const;

  void add_term(const GenExponent& exponent, const BigInt& coeff);

  GenPoly operator-() const;
  GenPoly& operator+=(const GenPoly& rhs);
  GenPoly& operator-=(const GenPoly& rhs);
  GenPoly& operator*=(const GenPoly& rhs);
  friend GenPoly operator+(GenPoly lhs, const GenPoly& rhs) { return lhs += rhs; }
  friend GenPoly operator-(GenPoly lhs, const GenPoly& rhs) { return lhs -= rhs; }
  friend GenPoly operator*(const GenPoly& lhs, const GenPoly& rhs);
  friend bool operator==(const GenPoly& lhs, const GenPoly& rhs) = default;

  GenPoly scaled(const BigInt& factor) const;
  /// Multiply by the monomial with the given exponent.
  GenPoly shifted(const GenExponent& exponent) const;

  BigRational evaluate(const Assignment& values) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Exact quotient, or nullopt when the divisor does not divide.
std::optional<GenPoly> exact_quotient(const GenPoly& dividend, const GenPoly& divisor);

/// Greatest common divisor in Z[q,t,r,a] with positive leading coefficient.
/// Recursive content / primitive-part reduction down to univariate
/// primitive remainder sequences.
GenPoly gcd(const GenPoly& lhs, const GenPoly& rhs);

/// Element of Q or of the fraction field Q(q,t,r,a).
///
/// Canonical form: values without generators are always held as an exact
/// rational; otherwise numerator and denominator share no nonunit factor and
/// the denominator's grlex leading coefficient is positive. Structural
/// equality is therefore mathematical equality.
class Scalar {
 public:
  struct Fraction {
    GenPoly num;
    GenPoly den;
    friend bool operator==(const Fraction&, const Fraction&) = default;
  };

  Scalar() : rep_(BigRational(0)) {}
  Scalar(long value) : rep_(BigRational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigRational& value) : rep_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigInt& value) : rep_(BigRational(value)) {}  // NOLINT(google-explicit-constructor)

  static Scalar generator(Generator g);
  static Scalar rational(long num, long den);
  /// Canonical reduced fraction num/den. Throws DivisionByZero when den = 0.
  static Scalar reduce(const GenPoly& num, const GenPoly& den);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<BigRational>(rep_); }
  const BigRational& as_rational() const;
  const Fraction& as_fraction() const;
  GenPoly numerator() const;
  GenPoly denominator() const;
  unsigned generator_mask() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  Scalar inverse() const;
  Scalar pow(int exponent) const;

  /// Exact value at the assignment. Throws SpecializationCollision when the
  /// denominator vanishes there.
  BigRational specialize(const Assignment& values) const;
  /// Substitute q -> 1/q and t -> 1/t, clearing the introduced powers.
  Scalar with_reciprocal_qt() const;

  std::string to_string() const;

 private:
  explicit Scalar(Fraction f) : rep_(std::move(f)) {}
  static Scalar from_canonical(GenPoly num, GenPoly den);

  std::variant<BigRational, Fraction> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class Variant { QT, R, QTA, RA };
enum class FieldMode { Symbolic, Specialized };

std::string_view variant_name(Variant v);
std::vector<Generator> variant_generators(Variant v);
bool is_qt_family(Variant v);
bool has_a(Variant v);

/// Coefficient field in use: which generators exist and whether they are
/// kept symbolic or replaced by exact rationals.
class FieldConfig {
 public:
  static FieldConfig symbolic(Variant variant);
  /// Throws UsageError unless `values` covers exactly the variant's generators.
  static FieldConfig specialized(Variant variant, Assignment values);
  /// q = 2, t = 3; r and a must be supplied for the R/RA/QTA variants.
  static FieldConfig default_specialized_qt();

  Variant variant() const { return variant_; }
  FieldMode mode() const { return mode_; }
  const Assignment& assignments() const { return assignments_; }
  bool inverted_parameters() const { return inverted_; }

  /// Generator values as Scalars in this field. With inverted parameters,
  /// q() and t() return the reciprocals.
  Scalar q() const;
  Scalar t() const;
  Scalar r() const;
  Scalar a() const;
  Scalar value_of(Generator g) const;

  FieldConfig with_inverted_parameters(bool inverted) const;
  /// Same field with `a` adjoined (QT -> QTA, R -> RA), keeping the mode.
  /// In specialized mode `a_value` must be given.
  FieldConfig with_a(std::optional<BigRational> a_value) const;
  /// Drop `a` (QTA -> QT, RA -> R).
  FieldConfig without_a() const;

  /// Stable textual identity, used for cache keys and reports.
  std::string key() const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  FieldConfig(Variant variant, FieldMode mode, Assignment values, bool inverted)
      : variant_(variant), mode_(mode), assignments_(std::move(values)), inverted_(inverted) {}

  Variant variant_;
  FieldMode mode_;
  Assignment assignments_;
  bool inverted_ = false;
};

}  // namespace macdonald
