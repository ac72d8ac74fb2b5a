#include "macdonald/scalars.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "macdonald/errors.hpp"

namespace macdonald {

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::q: return "q";
    case Generator::t: return "t";
    case Generator::r: return "r";
    case Generator::a: return "a";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (Generator g : kAllGenerators) {
    if (generator_name(g) == name) return g;
  }
  return std::nullopt;
}

namespace {

int exponent_sum(const GenExponent& e) {
  int total = 0;
  for (int x : e) total += x;
  return total;
}

std::size_t index_of(Generator g) { return static_cast<std::size_t>(g); }

}  // namespace

bool GrlexLess::operator()(const GenExponent& lhs, const GenExponent& rhs) const {
  const int dl = exponent_sum(lhs);
  const int dr = exponent_sum(rhs);
  if (dl != dr) return dl < dr;
  for (std::size_t i = kGeneratorCount; i-- > 0;) {
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
  }
  return false;
}

// ---------------------------------------------------------------- GenPoly

GenPoly::GenPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(GenExponent{}, constant);
}

GenPoly GenPoly::generator(Generator g) {
  GenExponent e{};
  e[index_of(g)] = 1;
  return monomial(e, 1);
}

GenPoly GenPoly::monomial(const GenExponent& exponent, const BigInt& coeff) {
  GenPoly p;
  p.add_term(exponent, coeff);
  return p;
}

bool GenPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == GenExponent{});
}

BigInt GenPoly::constant_value() const {
  auto it = terms_.find(GenExponent{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

const BigInt& GenPoly::leading_coefficient() const {
  if (terms_.empty()) throw InvariantViolation("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const GenExponent& GenPoly::leading_exponent() const {
  if (terms_.empty()) throw InvariantViolation("leading exponent of zero polynomial");
  return terms_.rbegin()->first;
}

int GenPoly::degree_in(Generator g) const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[index_of(g)]);
  return deg;
}

int GenPoly::total_degree() const {
  return terms_.empty() ? -1 : exponent_sum(terms_.rbegin()->first);
}

unsigned GenPoly::generator_mask() const {
  unsigned mask = 0;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      if (e[i] != 0) mask |= 1U << i;
    }
  }
  return mask;
}

BigInt GenPoly::integer_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void GenPoly::add_term(const GenExponent& exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GenPoly GenPoly::operator-() const {
  GenPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

GenPoly& GenPoly::operator+=(const GenPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

namespace {

// Dense addressing of the exponent box [0, bound_0] x ... x [0, bound_3].
// Products and quotients of mid-sized polynomials accumulate much faster in
// a flat array than through repeated map insertion.
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

struct ExponentBox {
  GenExponent bound{};
  std::array<std::size_t, kGeneratorCount> stride{};
  std::size_t size = 1;

  explicit ExponentBox(const GenExponent& b) : bound(b) {
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      stride[i] = size;
      const std::size_t extent = static_cast<std::size_t>(bound[i]) + 1;
      size = size > kDenseLimit ? size : size * extent;
    }
  }

  bool fits() const { return size <= kDenseLimit; }

  std::size_t index(const GenExponent& e) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) k += static_cast<std::size_t>(e[i]) * stride[i];
    return k;
  }

  GenExponent exponent(std::size_t k) const {
    GenExponent e{};
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      e[i] = static_cast<int>(k / stride[i] % (static_cast<std::size_t>(bound[i]) + 1));
    }
    return e;
  }
};

GenExponent max_exponents(const GenPoly& p) {
  GenExponent m{};
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < kGeneratorCount; ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

// Collects the nonzero cells of `dense` into a polynomial.
GenPoly from_dense(const ExponentBox& box, std::vector<mpz_class>& dense, const std::vector<std::size_t>& touched) {
  std::vector<std::pair<GenExponent, std::size_t>> cells;
  for (std::size_t k : touched) {
    if (dense[k] != 0) cells.emplace_back(box.exponent(k), k);
  }
  GrlexLess less;
  std::sort(cells.begin(), cells.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  GenPoly::TermMap terms;
  for (auto& [e, k] : cells) terms.emplace_hint(terms.end(), e, std::move(dense[k]));
  return GenPoly(std::move(terms));
}

}  // namespace

GenPoly operator*(const GenPoly& lhs, const GenPoly& rhs) {
  GenPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  GenExponent bound = max_exponents(lhs);
  const GenExponent rb = max_exponents(rhs);
  for (std::size_t i = 0; i < kGeneratorCount; ++i) bound[i] += rb[i];
  const ExponentBox box(bound);
  if (box.fits() && lhs.terms_.size() * rhs.terms_.size() > 16 &&
      box.size <= 8 * lhs.terms_.size() * rhs.terms_.size()) {
    std::vector<mpz_class> dense(box.size);
    std::vector<char> seen(box.size, 0);
    std::vector<std::size_t> touched;
    std::vector<std::pair<std::size_t, const BigInt*>> right;
    right.reserve(rhs.terms_.size());
    for (const auto& [er, cr] : rhs.terms_) right.emplace_back(box.index(er), &cr);
    for (const auto& [el, cl] : lhs.terms_) {
      const std::size_t base = box.index(el);
      for (const auto& [kr, cr] : right) {
        const std::size_t k = base + kr;
        mpz_addmul(dense[k].get_mpz_t(), cl.get_mpz_t(), cr->get_mpz_t());
        if (!seen[k]) {
          seen[k] = 1;
          touched.push_back(k);
        }
      }
    }
    return from_dense(box, dense, touched);
  }
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      GenExponent e;
      for (std::size_t i = 0; i < kGeneratorCount; ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

GenPoly& GenPoly::operator*=(const GenPoly& rhs) { return *this = *this * rhs; }

GenPoly GenPoly::scaled(const BigInt& factor) const {
  GenPoly out;
  if (factor == 0) return out;
  out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

GenPoly GenPoly::shifted(const GenExponent& exponent) const {
  GenPoly out;
  for (const auto& [e, c] : terms_) {
    GenExponent s;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) s[i] = e[i] + exponent[i];
    out.terms_.emplace_hint(out.terms_.end(), s, c);
  }
  return out;
}

BigRational GenPoly::evaluate(const Assignment& values) const {
  std::array<const BigRational*, kGeneratorCount> point{};
  const unsigned mask = generator_mask();
  for (Generator g : kAllGenerators) {
    if ((mask >> index_of(g)) & 1U) {
      auto it = values.find(g);
      if (it == values.end()) {
        throw UsageError("no value assigned to generator " + std::string(generator_name(g)));
      }
      point[index_of(g)] = &it->second;
    }
  }
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= *point[i];
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = e == GenExponent{};
    if (mag != 1 || unit_monomial) {
      os << mag.get_str();
      if (!unit_monomial) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << generator_name(static_cast<Generator>(i));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::optional<GenPoly> exact_quotient(const GenPoly& dividend, const GenPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (divisor.is_constant()) {
    const BigInt c = divisor.constant_value();
    GenPoly out;
    for (const auto& [e, coeff] : dividend.terms()) {
      if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      out.add_term(e, coeff / c);
    }
    return out;
  }
  const GenExponent& lead_e = divisor.leading_exponent();
  const BigInt& lead_c = divisor.leading_coefficient();
  if (dividend.is_zero()) return GenPoly();
  const ExponentBox box(max_exponents(dividend));
  if (box.fits() && box.size <= 64 * dividend.terms().size()) {
    // Walk the dividend box from the top in grlex order. Subtracting a
    // multiple of the divisor only touches cells below the current one.
    std::vector<mpz_class> rem(box.size);
    std::vector<std::pair<GenExponent, std::size_t>> order;
    for (const auto& [e, c] : dividend.terms()) rem[box.index(e)] = c;
    const GenExponent div_max = max_exponents(divisor);
    GenExponent lo = lead_e;
    for (const auto& [e, c] : divisor.terms()) {
      for (std::size_t i = 0; i < kGeneratorCount; ++i) lo[i] = std::min(lo[i], e[i]);
    }
    order.reserve(box.size);
    for (std::size_t k = 0; k < box.size; ++k) {
      GenExponent e = box.exponent(k);
      bool reachable = true;
      for (std::size_t i = 0; i < kGeneratorCount; ++i) reachable = reachable && e[i] >= lo[i];
      if (reachable || rem[k] != 0) order.emplace_back(e, k);
    }
    GrlexLess less;
    std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) { return less(y.first, x.first); });
    GenPoly::TermMap quotient;
    mpz_class factor;
    for (const auto& [e, k] : order) {
      if (rem[k] == 0) continue;
      GenExponent shift;
      for (std::size_t i = 0; i < kGeneratorCount; ++i) {
        shift[i] = e[i] - lead_e[i];
        // Degrees add under exact division, so overshooting the box means a
        // nonzero remainder.
        if (shift[i] < 0 || shift[i] + div_max[i] > box.bound[i]) return std::nullopt;
      }
      if (!mpz_divisible_p(rem[k].get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
      mpz_divexact(factor.get_mpz_t(), rem[k].get_mpz_t(), lead_c.get_mpz_t());
      const std::size_t base = box.index(shift);
      for (const auto& [de, dc] : divisor.terms()) {
        mpz_submul(rem[base + box.index(de)].get_mpz_t(), factor.get_mpz_t(), dc.get_mpz_t());
      }
      quotient.emplace_hint(quotient.begin(), shift, factor);
    }
    return GenPoly(std::move(quotient));
  }
  GenPoly remainder = dividend;
  GenPoly quotient;
  while (!remainder.is_zero()) {
    const GenExponent& re = remainder.leading_exponent();
    const BigInt& rc = remainder.leading_coefficient();
    GenExponent shift;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const BigInt factor = rc / lead_c;
    quotient.add_term(shift, factor);
    remainder -= divisor.shifted(shift).scaled(factor);
  }
  return quotient;
}

namespace {

GenPoly divide_or_throw(const GenPoly& a, const GenPoly& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw InvariantViolation("expected exact polynomial division");
  return *std::move(q);
}

// Coefficients of p viewed as a polynomial in g, indexed by degree.
std::vector<GenPoly> split_by(const GenPoly& p, Generator g) {
  const std::size_t gi = index_of(g);
  std::vector<GenPoly> out(static_cast<std::size_t>(std::max(p.degree_in(g), 0)) + 1);
  for (const auto& [e, c] : p.terms()) {
    GenExponent rest = e;
    rest[gi] = 0;
    out[static_cast<std::size_t>(e[gi])].add_term(rest, c);
  }
  return out;
}

GenPoly join_by(const std::vector<GenPoly>& coeffs, Generator g) {
  const std::size_t gi = index_of(g);
  GenPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    GenExponent shift{};
    shift[gi] = static_cast<int>(k);
    out += coeffs[k].shifted(shift);
  }
  return out;
}

GenPoly sign_normalized(GenPoly p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) p = -p;
  return p;
}

GenPoly content_in(const GenPoly& p, Generator g) {
  GenPoly c;
  for (const GenPoly& coeff : split_by(p, g)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant() && c.constant_value() == 1) break;
  }
  return c;
}

GenPoly primitive_part_in(const GenPoly& p, Generator g) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, g));
}

// Sparse pseudo-remainder of a by b with respect to g.
GenPoly pseudo_remainder(const GenPoly& a, const GenPoly& b, Generator g) {
  std::vector<GenPoly> rem = split_by(a, g);
  const std::vector<GenPoly> div = split_by(b, g);
  const std::size_t db = div.size() - 1;
  const GenPoly& lead = div[db];
  while (rem.size() > db) {
    const std::size_t dr = rem.size() - 1;
    if (rem[dr].is_zero()) {
      rem.pop_back();
      continue;
    }
    const GenPoly top = rem[dr];
    for (auto& coeff : rem) coeff *= lead;
    for (std::size_t k = 0; k <= db; ++k) rem[dr - db + k] -= top * div[k];
    rem.pop_back();
  }
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  return join_by(rem, g);
}

}  // namespace

GenPoly gcd(const GenPoly& lhs, const GenPoly& rhs) {
  if (lhs.is_zero()) return sign_normalized(rhs);
  if (rhs.is_zero()) return sign_normalized(lhs);
  if (lhs == rhs) return sign_normalized(lhs);
  if (lhs.is_constant() || rhs.is_constant()) {
    BigInt g = lhs.integer_content();
    const BigInt h = rhs.integer_content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return GenPoly(g);
  }
  const unsigned ml = lhs.generator_mask();
  const unsigned mr = rhs.generator_mask();
  const unsigned mask = ml | mr;
  const auto main = static_cast<Generator>(std::bit_width(mask) - 1);
  const unsigned bit = 1U << index_of(main);
  if (!(ml & bit)) return gcd(lhs, content_in(rhs, main));
  if (!(mr & bit)) return gcd(content_in(lhs, main), rhs);

  const GenPoly cl = content_in(lhs, main);
  const GenPoly cr = content_in(rhs, main);
  const GenPoly content_gcd = gcd(cl, cr);
  GenPoly a = divide_or_throw(lhs, cl);
  GenPoly b = divide_or_throw(rhs, cr);
  if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);
  while (true) {
    GenPoly rem = pseudo_remainder(a, b, main);
    if (rem.is_zero()) break;
    if (rem.degree_in(main) <= 0) {
      b = GenPoly(1);
      break;
    }
    a = std::move(b);
    b = primitive_part_in(rem, main);
  }
  return sign_normalized(content_gcd * primitive_part_in(b, main));
}

// ----------------------------------------------------------------- Scalar

Scalar Scalar::generator(Generator g) { return Scalar(Fraction{GenPoly::generator(g), GenPoly(1)}); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational v(num, den);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::from_canonical(GenPoly num, GenPoly den) {
  if (num.is_zero()) return Scalar();
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_constant() && den.is_constant()) {
    BigRational v(num.constant_value(), den.constant_value());
    v.canonicalize();
    return Scalar(v);
  }
  return Scalar(Fraction{std::move(num), std::move(den)});
}

Scalar Scalar::reduce(const GenPoly& num, const GenPoly& den) {
  if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
  if (num.is_zero()) return Scalar();
  const GenPoly g = gcd(num, den);
  if (g.is_constant() && g.constant_value() == 1) return from_canonical(num, den);
  return from_canonical(divide_or_throw(num, g), divide_or_throw(den, g));
}

bool Scalar::is_zero() const {
  const auto* r = std::get_if<BigRational>(&rep_);
  return r != nullptr && *r == 0;
}

bool Scalar::is_one() const {
  const auto* r = std::get_if<BigRational>(&rep_);
  return r != nullptr && *r == 1;
}

const BigRational& Scalar::as_rational() const { return std::get<BigRational>(rep_); }
const Scalar::Fraction& Scalar::as_fraction() const { return std::get<Fraction>(rep_); }

GenPoly Scalar::numerator() const {
  if (const auto* r = std::get_if<BigRational>(&rep_)) return GenPoly(r->get_num());
  return std::get<Fraction>(rep_).num;
}

GenPoly Scalar::denominator() const {
  if (const auto* r = std::get_if<BigRational>(&rep_)) return GenPoly(r->get_den());
  return std::get<Fraction>(rep_).den;
}

unsigned Scalar::generator_mask() const {
  if (is_rational()) return 0;
  const auto& f = as_fraction();
  return f.num.generator_mask() | f.den.generator_mask();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<BigRational>(&rep_)) return Scalar(BigRational(-*r));
  const auto& f = std::get<Fraction>(rep_);
  return Scalar(Fraction{-f.num, f.den});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_rational() && rhs.is_rational()) {
    std::get<BigRational>(rep_) += rhs.as_rational();
    return *this;
  }
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const GenPoly n1 = numerator(), d1 = denominator();
  const GenPoly n2 = rhs.numerator(), d2 = rhs.denominator();
  if (d1 == d2) return *this = reduce(n1 + n2, d1);
  const GenPoly g = gcd(d1, d2);
  const GenPoly c1 = divide_or_throw(d2, g);
  const GenPoly c2 = divide_or_throw(d1, g);
  return *this = reduce(n1 * c1 + n2 * c2, d1 * c1);
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_rational() && rhs.is_rational()) {
    std::get<BigRational>(rep_) *= rhs.as_rational();
    return *this;
  }
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  const GenPoly n1 = numerator(), d1 = denominator();
  const GenPoly n2 = rhs.numerator(), d2 = rhs.denominator();
  const GenPoly g1 = gcd(n1, d2);
  const GenPoly g2 = gcd(n2, d1);
  GenPoly num = divide_or_throw(n1, g1) * divide_or_throw(n2, g2);
  GenPoly den = divide_or_throw(d1, g2) * divide_or_throw(d2, g1);
  return *this = from_canonical(std::move(num), std::move(den));
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.rep_ == rhs.rep_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<BigRational>(&rep_)) {
    BigRational inv = 1 / *r;
    inv.canonicalize();
    return Scalar(inv);
  }
  const auto& f = std::get<Fraction>(rep_);
  return from_canonical(f.den, f.num);
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigRational Scalar::specialize(const Assignment& values) const {
  if (const auto* r = std::get_if<BigRational>(&rep_)) return *r;
  const auto& f = std::get<Fraction>(rep_);
  const BigRational den = f.den.evaluate(values);
  if (den == 0) {
    throw SpecializationCollision("denominator " + f.den.to_string() + " vanishes under specialization");
  }
  BigRational out = f.num.evaluate(values) / den;
  out.canonicalize();
  return out;
}

namespace {

// p(1/q, 1/t) * q^deg_q(p) * t^deg_t(p)
GenPoly reverse_qt(const GenPoly& p, int dq, int dt) {
  GenPoly out;
  for (const auto& [e, c] : p.terms()) {
    GenExponent m = e;
    m[index_of(Generator::q)] = dq - e[index_of(Generator::q)];
    m[index_of(Generator::t)] = dt - e[index_of(Generator::t)];
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

Scalar Scalar::with_reciprocal_qt() const {
  if (is_rational()) return *this;
  const auto& f = as_fraction();
  const int nq = std::max(f.num.degree_in(Generator::q), 0);
  const int nt = std::max(f.num.degree_in(Generator::t), 0);
  const int dq = std::max(f.den.degree_in(Generator::q), 0);
  const int dt = std::max(f.den.degree_in(Generator::t), 0);
  GenExponent num_shift{}, den_shift{};
  num_shift[index_of(Generator::q)] = dq;
  num_shift[index_of(Generator::t)] = dt;
  den_shift[index_of(Generator::q)] = nq;
  den_shift[index_of(Generator::t)] = nt;
  return reduce(reverse_qt(f.num, nq, nt).shifted(num_shift), reverse_qt(f.den, dq, dt).shifted(den_shift));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<BigRational>(&rep_)) return r->get_str();
  const auto& f = std::get<Fraction>(rep_);
  const bool den_one = f.den.is_constant() && f.den.constant_value() == 1;
  if (den_one) return f.num.to_string();
  auto wrap = [](const GenPoly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(f.num) + "/" + wrap(f.den);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ------------------------------------------------------------ FieldConfig

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::QT: return "QT";
    case Variant::R: return "R";
    case Variant::QTA: return "QTA";
    case Variant::RA: return "RA";
  }
  return "?";
}

std::vector<Generator> variant_generators(Variant v) {
  switch (v) {
    case Variant::QT: return {Generator::q, Generator::t};
    case Variant::R: return {Generator::r};
    case Variant::QTA: return {Generator::q, Generator::t, Generator::a};
    case Variant::RA: return {Generator::r, Generator::a};
  }
  return {};
}

bool is_qt_family(Variant v) { return v == Variant::QT || v == Variant::QTA; }
bool has_a(Variant v) { return v == Variant::QTA || v == Variant::RA; }

FieldConfig FieldConfig::symbolic(Variant variant) { return FieldConfig(variant, FieldMode::Symbolic, {}, false); }

FieldConfig FieldConfig::specialized(Variant variant, Assignment values) {
  const auto gens = variant_generators(variant);
  if (values.size() != gens.size()) {
    throw UsageError("specialization must assign exactly the generators of variant " +
                     std::string(variant_name(variant)));
  }
  for (Generator g : gens) {
    if (!values.contains(g)) {
      throw UsageError("specialization is missing generator " + std::string(generator_name(g)));
    }
  }
  for (auto& [g, v] : values) v.canonicalize();
  return FieldConfig(variant, FieldMode::Specialized, std::move(values), false);
}

FieldConfig FieldConfig::default_specialized_qt() {
  return specialized(Variant::QT, {{Generator::q, BigRational(2)}, {Generator::t, BigRational(3)}});
}

Scalar FieldConfig::value_of(Generator g) const {
  const auto gens = variant_generators(variant_);
  if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
    throw UsageError("generator " + std::string(generator_name(g)) + " is not part of field " +
                     std::string(variant_name(variant_)));
  }
  Scalar value = mode_ == FieldMode::Symbolic ? Scalar::generator(g) : Scalar(assignments_.at(g));
  if (inverted_ && (g == Generator::q || g == Generator::t)) value = value.inverse();
  return value;
}

Scalar FieldConfig::q() const { return value_of(Generator::q); }
Scalar FieldConfig::t() const { return value_of(Generator::t); }
Scalar FieldConfig::r() const { return value_of(Generator::r); }
Scalar FieldConfig::a() const { return value_of(Generator::a); }

FieldConfig FieldConfig::with_inverted_parameters(bool inverted) const {
  FieldConfig out = *this;
  out.inverted_ = inverted && is_qt_family(variant_);
  return out;
}

FieldConfig FieldConfig::with_a(std::optional<BigRational> a_value) const {
  FieldConfig out = *this;
  if (variant_ == Variant::QT) out.variant_ = Variant::QTA;
  if (variant_ == Variant::R) out.variant_ = Variant::RA;
  if (mode_ == FieldMode::Specialized) {
    if (!a_value) throw UsageError("specialized field needs a value for a");
    a_value->canonicalize();
    out.assignments_[Generator::a] = *a_value;
  }
  return out;
}

FieldConfig FieldConfig::without_a() const {
  FieldConfig out = *this;
  if (variant_ == Variant::QTA) out.variant_ = Variant::QT;
  if (variant_ == Variant::RA) out.variant_ = Variant::R;
  out.assignments_.erase(Generator::a);
  return out;
}

std::string FieldConfig::key() const {
  std::string out(variant_name(variant_));
  if (mode_ == FieldMode::Symbolic) {
    out += "|symbolic";
  } else {
    out += "|";
    bool first = true;
    for (Generator g : variant_generators(variant_)) {
      if (!first) out += ",";
      first = false;
      out += std::string(generator_name(g)) + "=" + assignments_.at(g).get_str();
    }
  }
  if (inverted_) out += "|inverted";
  return out;
}

}  // namespace macdonald
