#include "macdonald/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

int exponent_sum(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

bool MonomialLess::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const int dl = exponent_sum(lhs);
  const int dr = exponent_sum(rhs);
  if (dl != dr) return dl < dr;
  // Higher power of x_1 ranks higher.
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

LaurentPoly::LaurentPoly(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("polynomials need at least one variable");
}

LaurentPoly LaurentPoly::constant(std::size_t n, const Scalar& c) {
  LaurentPoly f(n);
  f.add_term(Monomial(n, 0), c);
  return f;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw IndexError("variable index out of range");
  Monomial m(n, 0);
  m[i - 1] = 1;
  return monomial(m, Scalar(1));
}

LaurentPoly LaurentPoly::monomial(const Monomial& exponent, const Scalar& coeff) {
  LaurentPoly f(exponent.size());
  f.add_term(exponent, coeff);
  return f;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [m, c] : terms_) {
    for (int e : m) {
      if (e < 0) return false;
    }
  }
  return true;
}

int LaurentPoly::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, exponent_sum(m));
  return deg;
}

void LaurentPoly::add_term(const Monomial& exponent, const Scalar& coeff) {
  if (exponent.size() != n_) throw DimensionError("monomial has the wrong number of variables");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar LaurentPoly::coefficient(const Monomial& exponent) const {
  if (exponent.size() != n_) throw DimensionError("monomial has the wrong number of variables");
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.n_ != n_) throw DimensionError("adding polynomials in different numbers of variables");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.n_ != n_) throw DimensionError("subtracting polynomials in different numbers of variables");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (rhs.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.n_ != rhs.n_) throw DimensionError("multiplying polynomials in different numbers of variables");
  LaurentPoly out(lhs.n_);
  Monomial m(lhs.n_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ml[i] + mr[i];
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& exponent) const {
  if (exponent.size() != n_) throw DimensionError("monomial has the wrong number of variables");
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    for (std::size_t i = 0; i < n_; ++i) s[i] += exponent[i];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

LaurentPoly LaurentPoly::divided_by(const Scalar& c) const {
  if (c.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
  return *this * c.inverse();
}

Scalar LaurentPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != n_) throw DimensionError("evaluation point has the wrong dimension");
  // Powers are cached per coordinate; inverses only when needed.
  std::vector<std::map<int, Scalar>> powers(n_);
  auto power = [&](std::size_t i, int e) -> const Scalar& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    if (e < 0 && point[i].is_zero()) {
      throw DivisionByZero("negative power of x" + std::to_string(i + 1) + " evaluated at 0");
    }
    return powers[i].emplace(e, point[i].pow(e)).first->second;
  };
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] != 0) term *= power(i, m[i]);
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::permute_vars(const Permutation& w) const {
  if (w.size() != n_) throw DimensionError("permutation size differs from number of variables");
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s(n_);
    for (std::size_t i = 0; i < n_; ++i) s[static_cast<std::size_t>(w(static_cast<int>(i + 1)) - 1)] = m[i];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

LaurentPoly LaurentPoly::swap_adjacent(std::size_t i) const {
  if (i < 1 || i >= n_) throw IndexError("adjacent swap index out of range");
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    std::swap(s[i - 1], s[i]);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

LaurentPoly LaurentPoly::affine_substitute(const std::vector<AffineImage>& images) const {
  if (images.size() != n_) throw DimensionError("substitution needs one image per variable");
  std::vector<LaurentPoly> base;
  base.reserve(n_);
  for (const auto& img : images) {
    if (img.source >= n_) throw IndexError("substitution source variable out of range");
    Monomial m(n_, 0);
    m[img.source] = 1;
    LaurentPoly b = LaurentPoly::monomial(m, img.scale);
    b.add_term(Monomial(n_, 0), img.offset);
    base.push_back(std::move(b));
  }
  std::vector<std::map<int, LaurentPoly>> powers(n_);
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    LaurentPoly p = LaurentPoly::constant(n_, Scalar(1));
    if (e < 0) {
      if (!images[i].offset.is_zero() || images[i].scale.is_zero()) {
        throw UnsupportedSubstitution("negative power of x" + std::to_string(i + 1) +
                                      " under a non-monomial substitution");
      }
      Monomial m(n_, 0);
      m[images[i].source] = e;
      p = LaurentPoly::monomial(m, images[i].scale.pow(e));
    } else {
      for (int k = 0; k < e; ++k) p = p * base[i];
    }
    return powers[i].emplace(e, std::move(p)).first->second;
  };
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    LaurentPoly term = LaurentPoly::constant(n_, c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] != 0) term = term * power(i, m[i]);
    }
    out += term;
  }
  return out;
}

LaurentPoly LaurentPoly::homogeneous_part(int d) const {
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    if (exponent_sum(m) == d) out.terms_.emplace(m, c);
  }
  return out;
}

LaurentPoly LaurentPoly::top_part(int d) const {
  if (total_degree() > d) {
    throw DegreeError("polynomial has degree " + std::to_string(total_degree()) + " above " + std::to_string(d));
  }
  return homogeneous_part(d);
}

LaurentPoly LaurentPoly::divide_by_difference(std::size_t i) const {
  if (i < 1 || i >= n_) throw IndexError("difference index out of range");
  if (is_zero()) return *this;
  const std::size_t xi = i - 1;
  const std::size_t yi = i;
  int lowest = 0;
  for (const auto& [m, c] : terms_) lowest = std::min({lowest, m[xi], m[yi]});
  Monomial lift(n_, 0);
  lift[xi] = lift[yi] = -lowest;
  const LaurentPoly f = lowest < 0 ? times_monomial(lift) : *this;

  // Split f = sum_k c_k x^k with c_k free of x = x_i.
  int top = 0;
  for (const auto& [m, c] : f.terms_) top = std::max(top, m[xi]);
  std::vector<LaurentPoly> parts(static_cast<std::size_t>(top) + 1, LaurentPoly(n_));
  for (const auto& [m, c] : f.terms_) {
    Monomial rest = m;
    rest[xi] = 0;
    parts[static_cast<std::size_t>(m[xi])].terms_.emplace(std::move(rest), c);
  }
  Monomial y(n_, 0);
  y[yi] = 1;
  // f = (x - y) h: h_{k-1} = c_k + y h_k, remainder c_0 + y h_0.
  LaurentPoly quotient(n_);
  LaurentPoly h(n_);
  for (int k = top; k >= 1; --k) {
    h = parts[static_cast<std::size_t>(k)] + h.times_monomial(y);
    Monomial xk(n_, 0);
    xk[xi] = k - 1;
    quotient += h.times_monomial(xk);
  }
  const LaurentPoly remainder = parts[0] + h.times_monomial(y);
  if (!remainder.is_zero()) {
    throw InvariantViolation("nonzero remainder dividing by x" + std::to_string(i) + " - x" + std::to_string(i + 1));
  }
  if (lowest < 0) {
    Monomial drop(n_, 0);
    drop[xi] = drop[yi] = lowest;
    return quotient.times_monomial(drop);
  }
  return quotient;
}

LaurentPoly LaurentPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.is_rational() && c.as_rational() < 0) {
      negative = true;
      coeff = (-c).to_string();
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool needs_parens = !c.is_rational() && coeff.find_first_of("+- ") != std::string::npos;
    if (unit) {
      os << (needs_parens ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff != "1") os << (needs_parens ? "(" + coeff + ")" : coeff) << "*";
    bool first_factor = true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << "x" << (i + 1);
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

std::vector<AffineImage> identity_images(std::size_t n) {
  std::vector<AffineImage> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {Scalar(1), i, Scalar()};
  return out;
}

LaurentPoly scale_vars(const LaurentPoly& f, const Scalar& factor) {
  // Monomial substitution: x^e -> factor^{|e|} x^e.
  LaurentPoly out(f.num_vars());
  std::map<int, Scalar> powers;
  for (const auto& [m, c] : f.terms()) {
    const int d = exponent_sum(m);
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, factor.pow(d)).first;
    out.add_term(m, c * it->second);
  }
  return out;
}

LaurentPoly translate_vars(const LaurentPoly& f, const Scalar& offset) {
  auto images = identity_images(f.num_vars());
  for (auto& img : images) img.offset = offset;
  return f.affine_substitute(images);
}

bool is_symmetric(const LaurentPoly& f) {
  for (std::size_t i = 1; i < f.num_vars(); ++i) {
    if (f.swap_adjacent(i) != f) return false;
  }
  return true;
}

}  // namespace macdonald
