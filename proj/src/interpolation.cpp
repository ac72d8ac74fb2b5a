#include "macdonald/interpolation.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "macdonald/errors.hpp"
#include "macdonald/operators.hpp"
#include "macdonald/serialize.hpp"

namespace macdonald {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::G: return "G";
    case Family::GOracle: return "G-oracle";
    case Family::E: return "E";
    case Family::Gprime: return "Gprime";
    case Family::Gplus: return "Gplus";
    case Family::R: return "R";
    case Family::Rprime: return "Rprime";
    case Family::O: return "O";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::G, Family::GOracle, Family::E, Family::Gprime, Family::Gplus, Family::R, Family::Rprime,
                   Family::O}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string FamilyKey::to_string() const {
  return std::string(family_name(family)) + "|" + index.to_string() + "|" + cfg.key();
}

// ------------------------------------------------------------- PolyCache

PolyCache& PolyCache::global() {
  static PolyCache cache;
  return cache;
}

void PolyCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(mutex_);
  dir_ = std::move(dir);
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::optional<std::filesystem::path> PolyCache::directory() const {
  std::shared_lock lock(mutex_);
  return dir_;
}

std::string PolyCache::file_name(const FamilyKey& key) {
  // FNV-1a, stable across runs and platforms.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key.to_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h << ".json";
  return os.str();
}

std::optional<LaurentPoly> PolyCache::find(const FamilyKey& key) {
  const std::string k = key.to_string();
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(k);
    if (it != entries_.end()) return it->second;
    dir = dir_;
  }
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / file_name(key));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != k) return std::nullopt;
    LaurentPoly value = poly_from_json(j.at("poly"));
    std::unique_lock lock(mutex_);
    entries_.try_emplace(k, value);
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void PolyCache::insert(const FamilyKey& key, const LaurentPoly& value) {
  const std::string k = key.to_string();
  std::optional<std::filesystem::path> dir;
  {
    std::unique_lock lock(mutex_);
    entries_.try_emplace(k, value);
    dir = dir_;
  }
  if (!dir) return;
  Json j = Json::object();
  j["key"] = k;
  j["family"] = std::string(family_name(key.family));
  j["index"] = composition_to_json(key.index);
  j["field"] = key.cfg.key();
  j["poly"] = poly_to_json(value);
  const auto path = *dir / file_name(key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

LaurentPoly PolyCache::get_or_compute(const FamilyKey& key, const std::function<LaurentPoly()>& compute) {
  if (auto hit = find(key)) return *std::move(hit);
  LaurentPoly value = compute();
  insert(key, value);
  return value;
}

void PolyCache::clear_memory() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t PolyCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

// --------------------------------------------------------------- helpers

FieldConfig base_field(const FieldConfig& cfg) { return cfg.without_a(); }

namespace {

Monomial to_monomial(const Composition& c) { return c.entries(); }

// Table of coordinate powers 0..max_degree for one point.
class PowerTable {
 public:
  PowerTable(std::span<const Scalar> point, int max_degree) : table_(point.size()) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      table_[i].reserve(static_cast<std::size_t>(max_degree) + 1);
      Scalar cur(1);
      for (int k = 0; k <= max_degree; ++k) {
        table_[i].push_back(cur);
        if (k < max_degree) cur *= point[i];
      }
    }
  }
  Scalar monomial(const Monomial& m) const {
    Scalar out(1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) out *= table_[i][static_cast<std::size_t>(m[i])];
    }
    return out;
  }

 private:
  std::vector<std::vector<Scalar>> table_;
};

bool is_r_field(const FieldConfig& cfg) { return !is_qt_family(cfg.variant()); }

void require_r_field(const FieldConfig& cfg, const char* what) {
  if (!is_r_field(cfg)) throw UsageError(std::string(what) + " is only defined over the Jack (r) field");
}

std::vector<Scalar> point_of(const Composition& beta, const FieldConfig& cfg) {
  return spectral(beta.as_vector(), cfg).coords;
}

// Solve for the coefficients of `unknowns` so that
//   sum_k c_k x^{unknowns[k]} + fixed(x) = 0 at every point.
LaurentPoly solve_vanishing(std::size_t n, const std::vector<Monomial>& unknowns,
                            const std::vector<std::vector<Scalar>>& points, const LaurentPoly& fixed,
                            int max_degree, const std::string& what) {
  if (unknowns.size() != points.size()) throw InvariantViolation("interpolation system is not square");
  ScalarMatrix a;
  ScalarMatrix b;
  a.reserve(points.size());
  for (const auto& p : points) {
    PowerTable powers(p, max_degree);
    std::vector<Scalar> row;
    row.reserve(unknowns.size());
    for (const auto& m : unknowns) row.push_back(powers.monomial(m));
    a.push_back(std::move(row));
    b.push_back({-fixed.evaluate(p)});
  }
  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw SpecializationCollision("singular interpolation system for " + what);
  LaurentPoly out = fixed;
  for (std::size_t k = 0; k < unknowns.size(); ++k) out.add_term(unknowns[k], (*x)[k][0]);
  (void)n;
  return out;
}

// Symmetric version: unknown coefficients of monomial symmetric functions.
LaurentPoly solve_vanishing_symmetric(const std::vector<Composition>& basis,
                                      const std::vector<std::vector<Scalar>>& points, const LaurentPoly& fixed,
                                      const std::string& what) {
  if (basis.size() != points.size()) throw InvariantViolation("symmetric interpolation system is not square");
  std::vector<LaurentPoly> mons;
  mons.reserve(basis.size());
  for (const auto& mu : basis) mons.push_back(monomial_symmetric(mu));
  ScalarMatrix a;
  ScalarMatrix b;
  for (const auto& p : points) {
    std::vector<Scalar> row;
    row.reserve(mons.size());
    for (const auto& m : mons) row.push_back(m.evaluate(p));
    a.push_back(std::move(row));
    b.push_back({-fixed.evaluate(p)});
  }
  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw SpecializationCollision("singular symmetric interpolation system for " + what);
  LaurentPoly out = fixed;
  for (std::size_t k = 0; k < mons.size(); ++k) out += mons[k] * (*x)[k][0];
  return out;
}

std::string instance(const char* family, const Composition& c) { return std::string(family) + c.to_string(); }

}  // namespace

LaurentPoly monomial_symmetric(const Composition& lambda) {
  LaurentPoly out(lambda.size());
  for (const auto& c : rearrangements(lambda)) out.add_term(to_monomial(c), Scalar(1));
  return out;
}

// ------------------------------------------------------------- G family

std::vector<std::size_t> descents(const Composition& alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha[i] > alpha[i + 1]) out.push_back(i + 1);
  }
  return out;
}

LaurentPoly g_via_phi(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  const std::size_t n = alpha.size();
  const int last = alpha[n - 1];
  if (last <= 0) throw UsageError("Phi step needs a positive last entry in " + alpha.to_string());
  const LaurentPoly prev = g_recursive(shift_sharp(alpha), base);
  if (is_qt_family(base.variant())) return phi_qt(prev, base) * base.q().pow(last - 1);
  return phi_r(prev, base);
}

LaurentPoly g_via_descent(const Composition& alpha, std::size_t i, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  if (i < 1 || i >= alpha.size() || alpha[i - 1] <= alpha[i]) {
    throw UsageError("no descent at position " + std::to_string(i) + " of " + alpha.to_string());
  }
  const Composition swapped = Permutation::simple(alpha.size(), i).act(alpha);
  const LaurentPoly prev = g_recursive(swapped, base);
  const SpectralPoint bar = spectral(alpha.as_vector(), base);
  const Scalar& u = bar[i - 1];
  const Scalar& v = bar[i];
  if (is_qt_family(base.variant())) {
    const Scalar d = Scalar(1) - u / v;
    if (d.is_zero()) {
      throw SpecializationCollision("Hecke step coefficient vanishes for alpha = " + alpha.to_string() +
                                    ", i = " + std::to_string(i));
    }
    return hecke(i, prev, base) + prev * ((Scalar(1) - base.t()) / d);
  }
  const Scalar d = u - v;
  if (d.is_zero()) {
    throw SpecializationCollision("sigma step coefficient vanishes for alpha = " + alpha.to_string() +
                                  ", i = " + std::to_string(i));
  }
  return sigma_op(i, prev, base) + prev * (base.r() / d);
}

LaurentPoly g_recursive(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  return PolyCache::global().get_or_compute({Family::G, alpha, base}, [&] {
    const std::size_t n = alpha.size();
    if (alpha.degree() == 0) return LaurentPoly::constant(n, Scalar(1));
    if (alpha[n - 1] > 0) return g_via_phi(alpha, base);
    return g_via_descent(alpha, descents(alpha).back(), base);
  });
}

LaurentPoly g_oracle(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  return PolyCache::global().get_or_compute({Family::GOracle, alpha, base}, [&] {
    const std::size_t n = alpha.size();
    const int m = alpha.degree();
    const auto all = enumerate_compositions(n, m);
    std::vector<Monomial> unknowns;
    std::vector<std::vector<Scalar>> points;
    for (const auto& beta : all) {
      if (beta == alpha) continue;
      unknowns.push_back(to_monomial(beta));
      points.push_back(point_of(beta, base));
    }
    const LaurentPoly lead = LaurentPoly::monomial(to_monomial(alpha), Scalar(1));
    return solve_vanishing(n, unknowns, points, lead, m, instance("G", alpha));
  });
}

LaurentPoly e_top(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  return PolyCache::global().get_or_compute({Family::E, alpha, base}, [&] {
    return g_recursive(alpha, base).top_part(alpha.degree());
  });
}

LaurentPoly gprime(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  return PolyCache::global().get_or_compute({Family::Gprime, alpha, base}, [&] {
    const std::size_t n = alpha.size();
    const int m = alpha.degree();
    const LaurentPoly top = e_top(alpha, base);
    if (m == 0) return top;
    std::vector<Monomial> unknowns;
    std::vector<std::vector<Scalar>> points;
    for (const auto& beta : enumerate_compositions(n, m - 1)) {
      unknowns.push_back(to_monomial(beta));
      points.push_back(tilde(beta, base).coords);
    }
    return solve_vanishing(n, unknowns, points, top, m, instance("G'", alpha));
  });
}

LaurentPoly gplus(const Composition& alpha, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  require_r_field(base, "G+");
  return PolyCache::global().get_or_compute({Family::Gplus, alpha, base}, [&] {
    const std::size_t n = alpha.size();
    auto images = identity_images(n);
    const Scalar offset = -Scalar(static_cast<long>(n - 1)) * base.r();
    for (auto& img : images) {
      img.scale = Scalar(-1);
      img.offset = offset;
    }
    LaurentPoly out = g_recursive(alpha, base).affine_substitute(images);
    if (alpha.degree() % 2 != 0) out = -out;
    return out;
  });
}

LaurentPoly r_sym(const Composition& lambda, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  if (!lambda.is_partition()) throw UsageError("R needs a partition, got " + lambda.to_string());
  return PolyCache::global().get_or_compute({Family::R, lambda, base}, [&] {
    const std::size_t n = lambda.size();
    std::vector<Composition> basis;
    std::vector<std::vector<Scalar>> points;
    for (const auto& mu : enumerate_partitions(n, lambda.degree())) {
      if (mu == lambda) continue;
      basis.push_back(mu);
      points.push_back(point_of(mu, base));
    }
    return solve_vanishing_symmetric(basis, points, monomial_symmetric(lambda), instance("R", lambda));
  });
}

LaurentPoly rprime_r(const Composition& lambda, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  require_r_field(base, "R'");
  if (!lambda.is_partition()) throw UsageError("R' needs a partition, got " + lambda.to_string());
  return PolyCache::global().get_or_compute({Family::Rprime, lambda, base}, [&] {
    const std::size_t n = lambda.size();
    const int m = lambda.degree();
    const LaurentPoly top = r_sym(lambda, base).top_part(m);
    if (m == 0) return top;
    std::vector<Composition> basis;
    std::vector<std::vector<Scalar>> points;
    for (const auto& mu : enumerate_partitions(n, m - 1)) {
      basis.push_back(mu);
      points.push_back(tilde(mu, base).coords);
    }
    return solve_vanishing_symmetric(basis, points, top, instance("R'", lambda));
  });
}

// ------------------------------------------------------------ reciprocity

std::vector<Scalar> reciprocity_node(const Composition& beta, const FieldConfig& cfg) {
  std::vector<Scalar> p = point_of(beta, cfg);
  if (is_qt_family(cfg.variant())) {
    for (auto& x : p) x = x.inverse();
  }
  return p;
}

Scalar reciprocity_target(const Composition& alpha, const Composition& beta, const FieldConfig& cfg) {
  if (!has_a(cfg.variant())) throw UsageError("reciprocity polynomials need a field with a");
  const LaurentPoly g = g_recursive(beta, base_field(cfg));
  const Scalar a = cfg.a();
  const std::size_t n = alpha.size();
  Scalar num;
  Scalar den;
  if (is_qt_family(cfg.variant())) {
    num = g.evaluate(scaled(a, tilde(alpha, cfg).coords));
    den = g.evaluate(scaled(a, tau(n, cfg)));
  } else {
    num = g.evaluate(shifted(a, tilde(alpha, cfg).coords));
    den = g.evaluate(shifted(a, rho(n, cfg)));
  }
  if (den.is_zero()) {
    throw SpecializationCollision("G" + beta.to_string() + " vanishes at the base point for a = " + a.to_string());
  }
  return num / den;
}

namespace {

struct NodeInverseCache {
  std::shared_mutex mutex;
  std::map<std::string, std::pair<std::vector<Monomial>, ScalarMatrix>> entries;
};

NodeInverseCache& node_inverse_cache() {
  static NodeInverseCache cache;
  return cache;
}

// Inverse of the (a-independent) matrix of monomials |gamma| <= m at the
// reciprocity nodes |beta| <= m.
std::pair<std::vector<Monomial>, ScalarMatrix> node_inverse(std::size_t n, int m, const FieldConfig& cfg) {
  const FieldConfig base = base_field(cfg);
  const std::string key = std::to_string(n) + "|" + std::to_string(m) + "|" + base.key();
  auto& cache = node_inverse_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  const auto comps = enumerate_compositions(n, m);
  std::vector<Monomial> mons;
  ScalarMatrix a;
  for (const auto& beta : comps) {
    mons.push_back(to_monomial(beta));
    PowerTable powers(reciprocity_node(beta, base), m);
    std::vector<Scalar> row;
    for (const auto& gamma : comps) row.push_back(powers.monomial(to_monomial(gamma)));
    a.push_back(std::move(row));
  }
  auto inv = invert_exact(a);
  if (!inv) throw SpecializationCollision("reciprocity nodes of degree <= " + std::to_string(m) + " are not unisolvent");
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace(key, std::move(mons), std::move(*inv)).first->second;
}

}  // namespace

LaurentPoly reciprocity_poly(const Composition& alpha, const FieldConfig& cfg) {
  if (!has_a(cfg.variant())) throw UsageError("reciprocity polynomials need a field with a");
  return PolyCache::global().get_or_compute({Family::O, alpha, cfg}, [&] {
    const std::size_t n = alpha.size();
    const int m = alpha.degree();
    const auto [mons, inv] = node_inverse(n, m, cfg);
    const auto comps = enumerate_compositions(n, m);
    std::vector<Scalar> values;
    values.reserve(comps.size());
    for (const auto& beta : comps) values.push_back(reciprocity_target(alpha, beta, cfg));
    LaurentPoly out(n);
    for (std::size_t k = 0; k < mons.size(); ++k) {
      Scalar c;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (!inv[k][j].is_zero() && !values[j].is_zero()) c += inv[k][j] * values[j];
      }
      out.add_term(mons[k], c);
    }
    return out;
  });
}

// ----------------------------------------------------------- closed forms

Scalar closed_d(const Composition& alpha, const FieldConfig& cfg) {
  Scalar out(1);
  if (is_qt_family(cfg.variant())) {
    const Scalar q = cfg.q(), t = cfg.t();
    for (const auto& s : diagram_stats(alpha)) out *= Scalar(1) - q.pow(s.arm + 1) * t.pow(s.leg + 1);
  } else {
    const Scalar r = cfg.r();
    for (const auto& s : diagram_stats(alpha)) out *= Scalar(s.arm + 1) + r * Scalar(s.leg + 1);
  }
  return out;
}

Scalar closed_e(const Composition& alpha, const FieldConfig& cfg) {
  Scalar out(1);
  const long n = static_cast<long>(alpha.size());
  if (is_qt_family(cfg.variant())) {
    const Scalar q = cfg.q(), t = cfg.t();
    const Scalar head = t.pow(static_cast<int>(1 - n));
    for (const auto& s : diagram_stats(alpha)) out *= head - q.pow(s.coarm + 1) * t.pow(1 - s.coleg);
  } else {
    const Scalar r = cfg.r();
    for (const auto& s : diagram_stats(alpha)) out *= Scalar(s.coarm + 1) + r * Scalar(n - s.coleg);
  }
  return out;
}

Scalar closed_phi(const Composition& alpha, const FieldConfig& cfg, const Scalar& a_value) {
  Scalar out(1);
  if (is_qt_family(cfg.variant())) {
    const Scalar q = cfg.q(), t = cfg.t();
    for (const auto& s : diagram_stats(alpha)) out *= a_value * t.pow(s.coleg) - q.pow(s.coarm);
  } else {
    const Scalar r = cfg.r();
    for (const auto& s : diagram_stats(alpha)) out *= a_value - Scalar(s.coarm) + r * Scalar(s.coleg);
  }
  return out;
}

// -------------------------------------------------------------- binomials

Scalar binom(const Composition& alpha, const Composition& beta, const FieldConfig& cfg) {
  if (alpha.size() != beta.size()) throw DimensionError("binomial coefficient needs equal lengths");
  const FieldConfig base = base_field(cfg);
  const LaurentPoly g = g_recursive(beta, base);
  const Scalar den = g.evaluate(point_of(beta, base));
  if (den.is_zero()) throw DivisionByZero("G" + beta.to_string() + " vanishes at its own spectral point");
  return g.evaluate(point_of(alpha, base)) / den;
}

Scalar binom_reciprocal_by_substitution(const Composition& alpha, const Composition& beta, const FieldConfig& cfg) {
  if (!is_qt_family(cfg.variant()) || cfg.mode() != FieldMode::Symbolic) {
    throw UsageError("reciprocal substitution needs a symbolic (q,t) field");
  }
  return binom(alpha, beta, cfg.with_inverted_parameters(false)).with_reciprocal_qt();
}

Scalar binom_sym(const Composition& lambda, const Composition& mu, const FieldConfig& cfg) {
  if (lambda.size() != mu.size()) throw DimensionError("binomial coefficient needs equal lengths");
  const FieldConfig base = base_field(cfg);
  const LaurentPoly rmu = r_sym(mu, base);
  const Scalar den = rmu.evaluate(point_of(mu, base));
  if (den.is_zero()) throw DivisionByZero("R" + mu.to_string() + " vanishes at its own spectral point");
  return rmu.evaluate(point_of(lambda, base)) / den;
}

// -------------------------------------------------------------- preflight

void preflight(const FieldConfig& cfg, std::size_t n, int degree) {
  if (cfg.mode() == FieldMode::Symbolic) return;
  const FieldConfig base = base_field(cfg);
  const auto comps = enumerate_compositions(n, degree);
  auto check_distinct = [&](const char* label, auto point_fn) {
    std::map<std::vector<std::string>, Composition> seen;
    for (const auto& beta : comps) {
      std::vector<std::string> key;
      for (const auto& x : point_fn(beta)) key.push_back(x.to_string());
      auto [it, inserted] = seen.try_emplace(key, beta);
      if (!inserted) {
        throw SpecializationCollision(std::string(label) + " points of " + it->second.to_string() + " and " +
                                      beta.to_string() + " coincide under " + cfg.key());
      }
    }
  };
  check_distinct("spectral", [&](const Composition& b) { return point_of(b, base); });
  check_distinct("tilde", [&](const Composition& b) { return tilde(b, base).coords; });
  if (is_qt_family(base.variant())) {
    for (Generator g : {Generator::q, Generator::t}) {
      const BigRational& v = base.assignments().at(g);
      if (v == 0 || v == 1 || v == -1) {
        throw SpecializationCollision(std::string(generator_name(g)) + " = " + v.get_str() +
                                      " is degenerate for (q,t) interpolation");
      }
    }
  }
  for (const auto& beta : comps) {
    if (closed_d(beta, base).is_zero()) {
      throw SpecializationCollision("normalizing factor d vanishes for alpha = " + beta.to_string() + " under " +
                                    cfg.key());
    }
  }
}

void preflight_a(const FieldConfig& cfg, std::size_t n, int degree) {
  if (cfg.mode() == FieldMode::Symbolic || !has_a(cfg.variant())) return;
  const Scalar a = cfg.a();
  if (a.is_zero()) throw SpecializationCollision("a = 0 is degenerate");
  const FieldConfig base = base_field(cfg);
  for (int coarm = 0; coarm < std::max(degree, 1); ++coarm) {
    for (long coleg = 0; coleg < static_cast<long>(n); ++coleg) {
      Scalar root;
      if (is_qt_family(base.variant())) {
        root = base.q().pow(coarm) * base.t().pow(static_cast<int>(-coleg));
      } else {
        root = Scalar(coarm) - base.r() * Scalar(coleg);
      }
      if (root == a) {
        throw SpecializationCollision("a = " + a.to_string() + " is a root of phi (coarm " + std::to_string(coarm) +
                                      ", coleg " + std::to_string(coleg) + ")");
      }
    }
  }
}

ParameterSampler::ParameterSampler(std::uint64_t seed) : state_(seed) {}

BigRational ParameterSampler::next() {
  std::mt19937_64 gen(state_);
  const std::uint64_t x = gen();
  state_ = gen();
  const long num = static_cast<long>(x % 61) - 30;
  const long den = static_cast<long>((x >> 32) % 13) + 1;
  BigRational v(num == 0 ? 31 : num, den);
  v.canonicalize();
  return v;
}

}  // namespace macdonald
