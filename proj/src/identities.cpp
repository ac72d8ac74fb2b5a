#include "macdonald/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "macdonald/errors.hpp"
#include "macdonald/interpolation.hpp"
#include "macdonald/operators.hpp"

namespace macdonald {

namespace {

const std::vector<CheckInfo> kCatalog = {
    {"hecke-quadratic", "(H_i - t)(H_i + 1) f = 0 on every monomial of degree <= d", "Hecke quadratic relation",
     CheckVariant::QT},
    {"hecke-braid", "H_i H_{i+1} H_i = H_{i+1} H_i H_{i+1}, H_i H_j = H_j H_i for |i-j| > 1", "Hecke braid relations",
     CheckVariant::QT},
    {"sigma-braid", "sigma_i^2 = 1 and the braid relations for sigma_i", "Jack-limit S_n representation",
     CheckVariant::R},
    {"eigen-qt", "Xi_i G_alpha = abar_i^{-1} G_alpha", "Cherednik eigen-equations", CheckVariant::QT},
    {"eigen-r", "Xi~_i G_alpha(x;r) = abar_i(r) G_alpha(x;r)", "limit Cherednik eigen-equations", CheckVariant::R},
    {"discr-qt", "Phi and H_i evaluated at a vbar in terms of f at a vbar#, a vbar, a (s_i v)bar",
     "operator evaluation identities", CheckVariant::QT},
    {"discr-r", "Phi~ and sigma_i evaluated at a + vbar(r)", "limit operator evaluation identities",
     CheckVariant::R},
    {"recur-oracle-qt", "recursive G_alpha equals the linear-solve G_alpha, every recursion path",
     "Phi / Hecke recursion", CheckVariant::QT},
    {"recur-oracle-r", "recursive G_alpha(x;r) equals the linear-solve G_alpha(x;r), every recursion path",
     "Phi~ / sigma recursion", CheckVariant::R},
    {"vanish-extra", "G_alpha(betabar) = 0 unless alpha is contained in beta, |beta| <= d + 1",
     "extra vanishing", CheckVariant::QT},
    {"spectral-closed-form", "abar_i = q^{alpha_i} t^{-k_i}", "spectral vector closed form", CheckVariant::QT},
    {"eval-qt", "d_alpha G_alpha(a tau) = e_alpha phi_alpha(a)", "evaluation formula", CheckVariant::QT},
    {"eval-r", "d_alpha(r) G_alpha(a + rho; r) = e_alpha(r) phi_alpha(a; r)", "Jack evaluation formula",
     CheckVariant::R},
    {"inva", "d_{w alpha} G_{w alpha}(a tau) = d_alpha G_alpha(a tau)", "S_n invariance of the evaluation",
     CheckVariant::QT},
    {"zerosp", "d_alpha G_alpha(0) = e_alpha phi_alpha(0) = e_alpha prod(-q^{a'(s)})", "evaluation at zero",
     CheckVariant::QT},
    {"derecur", "ratios d_alpha/d_alpha#, e_alpha/e_alpha#, phi_alpha(0)/phi_alpha#(0), Hecke step, S_n invariance",
     "scalar recursions", CheckVariant::QT},
    {"derecur2", "d_alpha(r)/d_alpha#(r) = rn + abar_n(r) = e_alpha(r)/e_alpha#(r), sigma step, S_n invariance",
     "Jack scalar recursions", CheckVariant::R},
    {"oko-qt", "O_alpha(betabar^{-1}) G_beta(a tau) = G_beta(a alpha~) for |beta| <= |alpha| + 2",
     "reciprocity", CheckVariant::QT},
    {"oko-r", "O_alpha(betabar(r)) G_beta(a + rho) = G_beta(a + alpha~(r)) for |beta| <= |alpha| + 2",
     "Jack reciprocity", CheckVariant::R},
    {"binom-qt", "G_alpha(ax)/G_alpha(a tau) = sum a^|beta| [alpha beta]_{1/q,1/t} G'_beta(x)/G_beta(a tau)",
     "binomial formula", CheckVariant::QT},
    {"binom-r", "G_alpha(a+x)/G_alpha(a+rho) = sum [alpha beta]_r G'_beta(x)/G_beta(a+rho)",
     "Jack binomial formula", CheckVariant::R},
    {"binom-sym-r", "R_lambda(a+x)/R_lambda(a+rho) = sum (lambda mu)_r R'_mu(x)/R_mu(a+rho)",
     "symmetric Jack binomial formula", CheckVariant::R},
    {"cor-first", "G_alpha(x)/G_alpha(0) = sum [alpha beta]_{1/q,1/t} E_beta(x)/G_beta(0)",
     "binomial formula as a -> 0", CheckVariant::QT},
    {"cor-gprime", "E_alpha(x)/E_alpha(tau) = sum [alpha beta]_{1/q,1/t} G'_beta(x)/E_beta(tau)",
     "binomial formula as a -> infinity", CheckVariant::QT},
    {"cor-las", "E_alpha(1+x;r)/E_alpha(1;r) = sum [alpha beta]_r E_beta(x;r)/E_beta(1;r)",
     "Jack binomial formula as a -> infinity", CheckVariant::R},
    {"cor-plus", "sigma(w_o) G_alpha(a+x)/G_alpha(a+rho) = sum [alpha beta]_r w_o G+_beta(x)/G_beta(a+rho)",
     "binomial formula for G+", CheckVariant::R},
    {"cor-rel", "sum over beta+ = mu of [alpha beta]_r = (lambda mu)_r for alpha+ = lambda",
     "nonsymmetric to symmetric binomials", CheckVariant::R},
    {"relate", "G'_alpha(x;r) = (-1)^|alpha| sigma(w_o) w_o G_alpha(-x-(n-1)r; r)", "G' from G",
     CheckVariant::R},
    {"relate2", "R'_lambda(x;r) = (-1)^|lambda| R_lambda(-x-(n-1)r; r)", "R' from R", CheckVariant::R},
    {"dom", "w_{-w_o beta} = w_o w_beta w_o and -w_o beta~ = betabar + (n-1)r", "tilde points",
     CheckVariant::R},
    {"sym-lemma", "S f is symmetric, sigma_i S = S and S sigma_i = S", "symmetrizer", CheckVariant::R},
    {"symm-lemma", "S G_alpha(a+x)/G_alpha(a+rho) = R_lambda(a+x)/R_lambda(a+rho) and S G'_alpha/G_alpha(a+rho) = "
     "R'_lambda/R_lambda(a+rho)",
     "symmetrizing G and G'", CheckVariant::R},
    {"sym-binomial-OO", "P_lambda(1+x)/P_lambda(1) = sum (lambda mu)_r P_mu(x)/P_mu(1), P_mu = top part of R_mu",
     "shifted Jack binomial formula", CheckVariant::R},
    {"jack-eval-one", "d_alpha(r) E_alpha(1;r) = e_alpha(r)", "Jack evaluation at 1", CheckVariant::R},
    {"binom-sum-support", "[alpha beta] = 0 unless beta is contained in alpha", "support of binomial coefficients",
     CheckVariant::Both},
};

// ------------------------------------------------------------ context

class Ctx {
 public:
  Ctx(const CheckOptions& opts, CheckReport& report) : opts_(opts), report_(report), sampler_(opts.seed) {}

  std::size_t n() const { return opts_.n; }
  int d() const { return opts_.degree; }

  FieldConfig qt() {
    FieldConfig cfg = opts_.symbolic ? FieldConfig::symbolic(Variant::QT)
                                     : FieldConfig::specialized(Variant::QT, {{Generator::q, value_or(Generator::q, 2)},
                                                                              {Generator::t, value_or(Generator::t, 3)}});
    return use(cfg);
  }

  FieldConfig r() {
    auto it = opts_.values.find(Generator::r);
    FieldConfig cfg = (opts_.symbolic || it == opts_.values.end())
                          ? FieldConfig::symbolic(Variant::R)
                          : FieldConfig::specialized(Variant::R, {{Generator::r, it->second}});
    return use(cfg);
  }

  /// Fields with a adjoined that certify an identity whose a-degree is at
  /// most `degree_bound`.
  std::vector<FieldConfig> with_a(const FieldConfig& base, int degree_bound) {
    if (base.mode() == FieldMode::Symbolic) {
      certify("symbolic");
      return {base.with_a(std::nullopt)};
    }
    if (auto it = opts_.values.find(Generator::a); it != opts_.values.end()) {
      FieldConfig cfg = base.with_a(it->second);
      preflight_a(cfg, n(), d() + 2);
      certify("fixed");
      return {cfg};
    }
    certify("sampled(k = degree bound + 2)");
    const std::size_t k = static_cast<std::size_t>(degree_bound) + 2;
    auto& pool = pools_[base.key()];
    std::size_t attempts = 0;
    while (pool.size() < k) {
      if (++attempts > 100000) throw InvariantViolation("could not sample enough admissible values of a");
      BigRational v = sampler_.next();
      if (v == 0 || v == 1 || v == -1) continue;
      if (std::find(pool.begin(), pool.end(), v) != pool.end()) continue;
      try {
        preflight_a(base.with_a(v), n(), d() + 2);
      } catch (const SpecializationCollision&) {
        continue;
      }
      pool.push_back(v);
    }
    std::vector<FieldConfig> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(base.with_a(pool[i]));
    return out;
  }

  /// Runs one instance; errors other than collisions and usage errors count
  /// as failures of that instance.
  void instance(const std::string& label, const std::function<void()>& body) {
    ++report_.instances;
    label_ = label;
    try {
      body();
    } catch (const SpecializationCollision&) {
      throw;
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      fail("error", e.what(), "");
    }
  }

  void expect(const LaurentPoly& lhs, const LaurentPoly& rhs, const std::string& what = {}) {
    if (!(lhs == rhs)) fail(what, lhs.to_string(), rhs.to_string());
  }
  void expect(const Scalar& lhs, const Scalar& rhs, const std::string& what = {}) {
    if (!(lhs == rhs)) fail(what, lhs.to_string(), rhs.to_string());
  }
  void expect_true(bool ok, const std::string& what) {
    if (!ok) fail(what, "false", "true");
  }

 private:
  BigRational value_or(Generator g, long fallback) const {
    auto it = opts_.values.find(g);
    return it == opts_.values.end() ? BigRational(fallback) : it->second;
  }

  FieldConfig use(const FieldConfig& cfg) {
    if (cfg.mode() == FieldMode::Specialized) preflight(cfg, n(), d() + 2);
    const std::string key = cfg.key();
    if (std::find(report_.fields.begin(), report_.fields.end(), key) == report_.fields.end()) {
      report_.fields.push_back(key);
    }
    return cfg;
  }

  void certify(const std::string& mode) { report_.certification = mode; }

  void fail(const std::string& what, std::string lhs, std::string rhs) {
    report_.failures.push_back({what.empty() ? label_ : label_ + " " + what, std::move(lhs), std::move(rhs)});
  }

  const CheckOptions& opts_;
  CheckReport& report_;
  ParameterSampler sampler_;
  std::map<std::string, std::vector<BigRational>> pools_;
  std::string label_;
};

// ------------------------------------------------------------ helpers

std::vector<Composition> comps(const Ctx& c) { return enumerate_compositions(c.n(), c.d()); }
std::vector<Composition> parts(const Ctx& c) { return enumerate_partitions(c.n(), c.d()); }

LaurentPoly mono(const Composition& g) { return LaurentPoly::monomial(g.entries(), Scalar(1)); }

std::vector<Scalar> ones(std::size_t n) { return std::vector<Scalar>(n, Scalar(1)); }
std::vector<Scalar> zeros(std::size_t n) { return std::vector<Scalar>(n, Scalar(0)); }

std::vector<Scalar> bar(const IntVector& v, const FieldConfig& cfg) { return spectral(v, cfg).coords; }
std::vector<Scalar> bar(const Composition& v, const FieldConfig& cfg) { return bar(v.as_vector(), cfg); }

std::string label(const char* name, const Composition& c) { return std::string(name) + "=" + c.to_string(); }
std::string label(const char* name, const IntVector& c) { return std::string(name) + "=" + c.to_string(); }

int sum_degrees(const std::vector<Composition>& cs) {
  int s = 0;
  for (const auto& c : cs) s += c.degree();
  return s;
}

// Test vectors for the evaluation identities: entries in [-1, 2].
std::vector<IntVector> test_vectors(std::size_t n) {
  std::vector<IntVector> out;
  std::vector<int> v(n, -1);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == 2) v[i++] = -1;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

std::vector<Composition> contained_in(const Composition& alpha) {
  std::vector<Composition> out;
  for (const auto& beta : enumerate_compositions(alpha.size(), alpha.degree())) {
    if (contains(alpha, beta)) out.push_back(beta);
  }
  return out;
}

std::vector<Composition> partitions_in(const Composition& lambda) {
  std::vector<Composition> out;
  for (const auto& mu : enumerate_partitions(lambda.size(), lambda.degree())) {
    if (contains(lambda, mu)) out.push_back(mu);
  }
  return out;
}

Scalar product_of(const std::vector<Scalar>& xs) {
  Scalar out(1);
  for (const auto& x : xs) out *= x;
  return out;
}

LaurentPoly negate_shift(const LaurentPoly& f, const FieldConfig& cfg) {
  // f(-x - (n-1) r)
  const std::size_t n = f.num_vars();
  auto images = identity_images(n);
  for (auto& img : images) {
    img.scale = Scalar(-1);
    img.offset = -Scalar(static_cast<long>(n - 1)) * cfg.r();
  }
  return f.affine_substitute(images);
}

// ------------------------------------------------------------ operators

void hecke_quadratic(Ctx& c) {
  const FieldConfig cfg = c.qt();
  for (const auto& g : comps(c)) {
    for (std::size_t i = 1; i < c.n(); ++i) {
      c.instance(("f=x^" + g.to_string()) + " i=" + std::to_string(i), [&] {
        const LaurentPoly f = mono(g);
        const LaurentPoly h = hecke(i, f, cfg) + f;
        c.expect(hecke(i, h, cfg) - h * cfg.t(), LaurentPoly(c.n()));
      });
    }
  }
}

template <typename Op>
void braid_relations(Ctx& c, const Op& op) {
  for (const auto& g : comps(c)) {
    const LaurentPoly f = mono(g);
    for (std::size_t i = 1; i + 1 < c.n(); ++i) {
      c.instance(("f=x^" + g.to_string()) + " i=" + std::to_string(i), [&] {
        c.expect(op(i, op(i + 1, op(i, f))), op(i + 1, op(i, op(i + 1, f))));
      });
    }
    for (std::size_t i = 1; i < c.n(); ++i) {
      for (std::size_t j = i + 2; j < c.n(); ++j) {
        c.instance(("f=x^" + g.to_string()) + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                   [&] { c.expect(op(i, op(j, f)), op(j, op(i, f))); });
      }
    }
  }
}

void hecke_braid(Ctx& c) {
  const FieldConfig cfg = c.qt();
  braid_relations(c, [&](std::size_t i, const LaurentPoly& f) { return hecke(i, f, cfg); });
}

void sigma_braid(Ctx& c) {
  const FieldConfig cfg = c.r();
  auto op = [&](std::size_t i, const LaurentPoly& f) { return sigma_op(i, f, cfg); };
  for (const auto& g : comps(c)) {
    for (std::size_t i = 1; i < c.n(); ++i) {
      c.instance(("f=x^" + g.to_string()) + " i=" + std::to_string(i) + " square", [&] {
        const LaurentPoly f = mono(g);
        c.expect(op(i, op(i, f)), f);
      });
    }
  }
  braid_relations(c, op);
}

void eigen_qt(Ctx& c) {
  const FieldConfig cfg = c.qt();
  for (const auto& alpha : comps(c)) {
    const LaurentPoly g = g_recursive(alpha, cfg);
    const auto b = bar(alpha, cfg);
    for (std::size_t i = 1; i <= c.n(); ++i) {
      c.instance(label("alpha", alpha) + " i=" + std::to_string(i),
                 [&] { c.expect(xi_qt(i, g, cfg), g * b[i - 1].inverse()); });
    }
  }
}

void eigen_r(Ctx& c) {
  const FieldConfig cfg = c.r();
  for (const auto& alpha : comps(c)) {
    const LaurentPoly g = g_recursive(alpha, cfg);
    const auto b = bar(alpha, cfg);
    for (std::size_t i = 1; i <= c.n(); ++i) {
      c.instance(label("alpha", alpha) + " i=" + std::to_string(i),
                 [&] { c.expect(xi_r(i, g, cfg), g * b[i - 1]); });
    }
  }
}

void discr_qt(Ctx& c) {
  const FieldConfig base = c.qt();
  const std::size_t n = c.n();
  const Scalar t = base.t();
  const Scalar head = t.pow(1 - static_cast<int>(n));
  const auto vectors = test_vectors(n);
  for (const auto& g : comps(c)) {
    const LaurentPoly f = mono(g);
    const LaurentPoly phi_f = phi_qt(f, base);
    std::vector<LaurentPoly> h_f;
    for (std::size_t i = 1; i < n; ++i) h_f.push_back(hecke(i, f, base));
    const auto fields = c.with_a(base, g.degree() + 1);
    for (const auto& v : vectors) {
      c.instance(("f=x^" + g.to_string()) + " " + label("v", v), [&] {
        const auto vb = bar(v, base);
        const auto vb_sharp = bar(shift_sharp(v), base);
        for (const auto& cfg : fields) {
          const Scalar a = cfg.a();
          const auto at = scaled(a, vb);
          c.expect(phi_f.evaluate(at), (a * vb[n - 1] - head) * f.evaluate(scaled(a, vb_sharp)), "Phi");
          for (std::size_t i = 1; i < n; ++i) {
            const Scalar& u = vb[i - 1];
            const Scalar& w = vb[i];
            const auto swapped = bar(Permutation::simple(n, i).act(v), base);
            const Scalar rhs = (t - Scalar(1)) * u / (u - w) * f.evaluate(at) +
                               (u - t * w) / (u - w) * f.evaluate(scaled(a, swapped));
            c.expect(h_f[i - 1].evaluate(at), rhs, "H_" + std::to_string(i));
          }
        }
      });
    }
  }
}

void discr_r(Ctx& c) {
  const FieldConfig base = c.r();
  const std::size_t n = c.n();
  const Scalar r = base.r();
  const auto vectors = test_vectors(n);
  for (const auto& g : comps(c)) {
    const LaurentPoly f = mono(g);
    const LaurentPoly phi_f = phi_r(f, base);
    std::vector<LaurentPoly> s_f;
    for (std::size_t i = 1; i < n; ++i) s_f.push_back(sigma_op(i, f, base));
    const auto fields = c.with_a(base, g.degree() + 1);
    for (const auto& v : vectors) {
      c.instance(("f=x^" + g.to_string()) + " " + label("v", v), [&] {
        const auto vb = bar(v, base);
        const auto vb_sharp = bar(shift_sharp(v), base);
        for (const auto& cfg : fields) {
          const Scalar a = cfg.a();
          const auto at = shifted(a, vb);
          const Scalar factor = a + vb[n - 1] + Scalar(static_cast<long>(n) - 1) * r;
          c.expect(phi_f.evaluate(at), factor * f.evaluate(shifted(a, vb_sharp)), "Phi~");
          for (std::size_t i = 1; i < n; ++i) {
            const Scalar diff = vb[i - 1] - vb[i];
            const auto swapped = bar(Permutation::simple(n, i).act(v), base);
            const Scalar rhs = r / diff * f.evaluate(at) + (diff - r) / diff * f.evaluate(shifted(a, swapped));
            c.expect(s_f[i - 1].evaluate(at), rhs, "sigma_" + std::to_string(i));
          }
        }
      });
    }
  }
}

// ---------------------------------------------------------- recursion

void recur_oracle(Ctx& c, const FieldConfig& cfg) {
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, cfg);
      c.expect(g, g_oracle(alpha, cfg), "oracle");
      for (std::size_t i : descents(alpha)) c.expect(g_via_descent(alpha, i, cfg), g, "descent " + std::to_string(i));
      if (alpha[alpha.size() - 1] > 0) c.expect(g_via_phi(alpha, cfg), g, "Phi step");
      c.expect(g.coefficient(alpha.entries()), Scalar(1), "leading coefficient");
      c.expect_true(g.total_degree() <= alpha.degree(), "degree bound");
      for (const auto& beta : enumerate_compositions(c.n(), alpha.degree())) {
        if (beta != alpha) c.expect(g.evaluate(bar(beta, cfg)), Scalar(0), label("vanishing at", beta));
      }
    });
  }
}

void recur_oracle_qt(Ctx& c) { recur_oracle(c, c.qt()); }
void recur_oracle_r(Ctx& c) { recur_oracle(c, c.r()); }

void vanish_extra(Ctx& c) {
  const FieldConfig cfg = c.qt();
  const auto betas = enumerate_compositions(c.n(), c.d() + 1);
  for (const auto& alpha : comps(c)) {
    const LaurentPoly g = g_recursive(alpha, cfg);
    for (const auto& beta : betas) {
      if (beta == alpha || contains(beta, alpha)) continue;
      c.instance(label("alpha", alpha) + " " + label("beta", beta),
                 [&] { c.expect(g.evaluate(bar(beta, cfg)), Scalar(0)); });
    }
  }
}

void spectral_closed_form(Ctx& c) {
  const FieldConfig cfg = c.qt();
  const std::size_t n = c.n();
  std::vector<IntVector> vectors;
  for (const auto& alpha : comps(c)) {
    vectors.push_back(alpha.as_vector());
    vectors.push_back(Permutation::longest(n).act(alpha.as_vector()).negated());
  }
  for (const auto& v : vectors) {
    c.instance(label("v", v), [&] {
      const auto b = bar(v, cfg);
      const auto k = spectral_rank(v);
      for (std::size_t i = 0; i < n; ++i) {
        c.expect(b[i], cfg.q().pow(v[i]) * cfg.t().pow(-k[i]), "coordinate " + std::to_string(i + 1));
      }
    });
  }
}

// --------------------------------------------------------- evaluation

void eval_qt(Ctx& c) {
  const FieldConfig base = c.qt();
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      const Scalar dd = closed_d(alpha, base);
      const Scalar ee = closed_e(alpha, base);
      for (const auto& cfg : c.with_a(base, alpha.degree())) {
        const Scalar a = cfg.a();
        c.expect(dd * g.evaluate(scaled(a, tau(c.n(), base))), ee * closed_phi(alpha, base, a), "a=" + a.to_string());
      }
    });
  }
}

void eval_r(Ctx& c) {
  const FieldConfig base = c.r();
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      const Scalar dd = closed_d(alpha, base);
      const Scalar ee = closed_e(alpha, base);
      for (const auto& cfg : c.with_a(base, alpha.degree())) {
        const Scalar a = cfg.a();
        c.expect(dd * g.evaluate(shifted(a, rho(c.n(), base))), ee * closed_phi(alpha, base, a), "a=" + a.to_string());
      }
    });
  }
}

void inva(Ctx& c) {
  const FieldConfig base = c.qt();
  const auto t0 = tau(c.n(), base);
  const auto perms = Permutation::all(c.n());
  for (const auto& alpha : comps(c)) {
    const auto fields = c.with_a(base, alpha.degree());
    for (const auto& w : perms) {
      const Composition walpha = w.act(alpha);
      c.instance(label("alpha", alpha) + " w=" + w.to_string(), [&] {
        const LaurentPoly g = g_recursive(alpha, base);
        const LaurentPoly gw = g_recursive(walpha, base);
        for (const auto& cfg : fields) {
          const auto at = scaled(cfg.a(), t0);
          c.expect(closed_d(walpha, base) * gw.evaluate(at), closed_d(alpha, base) * g.evaluate(at),
                   "a=" + cfg.a().to_string());
        }
      });
    }
  }
}

void zerosp(Ctx& c) {
  const FieldConfig cfg = c.qt();
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const Scalar phi0 = closed_phi(alpha, cfg, Scalar(0));
      c.expect(closed_d(alpha, cfg) * g_recursive(alpha, cfg).evaluate(zeros(c.n())), closed_e(alpha, cfg) * phi0);
      Scalar prod(1);
      for (const auto& s : diagram_stats(alpha)) prod *= -cfg.q().pow(s.coarm);
      c.expect(phi0, prod, "phi(0) product");
    });
  }
}

void derecur(Ctx& c) {
  const FieldConfig cfg = c.qt();
  const std::size_t n = c.n();
  const Scalar q = cfg.q(), t = cfg.t();
  const Scalar a = Scalar::generator(Generator::a);
  const auto perms = Permutation::all(n);
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const auto b = bar(alpha, cfg);
      const int last = alpha[n - 1];
      if (last > 0) {
        const Composition s = shift_sharp(alpha);
        c.expect(closed_d(alpha, cfg), closed_d(s, cfg) * (Scalar(1) - t.pow(static_cast<int>(n)) * b[n - 1]), "d ratio");
        c.expect(closed_e(alpha, cfg), closed_e(s, cfg) * (t.pow(1 - static_cast<int>(n)) - t * b[n - 1]), "e ratio");
        c.expect(closed_phi(alpha, cfg, Scalar(0)), -q.pow(last - 1) * closed_phi(s, cfg, Scalar(0)), "phi(0) ratio");
      }
      for (std::size_t i : descents(alpha)) {
        const Scalar ratio = b[i - 1] / b[i];
        const Composition swapped = Permutation::simple(n, i).act(alpha);
        c.expect(closed_d(alpha, cfg) * (Scalar(1) - t * ratio), (Scalar(1) - ratio) * closed_d(swapped, cfg),
                 "Hecke step at " + std::to_string(i));
      }
      for (const auto& w : perms) {
        const Composition walpha = w.act(alpha);
        c.expect(closed_e(walpha, cfg), closed_e(alpha, cfg), "e invariance w=" + w.to_string());
        c.expect(closed_phi(walpha, cfg, a), closed_phi(alpha, cfg, a), "phi invariance w=" + w.to_string());
      }
    });
  }
}

void derecur2(Ctx& c) {
  const FieldConfig cfg = c.r();
  const std::size_t n = c.n();
  const Scalar r = cfg.r();
  const Scalar a = Scalar::generator(Generator::a);
  const auto perms = Permutation::all(n);
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const auto b = bar(alpha, cfg);
      if (alpha[n - 1] > 0) {
        const Composition s = shift_sharp(alpha);
        const Scalar ratio = r * Scalar(static_cast<long>(n)) + b[n - 1];
        c.expect(closed_d(alpha, cfg), closed_d(s, cfg) * ratio, "d ratio");
        c.expect(closed_e(alpha, cfg), closed_e(s, cfg) * ratio, "e ratio");
      }
      for (std::size_t i : descents(alpha)) {
        const Scalar dd = b[i - 1] - b[i];
        const Composition swapped = Permutation::simple(n, i).act(alpha);
        c.expect(closed_d(alpha, cfg) * (dd + r), dd * closed_d(swapped, cfg), "sigma step at " + std::to_string(i));
      }
      for (const auto& w : perms) {
        const Composition walpha = w.act(alpha);
        c.expect(closed_e(walpha, cfg), closed_e(alpha, cfg), "e invariance w=" + w.to_string());
        c.expect(closed_phi(walpha, cfg, a), closed_phi(alpha, cfg, a), "phi invariance w=" + w.to_string());
      }
    });
  }
}

// --------------------------------------------------------- reciprocity

void oko(Ctx& c, const FieldConfig& base) {
  const bool qt = is_qt_family(base.variant());
  const std::size_t n = c.n();
  for (const auto& alpha : comps(c)) {
    const auto betas = enumerate_compositions(n, alpha.degree() + 2);
    const int bound = sum_degrees(enumerate_compositions(n, alpha.degree())) + alpha.degree() + 2;
    const auto fields = c.with_a(base, bound);
    c.instance(label("alpha", alpha) + " degree", [&] {
      for (const auto& cfg : fields) {
        c.expect_true(reciprocity_poly(alpha, cfg).total_degree() <= alpha.degree(), "a=" + cfg.a().to_string());
      }
    });
    for (const auto& beta : betas) {
      c.instance(label("alpha", alpha) + " " + label("beta", beta), [&] {
        const LaurentPoly g = g_recursive(beta, base);
        for (const auto& cfg : fields) {
          const Scalar a = cfg.a();
          const LaurentPoly o = reciprocity_poly(alpha, cfg);
          const auto at_base = qt ? scaled(a, tau(n, cfg)) : shifted(a, rho(n, cfg));
          const auto at_alpha = qt ? scaled(a, tilde(alpha, cfg).coords) : shifted(a, tilde(alpha, cfg).coords);
          c.expect(o.evaluate(reciprocity_node(beta, cfg)) * g.evaluate(at_base), g.evaluate(at_alpha),
                   "a=" + a.to_string());
        }
      });
    }
  }
}

void oko_qt(Ctx& c) { oko(c, c.qt()); }
void oko_r(Ctx& c) { oko(c, c.r()); }

// ----------------------------------------------------------- binomials

void binom_qt(Ctx& c) {
  const FieldConfig base = c.qt();
  const FieldConfig inv = base.with_inverted_parameters(true);
  const auto t0 = tau(c.n(), base);
  for (const auto& alpha : comps(c)) {
    const auto betas = contained_in(alpha);
    const auto fields = c.with_a(base, sum_degrees(betas) + alpha.degree());
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      for (const auto& cfg : fields) {
        const Scalar a = cfg.a();
        const auto at = scaled(a, t0);
        std::vector<Scalar> denoms;
        for (const auto& beta : betas) denoms.push_back(g_recursive(beta, base).evaluate(at));
        const Scalar big_d = product_of(denoms);
        const LaurentPoly lhs = scale_vars(g, a) * (big_d / g.evaluate(at));
        LaurentPoly rhs(c.n());
        for (std::size_t k = 0; k < betas.size(); ++k) {
          const Scalar coeff = a.pow(betas[k].degree()) * binom(alpha, betas[k], inv) * (big_d / denoms[k]);
          rhs += gprime(betas[k], base) * coeff;
        }
        c.expect(lhs, rhs, "a=" + a.to_string());
      }
    });
  }
}

void binom_r(Ctx& c) {
  const FieldConfig base = c.r();
  const auto r0 = rho(c.n(), base);
  for (const auto& alpha : comps(c)) {
    const auto betas = contained_in(alpha);
    const auto fields = c.with_a(base, sum_degrees(betas) + alpha.degree());
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      for (const auto& cfg : fields) {
        const Scalar a = cfg.a();
        const auto at = shifted(a, r0);
        std::vector<Scalar> denoms;
        for (const auto& beta : betas) denoms.push_back(g_recursive(beta, base).evaluate(at));
        const Scalar big_d = product_of(denoms);
        const LaurentPoly lhs = translate_vars(g, a) * (big_d / g.evaluate(at));
        LaurentPoly rhs(c.n());
        for (std::size_t k = 0; k < betas.size(); ++k) {
          rhs += gprime(betas[k], base) * (binom(alpha, betas[k], base) * (big_d / denoms[k]));
        }
        c.expect(lhs, rhs, "a=" + a.to_string());
      }
    });
  }
}

void binom_sym_r(Ctx& c) {
  const FieldConfig base = c.r();
  const auto r0 = rho(c.n(), base);
  for (const auto& lambda : parts(c)) {
    const auto mus = partitions_in(lambda);
    const auto fields = c.with_a(base, sum_degrees(mus) + lambda.degree());
    c.instance(label("lambda", lambda), [&] {
      const LaurentPoly rl = r_sym(lambda, base);
      for (const auto& cfg : fields) {
        const Scalar a = cfg.a();
        const auto at = shifted(a, r0);
        std::vector<Scalar> denoms;
        for (const auto& mu : mus) denoms.push_back(r_sym(mu, base).evaluate(at));
        const Scalar big_d = product_of(denoms);
        const LaurentPoly lhs = translate_vars(rl, a) * (big_d / rl.evaluate(at));
        LaurentPoly rhs(c.n());
        for (std::size_t k = 0; k < mus.size(); ++k) {
          rhs += rprime_r(mus[k], base) * (binom_sym(lambda, mus[k], base) * (big_d / denoms[k]));
        }
        c.expect(lhs, rhs, "a=" + a.to_string());
      }
    });
  }
}

void cor_first(Ctx& c) {
  const FieldConfig base = c.qt();
  const FieldConfig inv = base.with_inverted_parameters(true);
  const auto origin = zeros(c.n());
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const auto betas = contained_in(alpha);
      std::vector<Scalar> denoms;
      for (const auto& beta : betas) denoms.push_back(g_recursive(beta, base).evaluate(origin));
      const Scalar big_d = product_of(denoms);
      const LaurentPoly g = g_recursive(alpha, base);
      const LaurentPoly lhs = g * (big_d / g.evaluate(origin));
      LaurentPoly rhs(c.n());
      for (std::size_t k = 0; k < betas.size(); ++k) {
        rhs += e_top(betas[k], base) * (binom(alpha, betas[k], inv) * (big_d / denoms[k]));
      }
      c.expect(lhs, rhs);
    });
  }
}

void cor_gprime(Ctx& c) {
  const FieldConfig base = c.qt();
  const FieldConfig inv = base.with_inverted_parameters(true);
  const auto t0 = tau(c.n(), base);
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const auto betas = contained_in(alpha);
      std::vector<Scalar> denoms;
      for (const auto& beta : betas) denoms.push_back(e_top(beta, base).evaluate(t0));
      const Scalar big_d = product_of(denoms);
      const LaurentPoly e = e_top(alpha, base);
      const LaurentPoly lhs = e * (big_d / e.evaluate(t0));
      LaurentPoly rhs(c.n());
      for (std::size_t k = 0; k < betas.size(); ++k) {
        rhs += gprime(betas[k], base) * (binom(alpha, betas[k], inv) * (big_d / denoms[k]));
      }
      c.expect(lhs, rhs);
    });
  }
}

void cor_las(Ctx& c) {
  const FieldConfig base = c.r();
  const auto one = ones(c.n());
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const auto betas = contained_in(alpha);
      std::vector<Scalar> denoms;
      for (const auto& beta : betas) denoms.push_back(e_top(beta, base).evaluate(one));
      const Scalar big_d = product_of(denoms);
      const LaurentPoly e = e_top(alpha, base);
      const LaurentPoly lhs = translate_vars(e, Scalar(1)) * (big_d / e.evaluate(one));
      LaurentPoly rhs(c.n());
      for (std::size_t k = 0; k < betas.size(); ++k) {
        rhs += e_top(betas[k], base) * (binom(alpha, betas[k], base) * (big_d / denoms[k]));
      }
      c.expect(lhs, rhs);
    });
  }
}

void cor_plus(Ctx& c) {
  const FieldConfig base = c.r();
  const std::size_t n = c.n();
  const auto r0 = rho(n, base);
  const Permutation wo = Permutation::longest(n);
  for (const auto& alpha : comps(c)) {
    const auto betas = contained_in(alpha);
    const auto fields = c.with_a(base, sum_degrees(betas) + alpha.degree());
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      for (const auto& cfg : fields) {
        const Scalar a = cfg.a();
        const auto at = shifted(a, r0);
        std::vector<Scalar> denoms;
        for (const auto& beta : betas) denoms.push_back(g_recursive(beta, base).evaluate(at));
        const Scalar big_d = product_of(denoms);
        const LaurentPoly lhs = sigma_word(wo, translate_vars(g, a), base) * (big_d / g.evaluate(at));
        LaurentPoly rhs(n);
        for (std::size_t k = 0; k < betas.size(); ++k) {
          rhs += gplus(betas[k], base).permute_vars(wo) * (binom(alpha, betas[k], base) * (big_d / denoms[k]));
        }
        c.expect(lhs, rhs, "a=" + a.to_string());
      }
    });
  }
}

void cor_rel(Ctx& c) {
  const FieldConfig cfg = c.r();
  for (const auto& lambda : parts(c)) {
    const auto mus = enumerate_partitions(c.n(), lambda.degree());
    for (const auto& alpha : rearrangements(lambda)) {
      c.instance(label("alpha", alpha), [&] {
        for (const auto& mu : mus) {
          Scalar sum;
          for (const auto& beta : rearrangements(mu)) sum += binom(alpha, beta, cfg);
          c.expect(sum, binom_sym(lambda, mu, cfg), label("mu", mu));
        }
      });
    }
  }
}

// ----------------------------------------------------------- Jack limit

void relate(Ctx& c) {
  const FieldConfig cfg = c.r();
  const Permutation wo = Permutation::longest(c.n());
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, cfg);
      LaurentPoly rhs = negate_shift(g, cfg).permute_vars(wo);
      rhs = sigma_word(wo, rhs, cfg);
      if (alpha.degree() % 2 != 0) rhs = -rhs;
      c.expect(gprime(alpha, cfg), rhs);
    });
  }
}

void relate2(Ctx& c) {
  const FieldConfig cfg = c.r();
  for (const auto& lambda : parts(c)) {
    c.instance(label("lambda", lambda), [&] {
      LaurentPoly rhs = negate_shift(r_sym(lambda, cfg), cfg);
      if (lambda.degree() % 2 != 0) rhs = -rhs;
      c.expect(rprime_r(lambda, cfg), rhs);
    });
  }
}

void dom(Ctx& c) {
  const FieldConfig cfg = c.r();
  const std::size_t n = c.n();
  const Permutation wo = Permutation::longest(n);
  const Scalar shift = Scalar(static_cast<long>(n) - 1) * cfg.r();
  for (const auto& beta : comps(c)) {
    c.instance(label("beta", beta), [&] {
      const IntVector flipped = wo.act(beta.as_vector()).negated();
      const Permutation lhs = dominant_sort(flipped).shortest;
      const Permutation rhs = wo * dominant_sort(beta.as_vector()).shortest * wo;
      if (!(lhs == rhs)) c.expect(Scalar(0), Scalar(1), "w: " + lhs.to_string() + " vs " + rhs.to_string());
      const auto tb = wo.act(tilde(beta, cfg).coords);
      const auto bb = bar(beta, cfg);
      for (std::size_t i = 0; i < n; ++i) c.expect(-tb[i], bb[i] + shift, "coordinate " + std::to_string(i + 1));
    });
  }
}

void sym_lemma(Ctx& c) {
  const FieldConfig cfg = c.r();
  for (const auto& g : comps(c)) {
    c.instance(("f=x^" + g.to_string()), [&] {
      const LaurentPoly f = mono(g);
      const LaurentPoly sf = symmetrize(f, cfg);
      c.expect_true(is_symmetric(sf), "symmetric");
      for (std::size_t i = 1; i < c.n(); ++i) {
        c.expect(sigma_op(i, sf, cfg), sf, "sigma_" + std::to_string(i) + " S");
        c.expect(symmetrize(sigma_op(i, f, cfg), cfg), sf, "S sigma_" + std::to_string(i));
      }
    });
  }
}

void symm_lemma(Ctx& c) {
  const FieldConfig base = c.r();
  const auto r0 = rho(c.n(), base);
  for (const auto& alpha : comps(c)) {
    const Composition lambda = dominant_rearrangement(alpha);
    const auto fields = c.with_a(base, 2 * alpha.degree());
    c.instance(label("alpha", alpha), [&] {
      const LaurentPoly g = g_recursive(alpha, base);
      const LaurentPoly rl = r_sym(lambda, base);
      const LaurentPoly sgp = symmetrize(gprime(alpha, base), base);
      const LaurentPoly rlp = rprime_r(lambda, base);
      for (const auto& cfg : fields) {
        const Scalar a = cfg.a();
        const auto at = shifted(a, r0);
        const Scalar g_at = g.evaluate(at);
        const Scalar r_at = rl.evaluate(at);
        c.expect(symmetrize(translate_vars(g, a), base) * r_at, translate_vars(rl, a) * g_at,
                 "G part a=" + a.to_string());
        c.expect(sgp * r_at, rlp * g_at, "G' part a=" + a.to_string());
      }
    });
  }
}

void sym_binomial_oo(Ctx& c) {
  const FieldConfig cfg = c.r();
  const auto one = ones(c.n());
  for (const auto& lambda : parts(c)) {
    c.instance(label("lambda", lambda), [&] {
      const auto mus = partitions_in(lambda);
      std::vector<LaurentPoly> tops;
      std::vector<Scalar> denoms;
      for (const auto& mu : mus) {
        tops.push_back(r_sym(mu, cfg).top_part(mu.degree()));
        denoms.push_back(tops.back().evaluate(one));
      }
      const Scalar big_d = product_of(denoms);
      const LaurentPoly p = r_sym(lambda, cfg).top_part(lambda.degree());
      const LaurentPoly lhs = translate_vars(p, Scalar(1)) * (big_d / p.evaluate(one));
      LaurentPoly rhs(c.n());
      for (std::size_t k = 0; k < mus.size(); ++k) {
        rhs += tops[k] * (binom_sym(lambda, mus[k], cfg) * (big_d / denoms[k]));
      }
      c.expect(lhs, rhs);
    });
  }
}

void jack_eval_one(Ctx& c) {
  const FieldConfig cfg = c.r();
  for (const auto& alpha : comps(c)) {
    c.instance(label("alpha", alpha), [&] {
      c.expect(closed_d(alpha, cfg) * e_top(alpha, cfg).evaluate(ones(c.n())), closed_e(alpha, cfg));
    });
  }
}

void binom_sum_support(Ctx& c) {
  const FieldConfig qt = c.qt();
  const FieldConfig r = c.r();
  const std::vector<std::pair<std::string, FieldConfig>> fields = {
      {"q,t", qt}, {"1/q,1/t", qt.with_inverted_parameters(true)}, {"r", r}};
  for (const auto& alpha : comps(c)) {
    for (const auto& beta : comps(c)) {
      if (contains(alpha, beta)) continue;
      c.instance(label("alpha", alpha) + " " + label("beta", beta), [&] {
        for (const auto& [name, cfg] : fields) c.expect(binom(alpha, beta, cfg), Scalar(0), name);
      });
    }
  }
}

using CheckFn = void (*)(Ctx&);

const std::map<std::string, CheckFn, std::less<>>& dispatch() {
  static const std::map<std::string, CheckFn, std::less<>> table = {
      {"hecke-quadratic", hecke_quadratic},
      {"hecke-braid", hecke_braid},
      {"sigma-braid", sigma_braid},
      {"eigen-qt", eigen_qt},
      {"eigen-r", eigen_r},
      {"discr-qt", discr_qt},
      {"discr-r", discr_r},
      {"recur-oracle-qt", recur_oracle_qt},
      {"recur-oracle-r", recur_oracle_r},
      {"vanish-extra", vanish_extra},
      {"spectral-closed-form", spectral_closed_form},
      {"eval-qt", eval_qt},
      {"eval-r", eval_r},
      {"inva", inva},
      {"zerosp", zerosp},
      {"derecur", derecur},
      {"derecur2", derecur2},
      {"oko-qt", oko_qt},
      {"oko-r", oko_r},
      {"binom-qt", binom_qt},
      {"binom-r", binom_r},
      {"binom-sym-r", binom_sym_r},
      {"cor-first", cor_first},
      {"cor-gprime", cor_gprime},
      {"cor-las", cor_las},
      {"cor-plus", cor_plus},
      {"cor-rel", cor_rel},
      {"relate", relate},
      {"relate2", relate2},
      {"dom", dom},
      {"sym-lemma", sym_lemma},
      {"symm-lemma", symm_lemma},
      {"sym-binomial-OO", sym_binomial_oo},
      {"jack-eval-one", jack_eval_one},
      {"binom-sum-support", binom_sum_support},
  };
  return table;
}

}  // namespace

const std::vector<CheckInfo>& catalog() { return kCatalog; }

std::vector<CheckInfo> filter_catalog(std::string_view needle) {
  std::vector<CheckInfo> out;
  for (const auto& e : kCatalog) {
    if (e.id.find(needle) != std::string::npos) out.push_back(e);
  }
  return out;
}

bool is_check_id(std::string_view id) { return dispatch().find(id) != dispatch().end(); }

CheckReport run_check(std::string_view id, const CheckOptions& options) {
  auto it = dispatch().find(id);
  if (it == dispatch().end()) throw UsageError("unknown check: " + std::string(id));
  if (options.n < 1) throw UsageError("n must be at least 1");
  if (options.degree < 0) throw UsageError("degree bound must be nonnegative");
  CheckReport report;
  report.id = std::string(id);
  report.n = options.n;
  report.degree = options.degree;
  report.seed = options.seed;
  const auto start = std::chrono::steady_clock::now();
  Ctx ctx(options, report);
  it->second(ctx);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckOptions& options,
                                    std::size_t jobs) {
  std::vector<CheckReport> reports(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < ids.size(); k = next++) {
      try {
        reports[k] = run_check(ids[k], options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, ids.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

Json report_to_json(const CheckReport& report, bool timing) {
  Json config = Json::object();
  config["n"] = report.n;
  config["degree"] = report.degree;
  config["fields"] = report.fields;
  config["seed"] = report.seed;
  config["certification"] = report.certification;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  Json j = Json::object();
  j["id"] = report.id;
  j["config"] = std::move(config);
  j["instances"] = report.instances;
  j["passed"] = report.passed();
  j["failures"] = std::move(failures);
  if (timing) j["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms);
  return j;
}

Json catalog_to_json(const std::vector<CheckInfo>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    const char* variant = e.variant == CheckVariant::QT ? "qt" : e.variant == CheckVariant::R ? "r" : "both";
    out.push_back({{"id", e.id}, {"statement", e.statement}, {"source", e.source}, {"variant", variant}});
  }
  return out;
}

}  // namespace macdonald
