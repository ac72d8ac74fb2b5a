// Command-line front end: compute families and scalars, run the check
// catalog, list it, inspect the disk cache.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "macdonald/errors.hpp"
#include "macdonald/identities.hpp"
#include "macdonald/interpolation.hpp"
#include "macdonald/serialize.hpp"

namespace md = macdonald;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCollision = 3 };

struct FieldFlags {
  std::string variant = "qt";
  bool symbolic = false;
  std::optional<std::string> q, t, r, a;
};

md::BigRational parse_rational(const std::string& text, const char* what) {
  md::BigRational v;
  if (text.empty() || v.set_str(text, 10) != 0) throw md::UsageError(std::string("bad value for ") + what + ": " + text);
  v.canonicalize();
  return v;
}

md::Composition parse_composition(const std::string& text, const char* what) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      entries.push_back(v);
    } catch (const std::exception&) {
      throw md::UsageError(std::string("bad entry in ") + what + ": " + item);
    }
  }
  if (entries.empty()) throw md::UsageError(std::string(what) + " is empty");
  return md::Composition(std::move(entries));
}

md::Assignment given_values(const FieldFlags& f) {
  md::Assignment out;
  if (f.q) out[md::Generator::q] = parse_rational(*f.q, "--q");
  if (f.t) out[md::Generator::t] = parse_rational(*f.t, "--t");
  if (f.r) out[md::Generator::r] = parse_rational(*f.r, "--r");
  if (f.a) out[md::Generator::a] = parse_rational(*f.a, "--a");
  return out;
}

bool is_qt(const FieldFlags& f) {
  if (f.variant == "qt") return true;
  if (f.variant == "r") return false;
  throw md::UsageError("--variant must be qt or r");
}

// Field for `compute`: symbolic unless values are given; `with_a` adjoins a.
md::FieldConfig compute_field(const FieldFlags& f, bool with_a) {
  const bool qt = is_qt(f);
  md::Assignment values = given_values(f);
  const md::Variant base = qt ? md::Variant::QT : md::Variant::R;
  const bool any_base = qt ? (values.count(md::Generator::q) || values.count(md::Generator::t))
                           : values.count(md::Generator::r) > 0;
  if (qt && values.count(md::Generator::r)) throw md::UsageError("--r does not apply to the qt variant");
  if (!qt && (values.count(md::Generator::q) || values.count(md::Generator::t))) {
    throw md::UsageError("--q/--t do not apply to the r variant");
  }
  if (f.symbolic || !any_base) {
    if (f.symbolic && !values.empty()) throw md::UsageError("--symbolic conflicts with parameter values");
    md::FieldConfig cfg = md::FieldConfig::symbolic(base);
    if (!with_a) return cfg;
    if (values.count(md::Generator::a)) throw md::UsageError("--a needs specialized q,t or r");
    return cfg.with_a(std::nullopt);
  }
  std::optional<md::BigRational> a;
  if (auto it = values.find(md::Generator::a); it != values.end()) {
    a = it->second;
    values.erase(it);
  }
  md::FieldConfig cfg = md::FieldConfig::specialized(base, values);
  if (!with_a) return cfg;
  if (!a) throw md::UsageError("--a is required with specialized parameters");
  return cfg.with_a(a);
}

void set_cache_dir(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty()) {
    if (const char* env = std::getenv("CACHE_DIR")) dir = env;
  }
  if (!dir.empty()) md::PolyCache::global().set_directory(std::filesystem::path(dir));
}

// --------------------------------------------------------------- compute

struct ComputeArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::string alpha, beta, lambda, mu;
  FieldFlags field;
  bool inverted = false;
  bool pretty = false;
  bool json = false;
  std::string cache_dir;
};

md::Composition index_arg(const ComputeArgs& args, const std::string& primary, const std::string& fallback,
                          const char* what) {
  const std::string& text = primary.empty() ? fallback : primary;
  if (text.empty()) throw md::UsageError(std::string("missing ") + what);
  md::Composition c = parse_composition(text, what);
  if (args.n && *args.n != c.size()) {
    throw md::UsageError(std::string(what) + " has " + std::to_string(c.size()) + " entries but --n is " +
                         std::to_string(*args.n));
  }
  return c;
}

int run_compute(const ComputeArgs& args) {
  set_cache_dir(args.cache_dir);
  const std::string& fam = args.family;
  const bool scalar_family = fam == "binom" || fam == "binom-sym" || fam == "d" || fam == "e" || fam == "phi";
  const bool needs_a = fam == "O";
  const bool symmetric = fam == "R" || fam == "Rprime" || fam == "binom-sym";
  md::FieldConfig cfg = compute_field(args.field, needs_a);
  if (args.inverted) {
    if (!md::is_qt_family(cfg.variant())) throw md::UsageError("--inverted applies to the qt variant only");
    cfg = cfg.with_inverted_parameters(true);
  }
  const md::Composition index = symmetric ? index_arg(args, args.lambda, args.alpha, "--lambda")
                                          : index_arg(args, args.alpha, args.lambda, "--alpha");
  const std::size_t n = index.size();
  md::preflight(cfg, n, index.degree());
  if (needs_a) md::preflight_a(cfg, n, index.degree() + 2);

  md::Json out = md::Json::object();
  out["family"] = fam;
  out["index"] = md::composition_to_json(index);
  out["field"] = cfg.key();

  if (scalar_family) {
    md::Scalar value;
    if (fam == "binom") {
      const md::Composition beta = index_arg(args, args.beta, "", "--beta");
      md::preflight(cfg, n, std::max(index.degree(), beta.degree()));
      value = md::binom(index, beta, cfg);
      out["beta"] = md::composition_to_json(beta);
    } else if (fam == "binom-sym") {
      const md::Composition mu = index_arg(args, args.mu, args.beta, "--mu");
      if (!index.is_partition() || !mu.is_partition()) throw md::UsageError("binom-sym needs partitions");
      md::preflight(cfg, n, std::max(index.degree(), mu.degree()));
      value = md::binom_sym(index, mu, cfg);
      out["mu"] = md::composition_to_json(mu);
    } else if (fam == "d") {
      value = md::closed_d(index, cfg);
    } else if (fam == "e") {
      value = md::closed_e(index, cfg);
    } else {
      md::Scalar a = md::Scalar::generator(md::Generator::a);
      if (args.field.a) a = md::Scalar(parse_rational(*args.field.a, "--a"));
      value = md::closed_phi(index, cfg, a);
    }
    if (args.pretty) {
      std::cout << value.to_string() << "\n";
    } else {
      out["value"] = md::scalar_to_json(value);
      std::cout << out.dump() << "\n";
    }
    return kPass;
  }

  md::LaurentPoly poly(n);
  if (fam == "G") {
    poly = md::g_recursive(index, cfg);
  } else if (fam == "G-oracle") {
    poly = md::g_oracle(index, cfg);
  } else if (fam == "E") {
    poly = md::e_top(index, cfg);
  } else if (fam == "Gprime") {
    poly = md::gprime(index, cfg);
  } else if (fam == "Gplus") {
    poly = md::gplus(index, cfg);
  } else if (fam == "R") {
    poly = md::r_sym(index, cfg);
  } else if (fam == "Rprime") {
    poly = md::rprime_r(index, cfg);
  } else if (fam == "O") {
    poly = md::reciprocity_poly(index, cfg);
  } else {
    throw md::UsageError("unknown family: " + fam);
  }
  if (args.pretty) {
    std::cout << poly.to_string() << "\n";
  } else {
    out["poly"] = md::poly_to_json(poly);
    std::cout << out.dump() << "\n";
  }
  return kPass;
}

// ----------------------------------------------------------------- check

struct CheckArgs {
  std::string id;
  std::size_t n = 2;
  int degree = 3;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  FieldFlags field;
  bool variant_given = false;
  bool json = false;
  bool timing = false;
  std::string cache_dir;
};

std::string text_line(const md::CheckReport& r, bool timing) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.id << " n=" << r.n << " d=" << r.degree
     << " instances=" << r.instances << " failures=" << r.failures.size() << " a=" << r.certification << " field=";
  for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? ";" : "") << r.fields[i];
  if (timing) os << " ms=" << static_cast<long long>(r.elapsed_ms);
  for (const auto& f : r.failures) os << "\n    " << f.instance << ": " << f.lhs << " != " << f.rhs;
  return os.str();
}

int run_check_cmd(const CheckArgs& args) {
  set_cache_dir(args.cache_dir);
  std::vector<std::string> ids;
  if (args.id == "all") {
    const bool qt_only = args.variant_given && is_qt(args.field);
    const bool r_only = args.variant_given && !is_qt(args.field);
    for (const auto& e : md::catalog()) {
      if (qt_only && e.variant == md::CheckVariant::R) continue;
      if (r_only && e.variant == md::CheckVariant::QT) continue;
      ids.push_back(e.id);
    }
  } else {
    if (!md::is_check_id(args.id)) throw md::UsageError("unknown check: " + args.id);
    ids.push_back(args.id);
  }
  md::CheckOptions options;
  options.n = args.n;
  options.degree = args.degree;
  options.symbolic = args.field.symbolic;
  options.values = given_values(args.field);
  options.seed = args.seed;
  if (options.symbolic && !options.values.empty()) throw md::UsageError("--symbolic conflicts with parameter values");

  const auto reports = md::run_checks(ids, options, args.jobs);
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    if (args.json) {
      std::cout << md::report_to_json(r, args.timing).dump() << "\n";
    } else {
      std::cout << text_line(r, args.timing) << "\n";
    }
  }
  return all_pass ? kPass : kFail;
}

// ----------------------------------------------------------- list / cache

int run_list(const std::string& filter, bool json) {
  const auto entries = md::filter_catalog(filter);
  if (json) {
    std::cout << md::catalog_to_json(entries).dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : entries) std::cout << e.id << "\t" << e.statement << "\t[" << e.source << "]\n";
  return kPass;
}

int run_cache(const std::string& dir_flag, bool clear) {
  set_cache_dir(dir_flag);
  const auto dir = md::PolyCache::global().directory();
  if (!dir) throw md::UsageError("no cache directory: pass --cache-dir or set CACHE_DIR");
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*dir)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() != ".json" || name.size() != 21) continue;
    ++count;
    if (clear) std::filesystem::remove(entry.path());
  }
  std::cout << (clear ? "removed " : "entries ") << count << " in " << dir->string() << "\n";
  return kPass;
}

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--variant", f.variant, "qt or r")->check(CLI::IsMember({"qt", "r"}));
  cmd->add_flag("--symbolic", f.symbolic, "keep every generator symbolic");
  cmd->add_option("--q", f.q, "value of q (integer or p/q)");
  cmd->add_option("--t", f.t, "value of t");
  cmd->add_option("--r", f.r, "value of r");
  cmd->add_option("--a", f.a, "value of a");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation Macdonald polynomials: exact construction and identity checks"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "construct a polynomial or scalar");
  c->add_option("family", compute.family,
                "G, G-oracle, E, Gprime, Gplus, R, Rprime, O, binom, binom-sym, d, e, phi")
      ->required();
  c->add_option("--n", compute.n, "number of variables");
  c->add_option("--alpha", compute.alpha, "composition, comma separated")->allow_extra_args(false);
  c->add_option("--beta", compute.beta, "second composition for binom");
  c->add_option("--lambda", compute.lambda, "partition");
  c->add_option("--mu", compute.mu, "second partition for binom-sym");
  add_field_flags(c, compute.field);
  c->add_flag("--inverted", compute.inverted, "use 1/q, 1/t");
  c->add_flag("--pretty", compute.pretty, "human-readable output");
  c->add_flag("--json", compute.json, "JSON output (default)");
  c->add_option("--cache-dir", compute.cache_dir, "persist constructed polynomials here");

  CheckArgs check;
  auto* k = app.add_subcommand("check", "run catalog identities");
  k->add_option("id", check.id, "check id or all")->required();
  k->add_option("--n", check.n, "number of variables")->check(CLI::PositiveNumber);
  k->add_option("--deg", check.degree, "degree bound")->check(CLI::NonNegativeNumber);
  k->add_option("--seed", check.seed, "seed for sampled a values");
  k->add_option("--jobs", check.jobs, "parallel checks")->check(CLI::PositiveNumber);
  auto* variant_opt = k->add_option("--variant", check.field.variant, "restrict 'all' to qt or r checks")
                          ->check(CLI::IsMember({"qt", "r"}));
  k->add_flag("--symbolic", check.field.symbolic, "keep every generator symbolic");
  k->add_option("--q", check.field.q, "value of q");
  k->add_option("--t", check.field.t, "value of t");
  k->add_option("--r", check.field.r, "value of r");
  k->add_option("--a", check.field.a, "value of a");
  k->add_flag("--json", check.json, "one JSON report per line");
  k->add_flag("--timing", check.timing, "include elapsed time");
  k->add_option("--cache-dir", check.cache_dir, "persist constructed polynomials here");

  std::string filter;
  bool list_json = false;
  auto* l = app.add_subcommand("list-checks", "list the check catalog");
  l->add_option("--filter", filter, "substring of the id");
  l->add_flag("--json", list_json, "JSON array");

  std::string cache_dir;
  bool cache_clear = false;
  auto* cache = app.add_subcommand("cache", "inspect or clear the disk cache");
  cache->add_option("--cache-dir", cache_dir, "cache directory (default CACHE_DIR)");
  cache->add_flag("--clear", cache_clear, "remove cached entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*k) {
      check.variant_given = variant_opt->count() > 0;
      return run_check_cmd(check);
    }
    if (*l) return run_list(filter, list_json);
    if (*cache) return run_cache(cache_dir, cache_clear);
  } catch (const md::SpecializationCollision& e) {
    std::cerr << "specialization collision: " << e.what() << "\n";
    return kCollision;
  } catch (const md::DivisionByZero& e) {
    std::cerr << "division by zero under specialization: " << e.what() << "\n";
    return kCollision;
  } catch (const md::UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const md::DimensionError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const md::IndexError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
