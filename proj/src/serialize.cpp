#include "macdonald/serialize.hpp"

#include <sstream>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

std::vector<Generator> occurring_generators(unsigned mask) {
  std::vector<Generator> out;
  for (Generator g : kAllGenerators) {
    if ((mask >> static_cast<unsigned>(g)) & 1U) out.push_back(g);
  }
  return out;
}

Json genpoly_to_json(const GenPoly& p, const std::vector<Generator>& gens) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string key;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k) key += ",";
      key += std::to_string(it->first[static_cast<std::size_t>(gens[k])]);
    }
    out[key] = it->second.get_str();
  }
  return out;
}

GenPoly genpoly_from_json(const Json& j, const std::vector<Generator>& gens) {
  if (!j.is_object()) throw UsageError("polynomial must be a JSON object");
  GenPoly out;
  for (const auto& [key, value] : j.items()) {
    GenExponent e{};
    std::stringstream ss(key);
    std::string part;
    std::size_t k = 0;
    while (std::getline(ss, part, ',')) {
      if (k >= gens.size()) throw UsageError("exponent tuple longer than generator list: " + key);
      e[static_cast<std::size_t>(gens[k++])] = std::stoi(part);
    }
    if (k != gens.size() && !(gens.empty() && key.empty())) {
      throw UsageError("exponent tuple shorter than generator list: " + key);
    }
    out.add_term(e, BigInt(value.get<std::string>()));
  }
  return out;
}

BigRational parse_rational(const std::string& s) {
  BigRational v;
  if (v.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
  if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
  v.canonicalize();
  return v;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.as_rational().get_str();
  const auto gens = occurring_generators(s.generator_mask());
  Json out = Json::object();
  out["num"] = genpoly_to_json(s.numerator(), gens);
  out["den"] = genpoly_to_json(s.denominator(), gens);
  Json names = Json::array();
  for (Generator g : gens) names.push_back(std::string(generator_name(g)));
  out["gens"] = names;
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (!j.is_object()) throw UsageError("scalar must be a string or an object");
  std::vector<Generator> gens;
  for (const auto& name : j.at("gens")) {
    auto g = parse_generator(name.get<std::string>());
    if (!g) throw UsageError("unknown generator " + name.get<std::string>());
    gens.push_back(*g);
  }
  return Scalar::reduce(genpoly_from_json(j.at("num"), gens), genpoly_from_json(j.at("den"), gens));
}

Json poly_to_json(const LaurentPoly& f) {
  Json out = Json::object();
  out["n"] = f.num_vars();
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Json term = Json::object();
    term["exp"] = it->first;
    term["coeff"] = scalar_to_json(it->second);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  LaurentPoly f(n);
  for (const auto& term : j.at("terms")) {
    f.add_term(term.at("exp").get<Monomial>(), scalar_from_json(term.at("coeff")));
  }
  return f;
}

Json composition_to_json(const Composition& c) { return c.entries(); }
Json permutation_to_json(const Permutation& w) { return w.one_line(); }

}  // namespace macdonald
