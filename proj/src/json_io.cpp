#include "susy/json_io.hpp"

namespace susy {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) throw parse_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_boolean()) throw parse_error(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer())
      throw parse_error(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Rational rational_field(const Json& v, const char* what) {
  if (!v.is_string()) throw parse_error(std::string(what) + " must be a decimal string");
  return Rational::from_string(v.get<std::string>());
}

std::vector<Rational> rational_array(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of decimal strings");
  std::vector<Rational> out;
  for (const Json& v : j) out.push_back(rational_field(v, what));
  return out;
}

}  // namespace

Json poly_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["c"] = it->second.str();
    term["x"] = it->first.xe;
    term["y"] = it->first.ye;
    terms.push_back(std::move(term));
  }
  Json j;
  j["m"] = p.spec().m;
  j["n"] = p.spec().n;
  j["laurent"] = p.spec().laurent;
  j["terms"] = std::move(terms);
  return j;
}

Json poly_to_json(const Polynomial& p, const std::string& xname, const std::string& yname) {
  Json j = poly_to_json(p);
  j["names"] = Json{{"x", xname}, {"y", yname}};
  return j;
}

Polynomial poly_from_json(const Json& j) {
  VarSpec spec{int_field(j, "m"), int_field(j, "n"), bool_field(j, "laurent")};
  if (spec.m < 0 || spec.n < 0) throw parse_error("variable counts must be nonnegative");
  Polynomial p(spec);
  const Json& terms = member(j, "terms");
  if (!terms.is_array()) throw parse_error("field 'terms' must be an array");
  for (const Json& term : terms) {
    Monomial mono{int_array(member(term, "x"), "term exponents"),
                  int_array(member(term, "y"), "term exponents")};
    if (static_cast<int>(mono.xe.size()) != spec.m ||
        static_cast<int>(mono.ye.size()) != spec.n)
      throw parse_error("exponent vector length does not match the spec");
    if (!spec.laurent) {
      for (int e : mono.xe)
        if (e < 0) throw parse_error("negative exponent in a non-Laurent polynomial");
      for (int e : mono.ye)
        if (e < 0) throw parse_error("negative exponent in a non-Laurent polynomial");
    }
    p.add_term(mono, rational_field(member(term, "c"), "coefficient"));
  }
  return p;
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  try {
    return Partition::of(int_array(j, "partition"));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Json signature_to_json(const IntegerSignature& s) {
  return Json{{"entries", s.entries()}};
}

IntegerSignature signature_from_json(const Json& j) {
  try {
    return IntegerSignature::of(int_array(member(j, "entries"), "signature entries"));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Json signature_pair_to_json(const SignaturePair& s) {
  return Json{{"lambda", s.lambda.entries()}, {"mu", s.mu.entries()}};
}

SignaturePair signature_pair_from_json(const Json& j) {
  try {
    return SignaturePair{IntegerSignature::of(int_array(member(j, "lambda"), "lambda")),
                         IntegerSignature::of(int_array(member(j, "mu"), "mu"))};
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Json decomposition_to_json(const BasisDecomposition& d) {
  Json coeffs = Json::array();
  for (const auto& [lambda, c] : d.coeffs)
    coeffs.push_back(Json{{"partition", lambda.parts()}, {"c", c.str()}});
  return Json{{"m", d.m}, {"n", d.n}, {"coeffs", std::move(coeffs)}};
}

BasisDecomposition decomposition_from_json(const Json& j) {
  BasisDecomposition d;
  d.m = int_field(j, "m");
  d.n = int_field(j, "n");
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) throw parse_error("field 'coeffs' must be an array");
  for (const Json& entry : coeffs) {
    Partition lambda = partition_from_json(member(entry, "partition"));
    Rational c = rational_field(member(entry, "c"), "coefficient");
    if (!in_hook(lambda, d.m, d.n)) throw parse_error("partition outside the (m,n)-hook");
    if (c.is_zero()) continue;
    if (!d.coeffs.emplace(std::move(lambda), std::move(c)).second)
      throw parse_error("duplicate partition in decomposition");
  }
  return d;
}

Json point_to_json(const Point& p) {
  Json xs = Json::array(), ys = Json::array();
  for (const Rational& v : p.x) xs.push_back(v.str());
  for (const Rational& v : p.y) ys.push_back(v.str());
  return Json{{"x", std::move(xs)}, {"y", std::move(ys)}, {"multiplicative", p.multiplicative}};
}

Point point_from_json(const Json& j) {
  bool multiplicative = j.is_object() && j.contains("multiplicative")
                            ? bool_field(j, "multiplicative")
                            : false;
  try {
    return Point::make(rational_array(member(j, "x"), "coordinates"),
                       rational_array(member(j, "y"), "coordinates"), multiplicative);
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Json point_set_to_json(const PointSet& v) {
  Json out = Json::array();
  for (const Point& p : v) out.push_back(point_to_json(p));
  return out;
}

PointSet point_set_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("point set must be an array of points");
  PointSet v;
  try {
    for (const Json& p : j) v.insert(point_from_json(p));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
  return v;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace susy
