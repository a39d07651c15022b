#include "normgraph/serialize.hpp"

#include <string>

#include "normgraph/errors.hpp"

namespace normgraph {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw FormatError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

int as_small_int(const Json& j, const char* what) {
  const auto v = as_uint(j, what);
  if (v > 64) throw FormatError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::uint64_t as_prime(const Json& j) {
  const auto p = as_uint(j, "p");
  if (p >= PrimeField::kMaxPrime || !is_prime(p)) throw FormatError("p must be a prime below 2^31");
  return p;
}

FpElement as_residue(const Json& j, std::uint64_t p, const char* what) {
  const auto v = as_uint(j, what);
  if (v >= p) throw FormatError(std::string(what) + " is not reduced mod p");
  return FpElement{v};
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

std::vector<FpElement> residues(const Json& j, std::uint64_t p, const char* what) {
  std::vector<FpElement> out;
  for (const auto& e : as_array(j, what)) out.push_back(as_residue(e, p, what));
  return out;
}

ExtElement element_from(const Json& j, std::uint64_t p, int k) {
  auto c = residues(j, p, "alpha");
  if (c.size() != static_cast<std::size_t>(k)) throw FormatError("alpha must have exactly k coefficients");
  return ExtElement{std::move(c)};
}

Vertex vertex_from(const Json& j, std::uint64_t p, int k) {
  Vertex v{element_from(field_of(j, "alpha"), p, k), as_residue(field_of(j, "a"), p, "a")};
  if (v.a.is_zero()) throw FormatError("second coordinate must be nonzero");
  return v;
}

std::vector<Vertex> vertices_from(const Json& j, std::uint64_t p, int k, const char* what) {
  std::vector<Vertex> out;
  for (const auto& e : as_array(j, what)) out.push_back(vertex_from(e, p, k));
  return out;
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw FormatError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Json coeff_array(const std::vector<FpElement>& c) {
  Json a = Json::array();
  for (const auto& x : c) a.push_back(x.value);
  return a;
}

void expect_domain(const Json& j, const char* domain) {
  const Json& d = field_of(j, "domain");
  if (!d.is_string() || d.get<std::string>() != domain)
    throw FormatError(std::string("expected polynomial domain \"") + domain + "\"");
}

template <class Elem>
Poly<Elem> canonical(std::vector<Elem> c) {
  const std::size_t n = c.size();
  Poly<Elem> h(std::move(c));
  if (h.coeffs.size() != n) throw FormatError("polynomial has trailing zero coefficients");
  return h;
}

}  // namespace

Json to_json(const ExtElement& x) { return coeff_array(x.coeffs); }

ExtElement ext_element_from_json(const Json& j, const ExtField& field) { return element_from(j, field.p(), field.degree()); }

Json to_json(const ExtField& field) {
  return Json{{"p", field.p()}, {"k", field.degree()}, {"modulus", coeff_array(field.modulus().coeffs)}};
}

ExtField ext_field_from_json(const Json& j) {
  const auto p = as_prime(field_of(j, "p"));
  const int k = as_small_int(field_of(j, "k"), "k");
  const auto c = residues(field_of(j, "modulus"), p, "modulus");
  if (c.size() != static_cast<std::size_t>(k) + 1) throw FormatError("modulus degree differs from k");
  try {
    return ExtField(PrimeField(p), FpPoly(c));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
}

Json to_json(const FpPoly& h) { return Json{{"domain", "fp"}, {"coeffs", coeff_array(h.coeffs)}}; }

Json to_json(const ExtPoly& h) {
  Json c = Json::array();
  for (const auto& x : h.coeffs) c.push_back(to_json(x));
  return Json{{"domain", "ext"}, {"coeffs", c}};
}

Json to_json(const IntPoly& h) {
  Json c = Json::array();
  for (const auto& x : h.coeffs) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      c.push_back(x.str());
    else
      c.push_back(static_cast<std::int64_t>(x));
  }
  return Json{{"domain", "int"}, {"coeffs", c}};
}

FpPoly fp_poly_from_json(const Json& j, const PrimeField& f) {
  expect_domain(j, "fp");
  return canonical(residues(field_of(j, "coeffs"), f.p(), "coeffs"));
}

ExtPoly ext_poly_from_json(const Json& j, const ExtField& field) {
  expect_domain(j, "ext");
  std::vector<ExtElement> c;
  for (const auto& e : as_array(field_of(j, "coeffs"), "coeffs")) c.push_back(element_from(e, field.p(), field.degree()));
  return canonical(std::move(c));
}

IntPoly int_poly_from_json(const Json& j) {
  expect_domain(j, "int");
  std::vector<BigInt> c;
  for (const auto& e : as_array(field_of(j, "coeffs"), "coeffs")) {
    if (e.is_number_integer()) {
      c.push_back(e.is_number_unsigned() ? BigInt(e.get<std::uint64_t>()) : BigInt(e.get<std::int64_t>()));
    } else if (e.is_string()) {
      try {
        c.emplace_back(e.get<std::string>());
      } catch (const std::exception&) {
        throw FormatError("invalid big integer coefficient");
      }
    } else {
      throw FormatError("integer coefficients must be numbers or decimal strings");
    }
  }
  return canonical(std::move(c));
}

Json to_json(const Vertex& v) { return Json{{"alpha", to_json(v.alpha)}, {"a", v.a.value}}; }

Vertex vertex_from_json(const Json& j, const ExtField& field) { return vertex_from(j, field.p(), field.degree()); }

Json biclique_to_json(std::uint64_t p, int t, const FpPoly& modulus, const std::vector<Vertex>& L,
                      const std::vector<Vertex>& R, bool verified) {
  Json l = Json::array(), r = Json::array();
  for (const auto& v : L) l.push_back(to_json(v));
  for (const auto& v : R) r.push_back(to_json(v));
  return Json{{"p", p}, {"t", t}, {"modulus", coeff_array(modulus.coeffs)}, {"L", l}, {"R", r}, {"verified", verified}};
}

StoredBiclique biclique_from_json(const Json& j) {
  StoredBiclique s;
  s.p = as_prime(field_of(j, "p"));
  s.t = as_small_int(field_of(j, "t"), "t");
  if (s.t < 3) throw FormatError("t must be at least 3");
  auto m = residues(field_of(j, "modulus"), s.p, "modulus");
  if (m.size() != static_cast<std::size_t>(s.t)) throw FormatError("modulus must have degree t-1");
  s.modulus = canonical(std::move(m));
  s.L = vertices_from(field_of(j, "L"), s.p, s.t - 1, "L");
  s.R = vertices_from(field_of(j, "R"), s.p, s.t - 1, "R");
  s.verified = as_bool(field_of(j, "verified"), "verified");
  return s;
}

Json general_to_json(const GeneralWitness& w, bool verified) {
  Json a = Json::array(), b = Json::array();
  for (const auto& v : w.A) a.push_back(to_json(v));
  for (const auto& v : w.B) b.push_back(to_json(v));
  const auto& q = w.params;
  return Json{{"t", q.t},           {"m", q.m},         {"p", q.p}, {"r", q.r.value},
              {"thetas", coeff_array(q.thetas)}, {"zeta", q.zeta.value}, {"A", a}, {"B", b},
              {"verified", verified}};
}

StoredGeneral general_from_json(const Json& j) {
  StoredGeneral s;
  auto& q = s.params;
  q.t = as_small_int(field_of(j, "t"), "t");
  q.m = as_small_int(field_of(j, "m"), "m");
  if (q.t < 4 || q.m < 1) throw FormatError("requires t >= 4 and m >= 1");
  q.p = as_prime(field_of(j, "p"));
  q.r = as_residue(field_of(j, "r"), q.p, "r");
  q.thetas = residues(field_of(j, "thetas"), q.p, "thetas");
  if (q.thetas.size() != static_cast<std::size_t>(q.m)) throw FormatError("thetas must have m entries");
  q.zeta = as_residue(field_of(j, "zeta"), q.p, "zeta");
  s.A = vertices_from(field_of(j, "A"), q.p, q.t - 1, "A");
  s.B = vertices_from(field_of(j, "B"), q.p, q.t - 1, "B");
  s.verified = as_bool(field_of(j, "verified"), "verified");
  return s;
}

}  // namespace normgraph
