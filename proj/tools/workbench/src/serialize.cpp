#include "skewroos/workbench/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "skewroos/error.hpp"

namespace skewroos::workbench {
namespace {

constexpr std::string_view kModule = "cli-workbench";

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, kModule, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    bad("expected a nonnegative integer in '" + std::string(context) + "'");
  }
  return v;
}

// Splits on '+' outside parentheses.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) bad("unbalanced parentheses in '" + std::string(s) + "'");
    if (s[i] == '+' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) bad("unbalanced parentheses in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  for (auto t : out) {
    if (t.empty()) bad("empty term in '" + std::string(s) + "'");
  }
  return out;
}

std::string_view unwrap(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return trim(s.substr(1, s.size() - 2));
  return s;
}

const Field& field_named(const Tower& tower, const std::string& name) {
  if (name == "F") return *tower.f();
  if (name == "E") return *tower.e();
  bad("polynomial field must be \"F\" or \"E\"");
}

std::optional<std::vector<std::uint64_t>> int_list(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::vector<std::uint64_t>>();
}

}  // namespace

Json element_to_json(const Field& field, Elem x) {
  if (const auto k = field.log(x)) return Json{{"pow", *k}};
  return Json{{"coords", field.coords(x)}};
}

Elem element_from_json(const Field& field, const Json& j) {
  if (j.is_string()) return parse_element(field, j.get<std::string>());
  if (j.is_object() && j.contains("pow")) {
    if (!j["pow"].is_number_integer()) bad("\"pow\" must be an integer");
    return field.exp(j["pow"].get<std::int64_t>());
  }
  if (j.is_object() && j.contains("coords")) {
    auto c = j["coords"].get<std::vector<std::uint64_t>>();
    if (c.size() > field.degree()) bad("too many coordinates for a degree-" + std::to_string(field.degree()) + " field");
    for (auto v : c) {
      if (v >= field.base_order()) bad("coordinate " + std::to_string(v) + " is not a base-field code");
    }
    c.resize(field.degree(), 0);
    return field.from_coords(c);
  }
  bad("element must be {\"pow\": k}, {\"coords\": [...]} or a string");
}

std::string element_to_text(const Field& field, Elem x) {
  if (x.is_zero()) return "0";
  if (x == field.one()) return "1";
  if (const auto k = field.log(x)) return *k == 1 ? field.symbol() : field.symbol() + "^" + std::to_string(*k);
  const auto c = field.coords(x);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? field.symbol() : field.symbol() + "^" + std::to_string(i));
    if (mono.empty()) {
      out += std::to_string(c[i]);
    } else {
      out += (c[i] == 1 ? "" : std::to_string(c[i]) + "*") + mono;
    }
  }
  return out;
}

Elem parse_element(const Field& field, std::string_view text) {
  Elem sum{};
  const std::string& sym = field.symbol();
  for (auto term : split_terms(unwrap(text))) {
    std::uint64_t coef = 1;
    std::string_view rest = term;
    const auto star = term.find('*');
    if (star != std::string_view::npos) {
      coef = parse_uint(term.substr(0, star), text);
      rest = trim(term.substr(star + 1));
    } else if (!term.empty() && std::isdigit(static_cast<unsigned char>(term.front()))) {
      coef = parse_uint(term, text);
      rest = {};
    }
    if (coef >= field.base_order()) bad("coefficient " + std::to_string(coef) + " is not a base-field code");
    Elem mono = field.one();
    if (!rest.empty()) {
      if (rest.substr(0, sym.size()) != sym) {
        bad("unknown symbol in '" + std::string(text) + "' (expected '" + sym + "')");
      }
      rest.remove_prefix(sym.size());
      rest = trim(rest);
      std::uint64_t k = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') bad("malformed term '" + std::string(term) + "'");
        k = parse_uint(rest.substr(1), text);
      }
      mono = field.exp(static_cast<std::int64_t>(k % (field.order() - 1)));
    }
    sum = field.add(sum, field.scale(coef, mono));
  }
  return sum;
}

std::string poly_to_text(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  const Field& k = *f.field();
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Elem c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string ct = element_to_text(k, c);
    if (ct.find('+') != std::string::npos) ct = "(" + ct + ")";
    if (i == 0) {
      out += ct;
      continue;
    }
    const std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
    out += c == k.one() ? xs : ct + "*" + xs;
  }
  return out;
}

SkewPoly parse_poly(const FieldPtr& field, std::int64_t twist, std::string_view text) {
  std::vector<Elem> c;
  if (trim(text) == "0") return SkewPoly::zero(field, twist);
  for (auto term : split_terms(text)) {
    std::string_view coef;
    std::uint64_t deg = 0;
    // Trailing x or x^k, preceded by '*' when a coefficient is present.
    const auto xpos = term.rfind('x');
    const bool has_x = xpos != std::string_view::npos && term.find(')', xpos) == std::string_view::npos;
    if (has_x) {
      std::string_view tail = trim(term.substr(xpos + 1));
      deg = tail.empty() ? 1 : (tail.front() == '^' ? parse_uint(tail.substr(1), term) : 0);
      if (!tail.empty() && tail.front() != '^') bad("malformed term '" + std::string(term) + "'");
      coef = trim(term.substr(0, xpos));
      if (!coef.empty()) {
        if (coef.back() != '*') bad("malformed term '" + std::string(term) + "'");
        coef = trim(coef.substr(0, coef.size() - 1));
      }
    } else {
      coef = term;
    }
    const Elem e = coef.empty() ? field->one() : parse_element(*field, coef);
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] = field->add(c[deg], e);
  }
  return {field, twist, std::move(c)};
}

Json poly_to_json(const Tower& tower, const SkewPoly& f) {
  Json coeffs = Json::array();
  for (auto c : f.coeffs()) coeffs.push_back(element_to_json(*f.field(), c));
  return Json{{"field", f.field() == tower.f() ? "F" : "E"}, {"twist", f.twist()}, {"coeffs", coeffs}};
}

SkewPoly poly_from_json(const Tower& tower, const Json& j) {
  const std::string name = j.value("field", "F");
  const Field& field = field_named(tower, name);
  const FieldPtr& fp = name == "F" ? tower.f() : tower.e();
  std::vector<Elem> c;
  for (const auto& e : j.at("coeffs")) c.push_back(element_from_json(field, e));
  return {fp, j.value("twist", std::int64_t{1}), std::move(c)};
}

TowerParams tower_params_from_json(const Json& j) {
  if (!j.is_object()) bad("tower spec must be an object");
  TowerParams p;
  try {
    p.q = j.at("q").get<std::uint64_t>();
    p.mu = j.at("mu").get<unsigned>();
    p.nu = j.at("nu").get<unsigned>();
    p.mod_f = int_list(j, "modF");
    p.mod_e = int_list(j, "modE");
    p.mod_k = int_list(j, "modK");
    if (j.contains("embed_hint") && !j["embed_hint"].is_null()) p.embed_hint = j["embed_hint"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("tower spec: ") + e.what());
  }
  return p;
}

Json tower_to_json(const Tower& tower, std::optional<Elem> alpha) {
  Json j;
  j["q"] = tower.q();
  j["mu"] = tower.mu();
  j["nu"] = tower.nu();
  if (tower.k()->degree() > 1) j["modK"] = tower.k()->modulus();
  j["modF"] = tower.f()->modulus();
  j["modE"] = tower.e()->modulus();
  j["embed_hint"] = tower.embedding_exponent();
  j["alpha"] = alpha ? element_to_json(*tower.e(), *alpha) : Json(nullptr);
  return j;
}

Json certificate_to_json(const RoosCertificate& c) {
  return Json{{"b", c.b}, {"s", c.s}, {"delta", c.delta}, {"r", c.r}, {"k", c.k}};
}

RoosCertificate certificate_from_json(const Json& j) {
  RoosCertificate c;
  try {
    c.b = j.at("b").get<std::int64_t>();
    c.s = j.value("s", std::int64_t{1});
    c.delta = j.at("delta").get<unsigned>();
    c.r = j.value("r", 0u);
    c.k = j.contains("k") ? j["k"].get<std::vector<std::int64_t>>() : std::vector<std::int64_t>{0};
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("certificate: ") + e.what());
  }
  return c;
}

Json distance_value_to_json(const DistanceValue& v) {
  if (v.exact()) return v.lo;
  return Json{{"lo", v.lo}, {"hi", v.hi}};
}

std::optional<DistanceValue> distance_value_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const auto v = j.get<unsigned>();
    return DistanceValue{v, v};
  }
  return DistanceValue{j.at("lo").get<unsigned>(), j.at("hi").get<unsigned>()};
}

Json code_report(const SkewCyclicCode& code) {
  Json g = Json::array();
  for (auto c : code.generator().coeffs()) g.push_back(element_to_text(*code.tower()->f(), c));
  Json j;
  j["n"] = code.n();
  j["k"] = code.k();
  j["g"] = g;
  j["g_text"] = poly_to_text(code.generator());
  j["T"] = code.defining_set().elements();
  j["T_F"] = code.defining_set().restricted();
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["T"] = r.t.elements();
  j["bch"] = r.bch ? certificate_to_json(*r.bch) : Json(nullptr);
  j["roos"] = r.roos ? certificate_to_json(*r.roos) : Json(nullptr);
  j["d_H_lower"] = r.d_h_lower;
  j["d_R_lower"] = r.d_r_lower;
  j["d_H_singleton"] = r.singleton.hamming;
  j["d_R_singleton"] = r.singleton.rank;
  j["mds_proven"] = r.mds_proven;
  j["mrd_proven"] = r.mrd_proven;
  j["mrd_proven_via_tf"] = r.mrd_proven_via_tf;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace skewroos::workbench
