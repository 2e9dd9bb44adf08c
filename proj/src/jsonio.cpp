#include "ellcy/jsonio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ellcy/parse.hpp"
#include "ellcy/registry.hpp"

namespace ellcy {
namespace {

Json int_json(const Int& n) {
  // Table primes fit comfortably; fall back to strings past 2^62.
  if (n >= Int(std::int64_t{1} << 62) || n <= -Int(std::int64_t{1} << 62))
    return n.str();
  return n.convert_to<long long>();
}

Json primes_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& p : v) arr.push_back(int_json(p));
  return arr;
}

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  throw std::domain_error(where + ": " + what);
}

QuadElem value_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_value(j.get<std::string>());
    if (j.is_number_integer()) return QuadElem(Rat(j.get<long long>()));
    if (j.is_object()) {
      if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
        bad_field(where, "quadratic value needs fields a, b, d");
      Rat a = parse_rational(j.at("a").is_string() ? j.at("a").get<std::string>()
                                                   : j.at("a").dump());
      Rat b = parse_rational(j.at("b").is_string() ? j.at("b").get<std::string>()
                                                   : j.at("b").dump());
      if (!j.at("d").is_number_integer())
        bad_field(where + ".d", "expected an integer");
      return QuadElem(a, b, Int(j.at("d").get<long long>()));
    }
  } catch (const std::domain_error& e) {
    bad_field(where, e.what());
  }
  bad_field(where, "expected a rational string or a {a, b, d} record");
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const QuadElem& x) {
  if (x.is_rational()) return to_json(x.a);
  Json j;
  j["a"] = to_string(x.a);
  j["b"] = to_string(x.b);
  j["d"] = int_json(x.d);
  return j;
}

Json to_json(const PolyQ& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p[i]));
  return arr;
}

Json to_json(const PolyK& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p[i]));
  return arr;
}

Json to_json(const Place& p) {
  if (p.at_infinity) return "infinity";
  if (p.value) return to_json(*p.value);
  Json j;
  j["minpoly"] = to_json(p.minpoly);
  j["degree"] = p.degree;
  return j;
}

Json to_json(const WeierstrassModel& m) {
  Json j;
  j["field"] = Json{{"d", int_json(m.field_d)}};
  Json a;
  a["a1"] = to_json(m.a1);
  a["a2"] = to_json(m.a2);
  a["a3"] = to_json(m.a3);
  a["a4"] = to_json(m.a4);
  a["a6"] = to_json(m.a6);
  j["a"] = std::move(a);
  if (m.parameter) j["parameter"] = to_string(*m.parameter);
  return j;
}

Json to_json(const SurfaceAnalysis& a) {
  Json j;
  j["field"] = Json{{"d", int_json(a.field_d)}};
  j["config"] = config_label(a);
  j["euler"] = a.euler;
  j["mw_rank"] = a.mw_rank;
  j["singular_count"] = a.singular_count;
  j["semistable_count"] = a.semistable_count;
  j["n2"] = a.n2;
  j["n3"] = a.n3;
  j["n4"] = a.n4;
  Json fibers = Json::array();
  for (const KodairaFiber& f : a.fibers) {
    Json fj;
    fj["place"] = to_json(f.place);
    fj["degree"] = f.place.degree;
    fj["type"] = to_string(f.type);
    fj["v_disc"] = f.v_disc;
    fj["components"] = f.components;
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

Json to_json(const SpecializeResult& r) {
  Json j;
  j["model"] = to_json(r.model);
  j["analysis"] = to_json(r.analysis);
  if (r.degeneration) {
    Json d;
    d["m"] = to_string(r.degeneration->m0);
    d["config"] = r.degeneration->config;
    d["mw_rank"] = r.degeneration->mw_rank;
    j["degeneration"] = std::move(d);
  }
  return j;
}

Json to_json(const FiberProductAnalysis& p) {
  Json j;
  j["field"] = Json{{"d", int_json(p.field_d)}};
  j["euler"] = p.euler;
  j["rho"] = p.rho;
  j["h12"] = p.h12;
  j["rigidity"] = to_string(p.rigidity);
  j["d_flag"] = p.d_flag;
  j["d_overridden"] = p.d_overridden;
  j["s_count"] = p.s_count;
  j["s_prime_count"] = p.s_prime_count;
  j["shared_count"] = p.shared_count;
  j["n2"] = p.n2;
  j["n3"] = p.n3;
  j["n4"] = p.n4;
  Json pairs = Json::array();
  for (const FiberPair& f : p.pairs) {
    Json fj;
    fj["place"] = to_json(f.place);
    fj["degree"] = f.degree;
    fj["left"] = to_string(f.left);
    fj["right"] = to_string(f.right);
    fj["shared"] = f.shared;
    fj["euler"] = f.local.euler;
    fj["components"] = f.local.components;
    fj["small_resolution"] = to_string(f.local.small_resolution);
    pairs.push_back(std::move(fj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const BadPrimeReport& r) {
  Json j;
  j["nodal"] = primes_json(r.nodal);
  j["degenerate"] = primes_json(r.degenerate);
  Json cls = Json::object();
  for (const auto& [p, c] : r.per_prime) cls[p.str()] = to_string(c);
  j["classification"] = std::move(cls);
  return j;
}

Json to_json(const MatchSolution& s) {
  Json j;
  j["branch"] = s.branch;
  if (s.value) j["value"] = to_json(*s.value);
  if (s.min_poly) j["min_poly"] = to_json(*s.min_poly);
  if (s.residue) {
    j["residue"] = *s.residue;
    j["modulus"] = s.modulus;
  }
  return j;
}

Json to_json(const std::vector<MatchSolution>& v) {
  Json arr = Json::array();
  for (const MatchSolution& s : v) arr.push_back(to_json(s));
  return arr;
}

Json table_diff_json(const TableReport& rep) {
  Json j;
  j["table"] = table_name(rep.id);
  Json rows = Json::array();
  for (const TableRow& r : rep.rows) {
    Json rj;
    rj["lambda"] = r.lambda;
    if (r.lambda_prime) rj["lambda_prime"] = *r.lambda_prime;
    if (r.m) rj["m"] = *r.m;
    if (r.placement) rj["placement"] = r.computed_placement.value_or("absent");
    if (!r.nodal.empty() || !r.expected_nodal.empty()) {
      rj["nodal"] = primes_json(r.nodal);
      rj["degenerate"] = primes_json(r.degenerate);
    }
    if (r.h12) rj["h12"] = *r.h12;
    rj["match"] = r.match;
    if (!r.match) {
      Json exp;
      if (r.placement) exp["placement"] = *r.placement;
      if (!r.expected_nodal.empty() || !r.expected_degenerate.empty()) {
        exp["nodal"] = primes_json(r.expected_nodal);
        exp["degenerate"] = primes_json(r.expected_degenerate);
      }
      if (r.expected_h12) exp["h12"] = *r.expected_h12;
      rj["expected"] = std::move(exp);
    }
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json registry_dump_json() {
  Json j;
  Json fams = Json::array();
  for (FamilyId id : all_families()) {
    const FamilyModel& f = family_model(id);
    Json fj;
    fj["label"] = f.label;
    Json degs = Json::array();
    for (const auto& [m0, config] : f.degenerations) {
      Json dj;
      dj["m"] = to_string(m0);
      dj["config"] = config;
      degs.push_back(std::move(dj));
    }
    fj["degenerations"] = std::move(degs);
    fams.push_back(std::move(fj));
  }
  j["families"] = std::move(fams);
  Json surfs = Json::array();
  for (const BuiltinSurface& b : builtin_surfaces()) {
    Json bj;
    bj["additive"] = to_string(FiberType{b.additive, 0});
    bj["lambda"] = to_json(b.lambda);
    bj["config"] = b.config;
    bj["at_zero"] = to_string(b.type_at_zero);
    bj["at_one"] = to_string(b.type_at_one);
    bj["at_lambda"] = to_string(b.type_at_lambda);
    bj["origin_family"] = family_label(b.origin_family);
    bj["origin_m"] = to_string(b.origin_m);
    surfs.push_back(std::move(bj));
  }
  j["builtin_surfaces"] = std::move(surfs);
  return j;
}

WeierstrassModel model_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected a JSON object");
  WeierstrassModel m;
  if (j.contains("field")) {
    const Json& f = j.at("field");
    if (!f.is_object() || !f.contains("d") || !f.at("d").is_number_integer())
      bad_field(where + ".field", "expected {\"d\": integer}");
    m.field_d = Int(f.at("d").get<long long>());
    if (m.field_d == 0) bad_field(where + ".field.d", "d must be nonzero");
  }
  if (!j.contains("a") || !j.at("a").is_object())
    bad_field(where + ".a", "expected the coefficient object a1..a6");
  const Json& a = j.at("a");
  auto read_poly = [&](const char* key) -> PolyK {
    std::string here = where + ".a." + key;
    if (!a.contains(key)) return PolyK();
    const Json& arr = a.at(key);
    if (!arr.is_array()) bad_field(here, "expected a coefficient array");
    PolyK p;
    for (size_t i = 0; i < arr.size(); ++i) {
      QuadElem c =
          value_from_json(arr[i], here + "[" + std::to_string(i) + "]");
      if (!c.is_rational() && c.d != m.field_d)
        bad_field(here + "[" + std::to_string(i) + "]",
                  "coefficient field disagrees with field.d");
      p.set(int(i), c);
    }
    return p;
  };
  m.a1 = read_poly("a1");
  m.a2 = read_poly("a2");
  m.a3 = read_poly("a3");
  m.a4 = read_poly("a4");
  m.a6 = read_poly("a6");
  for (const auto& [key, unused] : a.items())
    if (key != "a1" && key != "a2" && key != "a3" && key != "a4" && key != "a6")
      bad_field(where + ".a." + key, "unknown coefficient (use a1..a4, a6)");
  if (j.contains("parameter")) {
    if (!j.at("parameter").is_string())
      bad_field(where + ".parameter", "expected a rational string");
    try {
      m.parameter = parse_rational(j.at("parameter").get<std::string>());
    } catch (const std::domain_error& e) {
      bad_field(where + ".parameter", e.what());
    }
  }
  return m;
}

WeierstrassModel model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error(path + ": cannot open model file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Convert the byte offset into a line/column diagnostic.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::domain_error(path + ":" + std::to_string(line) + ":" +
                            std::to_string(col) + ": " + e.what());
  }
  return model_from_json(j, path);
}

}  // namespace ellcy
