#include "birkit/session.hpp"

#include <fstream>
#include <sstream>

#include "birkit/errors.hpp"

namespace birkit {

using nlohmann::json;
using nlohmann::ordered_json;

const RationalMap& Session::map(const std::string& name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return m;
  throw Error(ErrorKind::Schema, "session has no map named '" + name + "'");
}

bool Session::has_map(const std::string& name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return true;
  return false;
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, "session " + where + ": " + what);
}

FieldSpec parse_field(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "QQ" || s == "Q" || s == "rationals") return FieldSpec::rationals();
    schema_fail("/field", "expected \"QQ\" or {\"prime\": p}, got \"" + s + "\"");
  }
  if (j.is_object() && j.contains("prime") && j["prime"].is_number_integer())
    return FieldSpec::prime(j["prime"].get<long>());
  schema_fail("/field", "expected \"QQ\" or {\"prime\": p}");
}

}  // namespace

Session session_from_json(const json& j, const std::string& path,
                          const ResourceLimits& base_limits) {
  if (!j.is_object()) schema_fail("", "top level must be an object");
  for (const char* key : {"field", "vars", "ideal"})
    if (!j.contains(key)) schema_fail("/" + std::string(key), "missing required key");

  Session s;
  s.path = path;
  s.field = parse_field(j["field"]);

  if (!j["vars"].is_array() || j["vars"].empty()) schema_fail("/vars", "expected a nonempty array");
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) schema_fail("/vars", "variable names must be strings");
    vars.push_back(v.get<std::string>());
  }

  s.limits = base_limits;
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) schema_fail("/options", "expected an object");
    if (o.contains("max_degree")) s.limits.max_degree = o["max_degree"].get<int>();
    if (o.contains("max_pairs")) s.limits.max_pairs = o["max_pairs"].get<long>();
    if (o.contains("seed")) s.seed = o["seed"].get<uint64_t>();
  }

  s.ring = make_ring(s.field, vars, MonomialOrder::grevlex());

  if (!j["ideal"].is_array()) schema_fail("/ideal", "expected an array of polynomial strings");
  std::vector<Poly> gens;
  for (const auto& g : j["ideal"]) {
    if (!g.is_string()) schema_fail("/ideal", "generators must be strings");
    gens.push_back(poly_parse(g.get<std::string>(), s.ring));
  }
  s.variety = make_variety(s.ring, make_ideal(s.ring, std::move(gens)), s.limits);

  if (j.contains("maps")) {
    if (!j["maps"].is_object()) schema_fail("/maps", "expected an object");
    for (const auto& [name, mj] : j["maps"].items()) {
      if (!mj.is_object() || !mj.contains("degree") || !mj.contains("forms"))
        schema_fail("/maps/" + name, "expected {degree, forms}");
      if (!mj["degree"].is_number_integer())
        throw Error(ErrorKind::NonIntegerCoefficient,
                    "map '" + name + "' degree must be an integer");
      int degree = mj["degree"].get<int>();
      if (!mj["forms"].is_array()) schema_fail("/maps/" + name + "/forms", "expected an array");
      std::vector<Poly> forms;
      for (const auto& f : mj["forms"]) {
        if (!f.is_string()) schema_fail("/maps/" + name + "/forms", "forms must be strings");
        forms.push_back(poly_parse(f.get<std::string>(), s.ring));
      }
      RationalMap h;
      try {
        h = make_map(s.variety, std::move(forms));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Homogeneity)
          throw Error(ErrorKind::Homogeneity, "map '" + name + "': " + e.what());
        throw;
      }
      if (h.degree != degree)
        throw Error(ErrorKind::Homogeneity, "map '" + name + "' declares degree " +
                                                std::to_string(degree) + " but forms have degree " +
                                                std::to_string(h.degree));
      s.maps.emplace_back(name, std::move(h));
    }
  }

  s.digest = [&] {
    std::ostringstream os;
    os << session_to_json(s).dump();
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx",
             static_cast<unsigned long long>(fnv1a64(os.str())));
    return std::string("fnv1a:") + buf;
  }();
  return s;
}

Session load_session(const std::string& path, const ResourceLimits& base_limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open session file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Schema, "invalid JSON in '" + path + "': " + e.what());
  }
  return session_from_json(j, path, base_limits);
}

ordered_json session_to_json(const Session& s) {
  ordered_json j;
  if (s.field.kind == FieldKind::Rationals) j["field"] = "QQ";
  else j["field"] = ordered_json{{"prime", s.field.p}};
  j["vars"] = s.ring->vars;
  ordered_json ideal = ordered_json::array();
  for (const auto& g : s.variety->defining_ideal().gens) ideal.push_back(g.to_string());
  j["ideal"] = ideal;
  ordered_json maps = ordered_json::object();
  for (const auto& [name, h] : s.maps) {
    ordered_json forms = ordered_json::array();
    for (const auto& f : h.forms) forms.push_back(f.to_string());
    maps[name] = ordered_json{{"degree", h.degree}, {"forms", forms}};
  }
  j["maps"] = maps;
  j["options"] = ordered_json{{"max_degree", s.limits.max_degree},
                              {"max_pairs", s.limits.max_pairs},
                              {"seed", s.seed}};
  return j;
}

ordered_json make_report(const std::string& command, const Session* session,
                         const ordered_json& params, const ordered_json& verdicts,
                         const ordered_json& witnesses, double total_ms,
                         const ResourceLimits& limits) {
  ordered_json r;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = command;
  ordered_json inputs;
  inputs["session"] = session ? session->path : "";
  inputs["digest"] = session ? session->digest : "";
  inputs["params"] = params;
  r["inputs"] = inputs;
  r["verdicts"] = verdicts;
  r["witnesses"] = witnesses;
  r["timings_ms"] = ordered_json{{"total", total_ms}};
  r["limits"] = ordered_json{{"max_degree", limits.max_degree}, {"max_pairs", limits.max_pairs}};
  return r;
}

bool report_conforms(const json& report, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (!report.is_object()) return fail("report must be an object");
  if (!report.contains("schema_version") || !report["schema_version"].is_string())
    return fail("schema_version missing");
  if (report["schema_version"].get<std::string>() != kReportSchemaVersion)
    return fail("schema_version mismatch");
  if (!report.contains("command") || !report["command"].is_string())
    return fail("command missing");
  if (!report.contains("inputs") || !report["inputs"].is_object())
    return fail("inputs missing");
  const json& in = report["inputs"];
  for (const char* k : {"session", "digest"})
    if (!in.contains(k) || !in[k].is_string()) return fail(std::string("inputs.") + k + " missing");
  if (!in.contains("params") || !in["params"].is_object()) return fail("inputs.params missing");
  if (!report.contains("verdicts") || !report["verdicts"].is_object())
    return fail("verdicts missing");
  if (!report.contains("witnesses") || !report["witnesses"].is_object())
    return fail("witnesses missing");
  if (!report.contains("timings_ms") || !report["timings_ms"].is_object() ||
      !report["timings_ms"].contains("total"))
    return fail("timings_ms.total missing");
  if (!report.contains("limits") || !report["limits"].is_object())
    return fail("limits missing");
  for (const char* k : {"max_degree", "max_pairs"})
    if (!report["limits"].contains(k) || !report["limits"][k].is_number_integer())
      return fail(std::string("limits.") + k + " missing");
  return true;
}

}  // namespace birkit
