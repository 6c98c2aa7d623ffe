#include "rescycle/caseio.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rescycle/errors.hpp"
#include "rescycle/parser.hpp"

namespace rescycle {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(ErrKind::Parse, "unknown key \"" + it.key() + "\" in " + where);
  }
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrKind::Parse, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(ErrKind::Parse, std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

int int_field(const json& j, const char* what, int lo) {
  if (!j.is_number_integer())
    fail(ErrKind::Parse, std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < lo)
    fail(ErrKind::Parse, std::string(what) + " must be >= " + std::to_string(lo));
  return static_cast<int>(v);
}

FreeComplex parse_resolution(const json& j, const VarTable& vars) {
  if (!j.is_object()) fail(ErrKind::Parse, "resolution must be an object");
  check_keys(j, {"ranks", "maps"}, "resolution");
  if (!j.contains("ranks") || !j.contains("maps"))
    fail(ErrKind::Parse, "resolution needs \"ranks\" and \"maps\"");
  if (!j.at("ranks").is_array()) fail(ErrKind::Parse, "resolution ranks must be an array");
  std::vector<std::size_t> ranks;
  for (const auto& e : j.at("ranks"))
    ranks.push_back(static_cast<std::size_t>(int_field(e, "resolution rank", 1)));
  const json& maps = j.at("maps");
  if (!maps.is_array() || maps.size() + 1 != ranks.size())
    fail(ErrKind::Parse, "resolution needs one map per pair of adjacent levels");
  std::vector<SuperMat<Form>> diffs;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const json& mj = maps[k];
    const std::size_t rows = ranks[k], cols = ranks[k + 1];
    if (!mj.is_array() || mj.size() != rows)
      fail(ErrKind::Parse, "resolution map " + std::to_string(k + 1) + " must have " +
                               std::to_string(rows) + " rows");
    auto phi = SuperMat<Form>::zero(static_cast<int>(k) + 1, static_cast<int>(k), rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!mj[r].is_array() || mj[r].size() != cols)
        fail(ErrKind::Parse, "resolution map " + std::to_string(k + 1) + " row " +
                                 std::to_string(r) + " must have " + std::to_string(cols) +
                                 " entries");
      for (std::size_t cidx = 0; cidx < cols; ++cidx) {
        if (!mj[r][cidx].is_string())
          fail(ErrKind::Parse, "resolution entries must be polynomial strings");
        phi.at(r, cidx) =
            Form::scalar(RatFun(parse_poly(mj[r][cidx].get<std::string>(), vars)));
      }
    }
    diffs.push_back(std::move(phi));
  }
  return make_complex(vars.size(), std::move(ranks), std::move(diffs));
}

std::string component_name(const std::vector<int>& vs, const VarTable& vars) {
  std::string s = "[";
  for (int v : vs) s += vars.name(v) + "=";
  return s + "0]";
}

json cycle_json(const Cycle& c, const VarTable& vars) {
  json arr = json::array();
  for (const auto& [vs, mass] : c.comps) {
    json comp;
    json names = json::array();
    for (int v : vs) names.push_back(vars.name(v));
    comp["vars"] = names;
    comp["mass"] = rat_to_string(mass.rat);
    comp["tpi"] = mass.tpi;
    arr.push_back(comp);
  }
  return arr;
}

} // namespace

Case parse_case_text(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrKind::Parse, std::string("malformed case document: ") + e.what());
  }
  // structured reports wrap the original input under "case"
  if (doc.is_object() && doc.contains("case")) doc = doc.at("case");
  if (!doc.is_object()) fail(ErrKind::Parse, "case document must be an object");
  check_keys(doc, {"variables", "ideal", "mode", "resolution", "ci_tuple", "currents", "options"},
             "case");
  if (!doc.contains("variables")) fail(ErrKind::Parse, "missing required key \"variables\"");
  if (!doc.contains("ideal")) fail(ErrKind::Parse, "missing required key \"ideal\"");

  Case c;
  c.name = name;
  c.vars = VarTable(string_array(doc.at("variables"), "variables"));
  std::vector<Monomial> gens;
  for (const auto& s : string_array(doc.at("ideal"), "ideal"))
    gens.push_back(parse_monomial(s, c.vars));
  c.ideal = MonomialIdeal(c.vars.size(), std::move(gens));

  if (doc.contains("mode")) {
    if (!doc.at("mode").is_string()) fail(ErrKind::Parse, "mode must be a string");
    c.mode = mode_from_string(doc.at("mode").get<std::string>());
  }
  if (doc.contains("resolution")) c.resolution = parse_resolution(doc.at("resolution"), c.vars);
  if (doc.contains("ci_tuple"))
    for (const auto& s : string_array(doc.at("ci_tuple"), "ci_tuple"))
      c.ci_tuple.push_back(parse_monomial(s, c.vars));
  if (doc.contains("currents")) {
    const json& cur = doc.at("currents");
    if (!cur.is_array()) fail(ErrKind::Parse, "currents must be an array of columns");
    for (std::size_t k = 0; k < cur.size(); ++k) {
      std::vector<CurrentSum> col;
      for (const auto& s :
           string_array(cur[k], ("currents column " + std::to_string(k + 1)).c_str()))
        col.push_back(parse_current(s, c.vars));
      c.currents.push_back(std::move(col));
    }
  }
  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) fail(ErrKind::Parse, "options must be an object");
    check_keys(o, {"lift_bound", "seed", "emit_intermediates"}, "options");
    if (o.contains("lift_bound")) c.options.lift_bound = int_field(o.at("lift_bound"), "lift_bound", 1);
    if (o.contains("seed")) {
      if (!o.at("seed").is_number_integer() || o.at("seed").get<long long>() < 0)
        fail(ErrKind::Parse, "seed must be a nonnegative integer");
      c.options.seed = o.at("seed").get<std::uint64_t>();
    }
    if (o.contains("emit_intermediates")) {
      if (!o.at("emit_intermediates").is_string())
        fail(ErrKind::Parse, "emit_intermediates must be a string");
      c.options.emit_intermediates = o.at("emit_intermediates").get<std::string>();
    }
  }
  c.source = doc.dump();
  return c;
}

Case parse_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::Parse, "cannot read case file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos) stem = stem.substr(pos + 1);
  if (auto pos = stem.rfind('.'); pos != std::string::npos && pos > 0) stem = stem.substr(0, pos);
  return parse_case_text(buf.str(), stem);
}

std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.title << " ==\n";
  os << "computed: " << to_string(r.computed, r.vars) << "; oracle: " << to_string(r.oracle, r.vars)
     << "; " << (r.match ? "PASS" : "FAIL") << "\n";
  if (!r.match) {
    std::set<std::vector<int>> keys;
    for (const auto& [k, v] : r.computed.comps) keys.insert(k);
    for (const auto& [k, v] : r.oracle.comps) keys.insert(k);
    for (const auto& k : keys) {
      auto ic = r.computed.comps.find(k);
      auto io = r.oracle.comps.find(k);
      Scalar sc = ic == r.computed.comps.end() ? Scalar() : ic->second;
      Scalar so = io == r.oracle.comps.end() ? Scalar() : io->second;
      if (!(sc == so))
        os << "  mass at " << component_name(k, r.vars) << ": computed " << to_string(sc)
           << ", oracle " << to_string(so) << "\n";
    }
  }
  if (!r.remainder.is_zero())
    os << "  unrecognized remainder: " << to_string(r.remainder, r.vars) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "  (" << r.elapsed_ms << " ms)\n";
  return os.str();
}

std::string render_report_structured(const Case& c, const Report& r) {
  json out;
  json cj;
  if (!c.source.empty()) {
    cj = json::parse(c.source);
  } else {
    json names = json::array();
    for (const auto& n : c.vars.names()) names.push_back(n);
    cj["variables"] = names;
    json gens = json::array();
    for (const auto& g : c.ideal.gens()) gens.push_back(Poly::monomial(g, 1).to_string(c.vars));
    cj["ideal"] = gens;
    cj["mode"] = to_string(c.mode);
  }
  out["case"] = cj;
  json rep;
  rep["title"] = r.title;
  rep["match"] = r.match;
  rep["computed"] = cycle_json(r.computed, r.vars);
  rep["oracle"] = cycle_json(r.oracle, r.vars);
  rep["computed_text"] = to_string(r.computed, r.vars);
  rep["oracle_text"] = to_string(r.oracle, r.vars);
  if (!r.remainder.is_zero()) rep["remainder"] = to_string(r.remainder, r.vars);
  rep["notes"] = r.notes;
  json inter = json::object();
  for (const auto& [k, v] : r.intermediates) inter[k] = v;
  rep["intermediates"] = inter;
  rep["elapsed_ms"] = r.elapsed_ms;
  out["report"] = rep;
  return out.dump(2);
}

} // namespace rescycle
