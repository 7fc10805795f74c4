#include "ell1/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace ell1 {

using nlohmann::json;

// ---------------------------------------------------------------- output --

JsonValue JsonValue::null() { return JsonValue(); }
JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}
JsonValue JsonValue::number(double x) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.num_ = (x == 0.0) ? 0.0 : x;  // normalize -0
  return v;
}
JsonValue JsonValue::integer(long long n) {
  JsonValue v;
  v.kind_ = Kind::Integer;
  v.int_ = n;
  return v;
}
JsonValue JsonValue::string(std::string s) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.str_ = std::move(s);
  return v;
}
JsonValue JsonValue::array(std::vector<JsonValue> items) {
  JsonValue v;
  v.kind_ = Kind::Array;
  v.items_ = std::move(items);
  return v;
}
JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

void JsonValue::push_back(JsonValue v) {
  if (kind_ != Kind::Array) throw DomainError("push_back on a non-array json value");
  items_.push_back(std::move(v));
}

void JsonValue::set(const std::string& key, JsonValue v) {
  if (kind_ != Kind::Object) throw DomainError("set on a non-object json value");
  for (auto& [k, old] : fields_) {
    if (k == key) {
      old = std::move(v);
      return;
    }
  }
  fields_.emplace_back(key, std::move(v));
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite number in json output");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  const bool pretty = indent >= 0;
  auto pad = [&](int d) {
    if (pretty) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent) * d, ' ');
    }
  };
  switch (kind_) {
    case Kind::Null: out += "null"; return;
    case Kind::Bool: out += bool_ ? "true" : "false"; return;
    case Kind::Number: write_number(out, num_); return;
    case Kind::Integer: out += std::to_string(int_); return;
    case Kind::String: write_escaped(out, str_); return;
    case Kind::Array: {
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        pad(depth + 1);
        items_[i].write(out, indent, depth + 1);
      }
      if (!items_.empty()) pad(depth);
      out += ']';
      return;
    }
    case Kind::Object: {
      out += '{';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ',';
        pad(depth + 1);
        write_escaped(out, fields_[i].first);
        out += pretty ? ": " : ":";
        fields_[i].second.write(out, indent, depth + 1);
      }
      if (!fields_.empty()) pad(depth);
      out += '}';
      return;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

JsonValue complex_to_json(Complex z) {
  JsonValue pair = JsonValue::array();
  pair.push_back(JsonValue::number(z.real()));
  pair.push_back(JsonValue::number(z.imag()));
  return pair;
}

// --------------------------------------------------------------- parsing --

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Rational parse_rational_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational '" + s + "'");
  }
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

long long parse_index_key(const std::string& key, const std::string& where) {
  long long n = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
  if (ec != std::errc() || ptr != key.data() + key.size())
    throw ParseError(where + ": key '" + key + "' is not an integer");
  return n;
}

FunctionOnX parse_function(const DynSystem& sys, const json& j) {
  if (!j.is_object()) throw ParseError("function: expected an object");
  if (j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array()) throw ParseError("function: 'table' must be an array");
    DenseTable table;
    for (const auto& v : t)
      table.values.push_back(GaussianRational::from_complex(parse_complex(v, "table")));
    return FunctionOnX(sys, std::move(table));
  }
  if (j.contains("trig")) {
    const json& t = j["trig"];
    if (!t.is_object()) throw ParseError("function: 'trig' must be an object");
    TrigPolynomial trig;
    for (const auto& [key, v] : t.items())
      trig.coeffs[parse_index_key(key, "trig")] = parse_complex(v, "trig");
    return FunctionOnX(sys, std::move(trig));
  }
  if (j.contains("orbit_table")) {
    const json& t = j["orbit_table"];
    if (!t.is_object()) throw ParseError("function: 'orbit_table' must be an object");
    std::map<long long, GaussianRational> entries;
    for (const auto& [key, v] : t.items())
      entries[parse_index_key(key, "orbit_table")] =
          GaussianRational::from_complex(parse_complex(v, "orbit_table"));
    OrbitTable table;
    if (j.contains("background"))
      table.background = GaussianRational::from_complex(parse_complex(j["background"], "background"));
    if (!entries.empty()) {
      table.lo = entries.begin()->first;
      const long long hi = entries.rbegin()->first;
      table.values.assign(static_cast<std::size_t>(hi - table.lo + 1), table.background);
      for (const auto& [k, v] : entries)
        table.values[static_cast<std::size_t>(k - table.lo)] = v;
    }
    return FunctionOnX(sys, std::move(table));
  }
  throw ParseError("function: expected one of 'table', 'trig', 'orbit_table'");
}

JsonValue function_to_json(const FunctionOnX& f) {
  JsonValue out = JsonValue::object();
  if (const DenseTable* t = f.as_table()) {
    JsonValue arr = JsonValue::array();
    for (const auto& v : t->values) arr.push_back(complex_to_json(v.to_complex()));
    out.set("table", std::move(arr));
    return out;
  }
  if (const TrigPolynomial* t = f.as_trig()) {
    JsonValue obj = JsonValue::object();
    for (const auto& [m, c] : t->coeffs) obj.set(std::to_string(m), complex_to_json(c));
    out.set("trig", std::move(obj));
    return out;
  }
  const OrbitTable& t = *f.as_orbit_table();
  JsonValue obj = JsonValue::object();
  for (std::size_t i = 0; i < t.values.size(); ++i)
    obj.set(std::to_string(t.lo + static_cast<long long>(i)),
            complex_to_json(t.values[i].to_complex()));
  out.set("orbit_table", std::move(obj));
  if (!t.background.is_zero()) out.set("background", complex_to_json(t.background.to_complex()));
  return out;
}

}  // namespace

DynSystem parse_system(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("backend") || !j["backend"].is_string())
    throw ParseError("system: expected {\"backend\": ...}");
  const std::string backend = j["backend"].get<std::string>();
  if (backend == "finite_perm") {
    if (!j.contains("perm") || !j["perm"].is_array())
      throw ParseError("system: finite_perm needs a 'perm' array");
    FinitePermutation fp;
    for (const auto& v : j["perm"]) {
      if (!v.is_number_integer()) throw ParseError("system: perm entries must be integers");
      fp.perm.push_back(v.get<int>());
    }
    return DynSystem(fp);
  }
  if (backend == "rational_rotation") {
    if (!j.contains("p") || !j.contains("q") || !j["p"].is_number_integer() ||
        !j["q"].is_number_integer())
      throw ParseError("system: rational_rotation needs integer 'p' and 'q'");
    return DynSystem(RationalRotation{j["p"].get<long long>(), j["q"].get<long long>()});
  }
  if (backend == "aperiodic_orbit") {
    AperiodicOrbitModel m;
    if (j.contains("window")) {
      if (!j["window"].is_number_integer()) throw ParseError("system: 'window' must be an integer");
      m.window = j["window"].get<int>();
    }
    return DynSystem(m);
  }
  throw ParseError("system: unknown backend '" + backend + "'");
}

Point parse_point(const DynSystem& sys, const std::string& text) {
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      try {
        return PermPoint{std::stoi(text)};
      } catch (const std::exception&) {
        throw ParseError("point: expected an integer index");
      }
    }
    case Backend::RationalRot: {
      Rational r = parse_rational_string(text);
      if (r < 0 || r >= 1) throw DomainError("rotation point must lie in [0,1)");
      return RotPoint{std::move(r)};
    }
    case Backend::AperiodicOrbit: {
      try {
        return OrbitPoint{std::stoll(text)};
      } catch (const std::exception&) {
        throw ParseError("point: expected an integer orbit index");
      }
    }
  }
  throw ParseError("unreachable");
}

AlgebraElement parse_element(const DynSystem& sys, const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw ParseError("element: expected {\"coeffs\": {...}}");
  std::map<long long, FunctionOnX> coeffs;
  for (const auto& [key, v] : j["coeffs"].items())
    coeffs.emplace(parse_index_key(key, "coeffs"), parse_function(sys, v));
  return AlgebraElement(sys, std::move(coeffs));
}

SeqVector parse_seq_vector(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("vector: expected an object");
  double p = 1.0;
  if (j.contains("p")) {
    if (j["p"].is_string()) {
      if (j["p"].get<std::string>() != "inf") throw ParseError("vector: 'p' must be >= 1 or \"inf\"");
      p = std::numeric_limits<double>::infinity();
    } else if (j["p"].is_number()) {
      p = j["p"].get<double>();
    } else {
      throw ParseError("vector: 'p' must be a number or \"inf\"");
    }
  }
  if (!(p >= 1.0)) throw DomainError("vector norm order must satisfy p >= 1");
  SeqVector v(p);
  if (j.contains("entries")) {
    if (!j["entries"].is_object()) throw ParseError("vector: 'entries' must be an object");
    for (const auto& [key, val] : j["entries"].items())
      v.set(parse_index_key(key, "entries"), parse_complex(val, "entries"));
  }
  return v;
}

PrimitiveIdealId parse_ideal(const DynSystem& sys, const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("ideal: expected an object");
  if (j.contains("orbit_of")) {
    if (!j.contains("lambda")) throw ParseError("ideal: periodic ideal needs 'lambda'");
    const Complex lambda = parse_complex(j["lambda"], "lambda");
    Point x;
    if (j["orbit_of"].is_number_integer())
      x = parse_point(sys, std::to_string(j["orbit_of"].get<long long>()));
    else if (j["orbit_of"].is_string())
      x = parse_point(sys, j["orbit_of"].get<std::string>());
    else
      throw ParseError("ideal: 'orbit_of' must be a point");
    return make_periodic_ideal(sys, x, lambda);
  }
  if (j.contains("aperiodic_closure")) {
    const json& c = j["aperiodic_closure"];
    if (c.is_string() && c.get<std::string>() == "full_orbit") return make_full_orbit_ideal(sys);
    if (!c.is_array()) throw ParseError("ideal: 'aperiodic_closure' must be a list or \"full_orbit\"");
    std::vector<Point> pts;
    for (const auto& v : c) {
      if (v.is_number_integer())
        pts.push_back(parse_point(sys, std::to_string(v.get<long long>())));
      else if (v.is_string())
        pts.push_back(parse_point(sys, v.get<std::string>()));
      else
        throw ParseError("ideal: closure entries must be points");
    }
    return make_aperiodic_ideal(sys, std::move(pts));
  }
  throw ParseError("ideal: expected 'orbit_of' or 'aperiodic_closure'");
}

CircleSet parse_circle_set(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("circle set: expected an object");
  if (j.contains("full") && j["full"].is_boolean() && j["full"].get<bool>())
    return CircleSet::full();
  std::vector<std::pair<double, double>> arcs;
  if (j.contains("arcs")) {
    if (!j["arcs"].is_array()) throw ParseError("circle set: 'arcs' must be an array");
    for (const auto& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
        throw ParseError("circle set: arcs are [lo, hi] pairs");
      arcs.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
  }
  std::vector<double> points;
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw ParseError("circle set: 'points' must be an array");
    for (const auto& p : j["points"]) {
      if (!p.is_number()) throw ParseError("circle set: points are numbers");
      points.push_back(p.get<double>());
    }
  }
  return CircleSet(arcs, points);
}

StructureSet parse_structure_set(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("orbits") || !j["orbits"].is_object())
    throw ParseError("structure set: expected {\"orbits\": {...}}");
  StructureSet out;
  for (const auto& [key, v] : j["orbits"].items())
    out.set_part(static_cast<int>(parse_index_key(key, "orbits")), parse_circle_set(v.dump()));
  return out;
}

// ---------------------------------------------------------- serializers --

JsonValue system_to_json(const DynSystem& sys) {
  JsonValue out = JsonValue::object();
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      out.set("backend", JsonValue::string("finite_perm"));
      JsonValue arr = JsonValue::array();
      for (int v : sys.finite_perm().perm) arr.push_back(JsonValue::integer(v));
      out.set("perm", std::move(arr));
      return out;
    }
    case Backend::RationalRot:
      out.set("backend", JsonValue::string("rational_rotation"));
      out.set("p", JsonValue::integer(sys.rotation().p));
      out.set("q", JsonValue::integer(sys.rotation().q));
      return out;
    case Backend::AperiodicOrbit:
      out.set("backend", JsonValue::string("aperiodic_orbit"));
      out.set("window", JsonValue::integer(sys.orbit_model().window));
      return out;
  }
  throw DomainError("unreachable");
}

JsonValue point_to_json(const Point& x) {
  if (auto* p = std::get_if<PermPoint>(&x)) return JsonValue::integer(p->index);
  if (std::get_if<RotPoint>(&x)) return JsonValue::string(point_to_string(x));
  return JsonValue::integer(std::get<OrbitPoint>(x).k);
}

JsonValue element_to_json(const AlgebraElement& a) {
  JsonValue coeffs = JsonValue::object();
  for (const auto& [n, f] : a.coefficients()) coeffs.set(std::to_string(n), function_to_json(f));
  JsonValue out = JsonValue::object();
  out.set("coeffs", std::move(coeffs));
  return out;
}

JsonValue seq_vector_to_json(const SeqVector& v) {
  JsonValue out = JsonValue::object();
  if (std::isinf(v.norm_order()))
    out.set("p", JsonValue::string("inf"));
  else
    out.set("p", JsonValue::number(v.norm_order()));
  JsonValue entries = JsonValue::object();
  for (const auto& [k, val] : v.entries())
    entries.set(std::to_string(k), complex_to_json(val.to_complex()));
  out.set("entries", std::move(entries));
  return out;
}

JsonValue matrix_to_json(const ComplexMatrix& m) {
  JsonValue rows = JsonValue::array();
  for (int r = 0; r < m.dim(); ++r) {
    JsonValue row = JsonValue::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

JsonValue circle_set_to_json(const CircleSet& s) {
  JsonValue out = JsonValue::object();
  if (s.is_full()) {
    out.set("full", JsonValue::boolean(true));
    return out;
  }
  JsonValue arcs = JsonValue::array();
  for (const Arc& a : s.arcs()) {
    JsonValue pair = JsonValue::array();
    pair.push_back(JsonValue::number(a.lo));
    pair.push_back(JsonValue::number(a.lo + a.len));
    arcs.push_back(std::move(pair));
  }
  out.set("arcs", std::move(arcs));
  JsonValue pts = JsonValue::array();
  for (double p : s.points()) pts.push_back(JsonValue::number(p));
  out.set("points", std::move(pts));
  return out;
}

JsonValue structure_set_to_json(const StructureSet& s) {
  JsonValue orbits = JsonValue::object();
  for (const auto& [key, part] : s.parts())
    orbits.set(std::to_string(key), circle_set_to_json(part));
  JsonValue out = JsonValue::object();
  out.set("orbits", std::move(orbits));
  return out;
}

JsonValue ideal_to_json(const PrimitiveIdealId& id) {
  JsonValue out = JsonValue::object();
  if (const PeriodicIdeal* p = id.periodic()) {
    out.set("orbit_of", point_to_json(p->orbit.points.front()));
    out.set("lambda", complex_to_json(p->lambda));
    JsonValue orbit = JsonValue::array();
    for (const Point& x : p->orbit.points) orbit.push_back(point_to_json(x));
    out.set("orbit", std::move(orbit));
    return out;
  }
  const AperiodicIdeal& ap = *id.aperiodic();
  if (ap.full_orbit) {
    out.set("aperiodic_closure", JsonValue::string("full_orbit"));
    return out;
  }
  JsonValue pts = JsonValue::array();
  for (const Point& x : ap.closure_samples) pts.push_back(point_to_json(x));
  out.set("aperiodic_closure", std::move(pts));
  return out;
}

JsonValue orbit_to_json(const Orbit& o) {
  if (o.infinite) return JsonValue::string("infinite_orbit");
  JsonValue arr = JsonValue::array();
  for (const Point& x : o.points) arr.push_back(point_to_json(x));
  return arr;
}

JsonValue witness_to_json(const WienerWitness& w) {
  JsonValue out = JsonValue::object();
  JsonValue coeffs = JsonValue::object();
  for (const auto& [n, c] : w.coeffs) coeffs.set(std::to_string(n), complex_to_json(c));
  out.set("coefficients", std::move(coeffs));
  out.set("l1_norm", JsonValue::number(w.l1_norm));
  out.set("sup_on_forbidden", JsonValue::number(w.sup_on_forbidden));
  out.set("value_at_lambda0", complex_to_json(w.value_at_lambda0));
  out.set("truncation", JsonValue::integer(w.truncation));
  return out;
}

std::vector<Diagnostic> validate_formats(const std::string& text, const std::string& kind,
                                         const DynSystem* sys) {
  std::vector<Diagnostic> out;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    out.push_back({"", "malformed JSON"});
    return out;
  }
  std::string k = kind;
  if (k.empty()) {
    if (j.is_object() && j.contains("backend")) k = "system";
    else if (j.is_object() && j.contains("coeffs")) k = "element";
    else if (j.is_object() && j.contains("entries")) k = "vector";
    else if (j.is_object() && (j.contains("orbit_of") || j.contains("aperiodic_closure"))) k = "ideal";
    else if (j.is_object() && j.contains("orbits")) k = "structureset";
    else if (j.is_object() && (j.contains("arcs") || j.contains("points") || j.contains("full")))
      k = "circleset";
    else {
      out.push_back({"", "cannot determine the document kind"});
      return out;
    }
  }
  try {
    if (k == "system") {
      parse_system(text);
    } else if (k == "vector") {
      parse_seq_vector(text);
    } else if (k == "circleset") {
      parse_circle_set(text);
    } else if (k == "element" || k == "ideal" || k == "structureset") {
      if (k == "structureset") {
        parse_structure_set(text);
      } else {
        if (!sys) {
          out.push_back({"", k + " validation needs a --system context"});
          return out;
        }
        if (k == "element")
          parse_element(*sys, text);
        else
          parse_ideal(*sys, text);
      }
    } else {
      out.push_back({"", "unknown kind '" + k + "'"});
    }
  } catch (const std::exception& e) {
    out.push_back({k, e.what()});
  }
  return out;
}

}  // namespace ell1
