// Batch front-end: parse system/element files, dispatch to the library,
// emit deterministic JSON (17 significant digits, sorted orders).
//
// Exit codes: 0 success, 2 parse failure, 3 domain error, 4 tolerance not
// met.  Errors go to stderr as {"error": {"kind": ..., "message": ...}}.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ell1/json_io.hpp"

namespace {

using namespace ell1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const JsonValue& value, const std::string& output_path) {
  const std::string text = value.dump() + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + output_path + "'");
  out << text;
}

Complex parse_complex_flag(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("cannot parse complex flag '" + text + "' (want re,im)");
  }
}

struct Options {
  std::string system_path;
  std::string element_path;
  std::string output_path;
  std::string x_text;
  std::string lambda_text = "1,0";
  std::string rho_path, tau_path, vector_path;
  std::string ideal_text, id1_text, id2_text;
  std::string set_path;
  std::vector<std::string> arcs;
  std::vector<double> forbidden_points;
  double lambda0 = 0.0;
  double tol = 1e-9;
  double gamma = 0.5;
  double p_order = 0.0;  // 0 = keep the vector's marker
  long long window = 8;
  long long max_n = 2000;
  int samples = 128;
  int max_steps = 64;
  long long cap_n1 = -1, cap_n2 = -1;
  bool certify = false;
  std::string validate_path, validate_kind;
  std::vector<std::string> orbit_points;
};

DynSystem load_system(const Options& opt) {
  if (opt.system_path.empty()) throw ParseError("--system is required");
  return parse_system(read_file(opt.system_path));
}

std::string maybe_inline_or_file(const std::string& text) {
  // Ideal/set arguments may be inline JSON or a path to a file.
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return text;
  return read_file(text);
}

int run_orbits(const Options& opt) {
  DynSystem sys = load_system(opt);
  std::vector<Point> samples;
  for (const std::string& s : opt.orbit_points) samples.push_back(parse_point(sys, s));
  JsonValue arr = JsonValue::array();
  for (const Orbit& o : orbit_space(sys, samples)) arr.push_back(orbit_to_json(o));
  emit(arr, opt.output_path);
  return 0;
}

int run_predicates(const Options& opt) {
  const SystemPredicates p = system_predicates(load_system(opt));
  auto field = [](const std::optional<bool>& v) {
    return v ? JsonValue::boolean(*v) : JsonValue::null();
  };
  JsonValue out = JsonValue::object();
  out.set("free", field(p.free));
  out.set("topologically_free", field(p.topologically_free));
  out.set("topologically_transitive", field(p.topologically_transitive));
  emit(out, opt.output_path);
  return 0;
}

int run_rep_matrix(const Options& opt) {
  DynSystem sys = load_system(opt);
  const Point x = parse_point(sys, opt.x_text);
  const PeriodicRep rep = make_periodic_rep(sys, x, parse_complex_flag(opt.lambda_text));
  const AlgebraElement a = parse_element(sys, read_file(opt.element_path));
  emit(matrix_to_json(periodic_rep_matrix(rep, a)), opt.output_path);
  return 0;
}

int run_apply(const Options& opt) {
  DynSystem sys = load_system(opt);
  const Point x = parse_point(sys, opt.x_text);
  const AlgebraElement a = parse_element(sys, read_file(opt.element_path));
  const SeqVector v = parse_seq_vector(read_file(opt.vector_path));
  emit(seq_vector_to_json(aperiodic_apply(sys, x, a, v)), opt.output_path);
  return 0;
}

int run_solve(const Options& opt) {
  DynSystem sys = load_system(opt);
  const Point x = parse_point(sys, opt.x_text);
  const SeqVector rho = parse_seq_vector(read_file(opt.rho_path));
  const SeqVector tau = parse_seq_vector(read_file(opt.tau_path));
  const DensitySolveResult res =
      density_solve(sys, x, rho, tau, opt.gamma, opt.max_steps, opt.cap_n1, opt.cap_n2);
  JsonValue out = JsonValue::object();
  out.set("element", element_to_json(res.a));
  JsonValue norms = JsonValue::array();
  for (double r : res.residual_norms) norms.push_back(JsonValue::number(r));
  out.set("residual_norms", std::move(norms));
  out.set("steps", JsonValue::integer(res.steps));
  out.set("n0", JsonValue::integer(res.n0));
  out.set("epsilon", JsonValue::number(res.epsilon_achieved));
  emit(out, opt.output_path);
  return 0;
}

int run_extract(const Options& opt) {
  DynSystem sys = load_system(opt);
  const Point x = parse_point(sys, opt.x_text);
  SeqVector rho = parse_seq_vector(read_file(opt.rho_path));
  if (opt.p_order != 0.0) {
    SeqVector reordered(opt.p_order);
    for (const auto& [k, v] : rho.entries()) reordered.set(k, v);
    rho = reordered;
  }
  const ExtractResult res = extract_basis_vector(sys, x, rho, opt.window);
  JsonValue out = JsonValue::object();
  out.set("vector", seq_vector_to_json(res.vector));
  out.set("error_bound", JsonValue::number(res.error_bound));
  out.set("p", std::isinf(res.p) ? JsonValue::string("inf") : JsonValue::number(res.p));
  emit(out, opt.output_path);
  return 0;
}

int run_ideal_member(const Options& opt) {
  DynSystem sys = load_system(opt);
  const PrimitiveIdealId id = parse_ideal(sys, maybe_inline_or_file(opt.ideal_text));
  const AlgebraElement a = parse_element(sys, read_file(opt.element_path));
  JsonValue out = JsonValue::object();
  out.set("member", JsonValue::boolean(is_member(a, id, opt.tol)));
  if (const PeriodicIdeal* p = id.periodic())
    out.set("max_strand", JsonValue::number(max_strand_modulus(a, p->orbit, p->lambda)));
  emit(out, opt.output_path);
  return 0;
}

int run_radical_witness(const Options& opt) {
  DynSystem sys = load_system(opt);
  const AlgebraElement a = parse_element(sys, read_file(opt.element_path));
  JsonValue out = JsonValue::object();
  if (auto id = radical_witness(sys, a, opt.tol)) {
    out.set("witness", ideal_to_json(*id));
    if (const PeriodicIdeal* p = id->periodic())
      out.set("strand_modulus", JsonValue::number(max_strand_modulus(a, p->orbit, p->lambda)));
  } else {
    out.set("witness", JsonValue::null());
  }
  emit(out, opt.output_path);
  return 0;
}

int run_inclusion(const Options& opt) {
  DynSystem sys = load_system(opt);
  const PrimitiveIdealId id1 = parse_ideal(sys, maybe_inline_or_file(opt.id1_text));
  const PrimitiveIdealId id2 = parse_ideal(sys, maybe_inline_or_file(opt.id2_text));
  JsonValue out = JsonValue::object();
  out.set("included", JsonValue::boolean(ideal_inclusion(id1, id2)));
  emit(out, opt.output_path);
  return 0;
}

int run_spectrum(const Options& opt) {
  DynSystem sys = load_system(opt);
  const AlgebraElement a = parse_element(sys, read_file(opt.element_path));
  std::vector<Orbit> orbits;
  for (const std::string& s : opt.orbit_points)
    orbits.push_back(orbit(sys, parse_point(sys, s)));
  JsonValue arr = JsonValue::array();
  for (const Complex& ev : spectrum_union(sys, a, opt.samples, orbits))
    arr.push_back(complex_to_json(ev));
  emit(arr, opt.output_path);
  return 0;
}

int run_closure(const Options& opt) {
  DynSystem sys = load_system(opt);
  const StructureSet e = parse_structure_set(maybe_inline_or_file(opt.set_path));
  const ClosureResult res = hk_closure(sys, e, opt.certify, opt.tol);
  JsonValue out = JsonValue::object();
  out.set("closure", structure_set_to_json(res.closure));
  if (opt.certify) {
    JsonValue certs = JsonValue::array();
    for (const ClosureCertificate& c : res.certificates) {
      JsonValue jc = JsonValue::object();
      jc.set("orbit", JsonValue::integer(c.orbit_key));
      jc.set("lambda_angle", JsonValue::number(c.lambda_angle));
      jc.set("max_on_set", JsonValue::number(c.max_on_set));
      jc.set("value_outside", JsonValue::number(c.value_outside));
      jc.set("element", element_to_json(c.element));
      certs.push_back(std::move(jc));
    }
    out.set("certificates", std::move(certs));
  }
  emit(out, opt.output_path);
  return 0;
}

int run_witness(const Options& opt) {
  std::vector<std::pair<double, double>> arcs;
  for (const std::string& a : opt.arcs) {
    const auto comma = a.find(',');
    if (comma == std::string::npos) throw ParseError("--arc wants lo,hi");
    arcs.emplace_back(std::stod(a.substr(0, comma)), std::stod(a.substr(comma + 1)));
  }
  const CircleSet forbidden(arcs, opt.forbidden_points);
  const WienerWitness w = wiener_witness(forbidden, opt.lambda0, opt.tol, opt.max_n);
  emit(witness_to_json(w), opt.output_path);
  return 0;
}

int run_structure(const Options& opt) {
  const StructureDescription d = structure_space_describe(load_system(opt));
  JsonValue out = JsonValue::object();
  out.set("kind", JsonValue::string(d.kind));
  if (d.kind == "finite_perm") {
    JsonValue comps = JsonValue::array();
    for (const StructureComponent& c : d.components) {
      JsonValue jc = JsonValue::object();
      JsonValue pts = JsonValue::array();
      for (int i : c.orbit) pts.push_back(JsonValue::integer(i));
      jc.set("orbit", std::move(pts));
      jc.set("space", JsonValue::string(c.space));
      comps.push_back(std::move(jc));
    }
    out.set("components", std::move(comps));
  } else {
    out.set("components", JsonValue::integer(1));
    out.set("description", JsonValue::string("T x T"));
    out.set("chart", JsonValue::string("theta -> q*theta mod 1"));
    out.set("q", JsonValue::integer(*d.chart_q));
    JsonValue table = JsonValue::array();
    for (const auto& row : d.chart_samples) {
      JsonValue r = JsonValue::array();
      for (double v : row) r.push_back(JsonValue::number(v));
      table.push_back(std::move(r));
    }
    out.set("verification", std::move(table));
  }
  emit(out, opt.output_path);
  return 0;
}

int run_validate(const Options& opt) {
  std::optional<DynSystem> sys;
  if (!opt.system_path.empty()) sys = load_system(opt);
  const auto diags =
      validate_formats(read_file(opt.validate_path), opt.validate_kind, sys ? &*sys : nullptr);
  JsonValue arr = JsonValue::array();
  for (const Diagnostic& d : diags) {
    JsonValue jd = JsonValue::object();
    jd.set("path", JsonValue::string(d.path));
    jd.set("message", JsonValue::string(d.message));
    arr.push_back(std::move(jd));
  }
  JsonValue out = JsonValue::object();
  out.set("diagnostics", std::move(arr));
  emit(out, opt.output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in the crossed-product algebra of a dynamical system"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_system = true) {
    if (with_system) sub->add_option("--system", opt.system_path, "system descriptor JSON file");
    sub->add_option("--output,-o", opt.output_path, "output path (default stdout)");
    return sub;
  };

  auto* orbits_cmd = add_common(app.add_subcommand("orbits", "orbit decomposition"));
  orbits_cmd->add_option("--points", opt.orbit_points, "sample points (rotation backend)")
      ->delimiter(',');

  add_common(app.add_subcommand("predicates", "free / topologically free / transitive"));

  auto* repm = add_common(app.add_subcommand("rep-matrix", "matrix of an element"));
  repm->add_option("--x", opt.x_text, "periodic base point")->required();
  repm->add_option("--lambda", opt.lambda_text, "unimodular parameter re,im");
  repm->add_option("--element", opt.element_path, "element JSON file")->required();

  auto* applyc = add_common(app.add_subcommand("apply", "apply an element to a sequence"));
  applyc->add_option("--x", opt.x_text, "aperiodic base point")->required();
  applyc->add_option("--element", opt.element_path)->required();
  applyc->add_option("--vector", opt.vector_path)->required();

  auto* solve = add_common(app.add_subcommand("solve", "density solve pi(a) rho = tau"));
  solve->add_option("--x", opt.x_text)->required();
  solve->add_option("--rho", opt.rho_path)->required();
  solve->add_option("--tau", opt.tau_path)->required();
  solve->add_option("--gamma", opt.gamma, "target contraction rate in (0,1)");
  solve->add_option("--max-steps", opt.max_steps);
  solve->add_option("--cap-n1", opt.cap_n1, "forced truncation of the rho window");
  solve->add_option("--cap-n2", opt.cap_n2, "forced truncation of the residual window");

  auto* extract = add_common(app.add_subcommand("extract-e0", "basis vector extraction"));
  extract->add_option("--x", opt.x_text)->required();
  extract->add_option("--rho", opt.rho_path)->required();
  extract->add_option("--N", opt.window, "window radius");
  extract->add_option("--p", opt.p_order, "norm order override");

  auto* member = add_common(app.add_subcommand("ideal-member", "primitive ideal membership"));
  member->add_option("--ideal", opt.ideal_text, "ideal JSON (inline or file)")->required();
  member->add_option("--element", opt.element_path)->required();
  member->add_option("--tol", opt.tol);

  auto* radical = add_common(app.add_subcommand("radical-witness", "ideal separating a nonzero element"));
  radical->add_option("--element", opt.element_path)->required();
  radical->add_option("--tol", opt.tol);

  auto* incl = add_common(app.add_subcommand("inclusion", "ideal inclusion test"));
  incl->add_option("--id1", opt.id1_text)->required();
  incl->add_option("--id2", opt.id2_text)->required();

  auto* spec = add_common(app.add_subcommand("spectrum", "representation-level spectrum union"));
  spec->add_option("--element", opt.element_path)->required();
  spec->add_option("--samples", opt.samples, "number of lambda samples")
      ->check(CLI::PositiveNumber);
  spec->add_option("--points", opt.orbit_points, "orbit sample points (rotation backend)")
      ->delimiter(',');

  auto* closure = add_common(app.add_subcommand("closure", "hull-kernel closure"));
  closure->add_option("--set", opt.set_path, "structure set JSON (inline or file)")->required();
  closure->add_flag("--certify", opt.certify, "emit separating certificates");
  closure->add_option("--tol", opt.tol);

  auto* witness = add_common(app.add_subcommand("witness", "Wiener witness construction"), false);
  witness->add_option("--arc", opt.arcs, "forbidden arc lo,hi (repeatable)");
  witness->add_option("--point", opt.forbidden_points, "forbidden point (repeatable)");
  witness->add_option("--lambda0", opt.lambda0, "target angle in turns")->required();
  witness->add_option("--tol", opt.tol)->required();
  witness->add_option("--maxN", opt.max_n, "largest truncation order");

  add_common(app.add_subcommand("structure", "structure space description"));

  auto* validate = add_common(app.add_subcommand("validate", "schema validation"), true);
  validate->add_option("--file", opt.validate_path)->required();
  validate->add_option("--kind", opt.validate_kind,
                       "system|element|vector|ideal|circleset|structureset");

  CLI11_PARSE(app, argc, argv);

  auto fail = [](const char* kind, const std::string& message, int code) {
    ell1::JsonValue err = ell1::JsonValue::object();
    ell1::JsonValue body = ell1::JsonValue::object();
    body.set("kind", ell1::JsonValue::string(kind));
    body.set("message", ell1::JsonValue::string(message));
    err.set("error", std::move(body));
    std::cerr << err.dump() << "\n";
    return code;
  };

  try {
    if (app.got_subcommand("orbits")) return run_orbits(opt);
    if (app.got_subcommand("predicates")) return run_predicates(opt);
    if (app.got_subcommand("rep-matrix")) return run_rep_matrix(opt);
    if (app.got_subcommand("apply")) return run_apply(opt);
    if (app.got_subcommand("solve")) return run_solve(opt);
    if (app.got_subcommand("extract-e0")) return run_extract(opt);
    if (app.got_subcommand("ideal-member")) return run_ideal_member(opt);
    if (app.got_subcommand("radical-witness")) return run_radical_witness(opt);
    if (app.got_subcommand("inclusion")) return run_inclusion(opt);
    if (app.got_subcommand("spectrum")) return run_spectrum(opt);
    if (app.got_subcommand("closure")) return run_closure(opt);
    if (app.got_subcommand("witness")) return run_witness(opt);
    if (app.got_subcommand("structure")) return run_structure(opt);
    if (app.got_subcommand("validate")) return run_validate(opt);
  } catch (const ell1::ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const ell1::ToleranceError& e) {
    return fail("tolerance", e.what(), 4);
  } catch (const ell1::DomainError& e) {
    return fail("domain", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("domain", e.what(), 3);
  }
  return 0;
}
