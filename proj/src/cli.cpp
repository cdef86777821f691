#include "deltader/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"
#include "deltader/gradings.hpp"
#include "deltader/halfring.hpp"
#include "deltader/serialize.hpp"
#include "deltader/super.hpp"

namespace deltader {

namespace {

// Constructor failures in `make` are input errors.
struct MakeError : InputError {
  using InputError::InputError;
};

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "QQ") return Field::rationals();
  std::string digits = s;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("unknown field '" + s + "' (use Q or GF(p))");
  return Field::prime_field(std::stoull(digits));
}

std::vector<long long> parse_integer_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer: '" + item + "'");
    }
  }
  return out;
}

void emit(std::ostream& out, const std::string& path, const json& j) {
  if (path.empty())
    out << canonical_dump(j);
  else
    write_text_file(path, canonical_dump(j));
}

json root_json(const Root& r) {
  json a = json::array();
  for (const auto& c : r) a.push_back(element_to_json(c));
  return a;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(element_to_json(c));
  return a;
}

struct MakeArgs {
  std::string kind, field = "Q", elements, left, right, input, out;
  long long n = 2, p = 5, k = 2, m = 3;
  std::optional<long long> modulus;
};

Algebra build_algebra(const MakeArgs& a) {
  try {
    const std::string& k = a.kind;
    if (k == "sl2") return make_sl(parse_field(a.field), 2);
    if (k == "sl") return make_sl(parse_field(a.field), static_cast<std::size_t>(a.n));
    if (k == "abelian") return make_abelian(parse_field(a.field), static_cast<std::size_t>(a.n));
    if (k == "witt") {
      if (a.elements.empty()) throw InputError("witt needs --elements");
      return make_witt_type(parse_field(a.field), WittSupport{parse_integer_list(a.elements), a.modulus});
    }
    if (k == "zassenhaus") return make_zassenhaus(static_cast<std::uint64_t>(a.p), static_cast<unsigned>(a.n));
    if (k == "divided-powers") return make_divided_powers(static_cast<std::uint64_t>(a.p), static_cast<unsigned>(a.n));
    if (k == "deformed-zassenhaus")
      return make_deformed_zassenhaus(static_cast<std::uint64_t>(a.p), static_cast<unsigned>(a.n));
    if (k == "truncated") return make_truncated_polynomials(parse_field(a.field), static_cast<std::size_t>(a.k));
    if (k == "elduque4") return make_elduque4(parse_field(a.field));
    if (k == "osp12") return make_osp12(parse_field(a.field));
    if (k == "current") {
      if (a.left.empty() || a.right.empty()) throw InputError("current needs --left and --right");
      return make_current(load_algebra(a.left), load_algebra(a.right));
    }
    if (k == "envelope") {
      if (a.input.empty()) throw InputError("envelope needs --input");
      return make_grassmann_envelope(load_algebra(a.input), static_cast<unsigned>(a.m));
    }
    if (k == "semidirect-adjoint") {
      if (a.input.empty()) throw InputError("semidirect-adjoint needs --input");
      return make_semidirect(ModuleAction::adjoint(load_algebra(a.input)));
    }
    throw InputError("unknown algebra kind '" + k + "'");
  } catch (const MathError& e) {
    throw MakeError(e.what());
  }
}

int cmd_make(const MakeArgs& a, std::ostream& out) {
  const Algebra A = build_algebra(a);
  if (!validate(A, default_law(A)).ok()) throw MakeError("constructed algebra fails " + to_string(default_law(A)));
  const json j = algebra_to_json(A);
  if (algebra_from_json(j) != A) throw std::logic_error("round trip changed the algebra");
  emit(out, a.out, j);
  if (!a.out.empty()) out << "wrote " << a.out << " (dim " << A.dim() << ")\n";
  return 0;
}

struct SolveArgs {
  std::string file, delta, kind = "der", out;
  bool parametric = false;
  int parity = 0;
  std::optional<std::size_t> bound;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Algebra A = load_algebra(a.file);
  const Field& f = A.field();
  if (a.parametric) {
    const ParametricResult r = solve_parametric(A, a.bound);
    out << "generic dim = " << r.generic_dim << "\n";
    for (const auto& [d, dim] : r.specials) out << "special delta = " << d.to_string() << ": dim = " << dim << "\n";
    if (!a.out.empty()) {
      json j;
      j["generic_dim"] = r.generic_dim;
      j["generic_rank"] = r.generic_rank;
      j["witness_minor_degree"] = r.witness_minor.degree();
      json sp = json::array();
      for (const auto& [d, dim] : r.specials) sp.push_back({{"delta", element_to_json(d)}, {"dim", dim}});
      j["specials"] = sp;
      write_text_file(a.out, canonical_dump(j));
    }
    return 0;
  }
  SolutionSpace s;
  auto need_delta = [&]() {
    if (a.delta.empty()) throw InputError("--delta is required for kind " + a.kind);
    return f.parse(a.delta);
  };
  if (a.kind == "der")
    s = solve_delta_derivations(A, need_delta());
  else if (a.kind == "superder")
    s = solve_superderivations(A, need_delta(), a.parity);
  else if (a.kind == "centroid")
    s = solve_centroid(A);
  else if (a.kind == "supercentroid")
    s = solve_supercentroid(A, a.parity);
  else if (a.kind == "quasider")
    s = solve_quasiderivations(A);
  else
    throw InputError("unknown kind '" + a.kind + "'");
  out << "dim = " << s.dim() << "\n";
  if (s.kind == SolutionKind::QuasiDer) out << "projection dim = " << quasiderivation_projection_dim(s) << "\n";
  if (!a.out.empty()) write_text_file(a.out, canonical_dump(solution_to_json(s)));
  return 0;
}

struct GradeArgs {
  std::string file, maps, delta = "1", out;
};

int cmd_grade(const GradeArgs& a, std::ostream& out) {
  const Algebra A = load_algebra(a.file);
  const Field& f = A.field();
  std::vector<LinearMap> maps;
  try {
    maps = maps_from_json(f, read_json_file(a.maps));
  } catch (const json::exception& e) {
    throw InputError("malformed map file " + a.maps + ": " + e.what());
  }
  const FieldElement delta = f.parse(a.delta);
  const RootDecomposition dec = root_decompose(A, maps, delta);
  const SemigroupVerdict v = check_semigroup(dec);

  json j;
  j["delta"] = element_to_json(delta);
  j["complete"] = dec.complete;
  j["inclusion_holds"] = dec.inclusion_holds;
  json roots = json::array(), dims = json::array(), mask = json::array();
  for (std::size_t r = 0; r < dec.roots.size(); ++r) {
    roots.push_back(root_json(dec.roots[r]));
    dims.push_back(dec.spaces[r].dim());
    json row = json::array();
    for (bool b : dec.defined[r]) row.push_back(b);
    mask.push_back(row);
  }
  j["roots"] = roots;
  j["dims"] = dims;
  j["defined"] = mask;
  j["verdict"] = v.non_semigroup ? "NonSemigroup" : "SemigroupConsistent";
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"triple", {root_json(dec.roots[w.a]), root_json(dec.roots[w.b]), root_json(dec.roots[w.c])}},
                    {"left", root_json(w.left)},
                    {"right", root_json(w.right)}};
  }
  if (!delta.is_zero() && !delta.is_one()) {
    const PropRoot1Report pr = check_prop_root1(dec);
    json p;
    p["condition_i"] = pr.condition_i ? json(std::vector<std::size_t>(pr.condition_i->begin(), pr.condition_i->end()))
                                      : json(nullptr);
    p["condition_ii"] = pr.condition_ii
                            ? json(std::vector<std::size_t>(pr.condition_ii->begin(), pr.condition_ii->end()))
                            : json(nullptr);
    j["prop_root1"] = p;
  }

  out << "roots:\n";
  for (std::size_t r = 0; r < dec.roots.size(); ++r)
    out << "  " << root_to_string(dec.roots[r]) << "  dim " << dec.spaces[r].dim() << "\n";
  out << (v.non_semigroup ? "NonSemigroup" : "SemigroupConsistent") << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    const std::string x = root_to_string(dec.roots[w.a]), y = root_to_string(dec.roots[w.b]),
                      z = root_to_string(dec.roots[w.c]);
    out << "  (" << x << " o " << y << ") o " << z << " = " << root_to_string(w.left) << "\n";
    out << "  " << x << " o (" << y << " o " << z << ") = " << root_to_string(w.right) << "\n";
  }
  if (!a.out.empty()) write_text_file(a.out, canonical_dump(j));
  return 0;
}

json halfring_json(const Algebra& A) {
  json j;
  const Field& f = A.field();
  FieldElement half;
  try {
    half = f.parse("1/2");
  } catch (const InputError&) {
    j["error"] = "1/2 is undefined in " + f.describe();
    return j;
  }
  CompositionRing ring;
  try {
    ring = build_composition_ring(solve_delta_derivations(A, half));
  } catch (const MathError& e) {
    j["closed"] = false;
    j["error"] = e.what();
    return j;
  }
  j["closed"] = true;
  j["dim"] = ring.dim();
  const CommutativityReport c = check_commutative(ring);
  j["commutative"] = c.commutative;
  if (c.commutative) {
    const LocalityReport l = locality_report(ring);
    j["local"] = l.is_local;
    j["nilradical_dim"] = l.nilradical_dim;
  } else {
    j["noncommuting_pair"] = {c.witness->first, c.witness->second};
  }
  const auto zd = find_zero_divisors(ring);
  if (!zd.empty()) j["zero_divisor_witness"] = {vector_json(zd.front().u), vector_json(zd.front().v)};
  j["zero_divisor_pairs"] = zd.size();
  return j;
}

json desk_json(const DeskCheckReport& r) {
  json j;
  j["hypotheses_met"] = r.hypotheses_met;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.hypotheses_met) return j;
  if (r.parametric) {
    json sp = json::array();
    for (const auto& [d, dim] : r.parametric->specials) sp.push_back({{"delta", element_to_json(d)}, {"dim", dim}});
    j["parametric"] = {{"generic_dim", r.parametric->generic_dim}, {"specials", sp}};
    j["specials_within_known_set"] = r.specials_within_known_set;
  }
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"delta", element_to_json(row.delta)}, {"dims", row.dims}});
  j["solutions"] = rows;
  j["graded"] = r.graded;
  j["centroid_dim"] = r.centroid_dim;
  if (r.graded) j["supercentroid_dims"] = r.supercentroid_dims;
  j["half_equals_centroid"] = r.half_equals_centroid;
  j["form_attached"] = r.form_attached;
  j["zero_off_special"] = r.zero_off_special;
  j["passed"] = r.passed;
  return j;
}

int cmd_report(const std::string& file, const std::string& path, std::ostream& out) {
  const Algebra A = load_algebra(file);
  json j;
  j["dim"] = A.dim();
  j["halfring"] = halfring_json(A);
  json s4;
  s4["ordinary_dim"] = compute_s4(A, IdentityLaw::Ordinary).dim();
  if (A.has_grading()) s4["super_dim"] = compute_s4(A, IdentityLaw::Super).dim();
  j["s4"] = s4;
  j["desk_check"] = desk_json(desk_check_theorems(A));
  emit(out, path, j);
  return 0;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const Algebra A = load_algebra(file);
  out << "ok: dim " << A.dim() << ", " << to_string(A.flavor()) << ", " << to_string(default_law(A)) << " holds";
  if (A.has_form()) out << ", invariant form";
  out << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact δ-derivations of finite-dimensional algebras", "deltader"};
  app.require_subcommand(1);

  MakeArgs mk;
  auto* make = app.add_subcommand("make", "construct an algebra and write it as JSON");
  make->add_option("kind", mk.kind,
                   "sl2, sl, abelian, witt, zassenhaus, divided-powers, deformed-zassenhaus, truncated, elduque4, "
                   "osp12, current, envelope, semidirect-adjoint")
      ->required();
  make->add_option("--field", mk.field, "Q or GF(p)");
  make->add_option("--n", mk.n, "size parameter");
  make->add_option("--p", mk.p, "characteristic");
  make->add_option("--k", mk.k, "truncation degree");
  make->add_option("--m", mk.m, "Grassmann generators");
  make->add_option("--elements", mk.elements, "comma-separated Witt support");
  make->add_option("--modulus", mk.modulus, "Witt support modulus");
  make->add_option("--left", mk.left, "Lie factor of a current algebra");
  make->add_option("--right", mk.right, "commutative factor of a current algebra");
  make->add_option("--input", mk.input, "input algebra");
  make->add_option("--out", mk.out, "output file (stdout if omitted)");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "solve for δ-derivations and related maps");
  solve->add_option("file", sv.file)->required();
  auto* dopt = solve->add_option("--delta", sv.delta, "exact literal such as 1/2");
  solve->add_flag("--parametric", sv.parametric, "treat δ as a parameter")->excludes(dopt);
  solve->add_option("--kind", sv.kind, "der, superder, centroid, supercentroid, quasider");
  solve->add_option("--parity", sv.parity, "0 or 1")->check(CLI::Range(0, 1));
  solve->add_option("--degree-bound", sv.bound, "modulus degree for the parametric solve");
  solve->add_option("--out", sv.out, "write the basis as JSON");

  GradeArgs gr;
  auto* grade = app.add_subcommand("grade", "root space decomposition and semigroup check");
  grade->add_option("file", gr.file)->required();
  grade->add_option("maps", gr.maps, "JSON file with one map or a list of commuting maps")->required();
  grade->add_option("--delta", gr.delta);
  grade->add_option("--out", gr.out, "write the grading report as JSON");

  std::string rep_file, rep_out;
  auto* report = app.add_subcommand("report", "composition ring, s4 and theorem desk check");
  report->add_option("file", rep_file)->required();
  report->add_option("--out", rep_out);

  std::string val_file;
  auto* val = app.add_subcommand("validate", "check the law of an algebra file");
  val->add_option("file", val_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*make) return cmd_make(mk, out);
    if (*solve) return cmd_solve(sv, out);
    if (*grade) return cmd_grade(gr, out);
    if (*report) return cmd_report(rep_file, rep_out, out);
    if (*val) return cmd_validate(val_file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace deltader
