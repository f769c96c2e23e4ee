#pragma once

// Command-line front end: dims | verify | eval | sweep.
// Exit codes: 0 all claims pass, 1 a claim fails, 2 usage or configuration error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/curvature_spaces.hpp"
#include "curvlab/field.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/nijenhuis.hpp"
#include "curvlab/report.hpp"
#include "curvlab/serialize.hpp"
#include "curvlab/verification.hpp"

namespace curvlab::cli {

using ojson = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::size_t n = 0;
  std::string kind = "complex";
  std::string sig;  // "p,q"
  std::string eps;  // "1,-1,1,-1"
  std::string mode = "exact";
  std::string format = "md";
};

struct EvalOptions {
  std::string map;
  std::string form = "omega";
  std::string idx;
  bool last_pair_structure = false;
  std::string tensor = "hh";
  std::string perm = "1,2,3,4";
  std::string word = "00";
  std::string plane = "1,3";
  std::string xy = "1,3";
  std::string slope = "1";
  std::string rotation = "circular";
  std::string point;
};

struct SweepOptions {
  std::string ns = "4,6";
  std::string kinds = "complex,para";
  std::string claims = "kaehler-weyl";
  std::string signatures = "standard";
};

struct Output {
  ojson json;
  std::string markdown;
  int exit_code = 0;
};

struct FieldMode {
  bool exact = true;
  double tolerance = 1e-8;
  std::string label() const { return exact ? "exact" : float_mode_label(tolerance); }
};

inline FieldMode parse_mode(const std::string& s) {
  if (s == "exact") return {};
  if (s == "float") return {false, 1e-8};
  if (s.rfind("float:", 0) == 0) {
    try {
      std::size_t used = 0;
      const double tol = std::stod(s.substr(6), &used);
      if (used != s.size() - 6 || !(tol > 0)) throw std::invalid_argument("bad tolerance");
      return {false, tol};
    } catch (const std::exception&) {
      throw UsageError("malformed --mode: " + s);
    }
  }
  throw UsageError("--mode must be exact or float:TOL");
}

/// Comma separated integers.
inline std::vector<long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed " + what + ": " + s);
    }
  }
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

/// 1-based indices in [1, n], converted to 0-based.
inline std::vector<std::size_t> parse_indices(const std::string& s, std::size_t count, std::size_t n,
                                              const std::string& what) {
  const auto v = parse_int_list(s, what);
  if (v.size() != count) throw UsageError(what + " needs " + std::to_string(count) + " indices");
  std::vector<std::size_t> out;
  for (long x : v) {
    if (x < 1 || static_cast<std::size_t>(x) > n) throw UsageError(what + " index out of range 1.." + std::to_string(n));
    out.push_back(static_cast<std::size_t>(x - 1));
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

template <class F>
ModelSpace<F> make_space(const RunConfig& c) {
  const auto kind = parse_kind(c.kind);
  if (!c.eps.empty()) {
    std::vector<int> eps;
    for (long x : parse_int_list(c.eps, "--eps")) {
      if (x != 1 && x != -1) throw UsageError("--eps entries must be 1 or -1");
      eps.push_back(static_cast<int>(x));
    }
    if (c.n != 0 && c.n != eps.size()) throw UsageError("--n does not match the length of --eps");
    return make_with_signs<F>(kind, eps);
  }
  if (c.n == 0) throw UsageError("--n is required");
  Signature sig{c.n, 0};
  if (kind == StructureKind::para) sig = {c.n / 2, c.n - c.n / 2};
  if (!c.sig.empty()) {
    const auto pq = parse_int_list(c.sig, "--sig");
    if (pq.size() != 2 || pq[0] < 0 || pq[1] < 0) throw UsageError("--sig needs p,q");
    sig = {static_cast<std::size_t>(pq[0]), static_cast<std::size_t>(pq[1])};
  }
  return make_standard<F>(c.n, kind, sig);
}

template <class F>
std::string scalar_string(const F& x) {
  return field_traits<F>::to_string(x);
}

// ---------------------------------------------------------------------------

template <class F>
Output cmd_dims(const RunConfig& cfg, const FieldMode& mode) {
  const auto s = make_space<F>(cfg);
  const auto c = build_catalog(s);
  ojson dims = ojson::object();
  dims["A"] = c.A.dim();
  dims["W"] = c.W.dim();
  dims["R"] = c.R.dim();
  if (c.has_structure) {
    dims["P_conformal"] = c.P_conformal.dim();
    dims["sigma_image"] = c.frakP.dim();
    const auto names = TwoTensorPieces<F>::names();
    const auto pieces = c.two_tensor_pieces.all();
    for (std::size_t i = 0; i < pieces.size(); ++i) dims[names[i]] = pieces[i]->dim();
    dims["K_W"] = c.K_W.dim();
    dims["K_R"] = c.K_R.dim();
  }
  Output out;
  out.json = {{"command", "dims"}, {"space", model_space_to_json(s)}, {"mode", mode.label()}, {"dims", dims}};
  std::ostringstream md;
  md << "### dims (" << describe(s).label() << ", " << mode.label() << ")\n\n| space | dim |\n|---|---|\n";
  for (const auto& [k, v] : dims.items()) md << "| " << k << " | " << v.dump() << " |\n";
  out.markdown = md.str();
  return out;
}

/// Claims that make sense for the space, for "all".
template <class F>
std::vector<std::string> applicable_claims(const ModelSpace<F>& s) {
  std::vector<std::string> out;
  for (const auto& id : claim_ids()) {
    const bool needs_structure = id != "ricci-structure" && id != "weyl-splitting" && id != "invariance";
    if (needs_structure && !s.has_structure()) continue;
    if (id == "component-values" && s.n < 6) continue;
    if ((id == "ricci-structure" || id == "weyl-splitting") && s.n < 4) continue;
    out.push_back(id);
  }
  return out;
}

template <class F>
Output cmd_verify(const RunConfig& cfg, const FieldMode& mode, std::vector<std::string> claims) {
  const auto s = make_space<F>(cfg);
  if (claims.size() == 1 && claims[0] == "all") claims = applicable_claims(s);
  for (const auto& id : claims)
    if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
      throw UsageError("unknown claim id: " + id);
  const auto c = build_catalog(s);
  Output out;
  ojson reports = ojson::array();
  bool all = true;
  for (const auto& id : claims) {
    auto r = run_claim(id, c);
    r.mode = mode.label();
    all = all && r.pass;
    reports.push_back(r.to_json());
    out.markdown += r.to_markdown() + "\n";
  }
  out.json = {{"command", "verify"}, {"reports", reports}, {"all_pass", all}};
  out.exit_code = all ? 0 : 1;
  return out;
}

template <class F>
std::string vector_label(const std::vector<F>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    const auto c = scalar_string(v[k]);
    if (!s.empty()) s += " + ";
    s += (c == "1" ? std::string() : c == "-1" ? std::string("-") : c + "*") + "d" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

template <class F>
Output cmd_eval_nijenhuis(const ModelSpace<F>& s, const EvalOptions& o, const FieldMode& mode) {
  if (!s.has_structure()) throw UsageError("eval nijenhuis needs --kind complex or para");
  const auto plane = parse_indices(o.plane, 2, s.n, "--plane");
  const auto xy = parse_indices(o.xy, 2, s.n, "--xy");
  F slope;
  try {
    slope = field_traits<F>::parse(o.slope);
  } catch (const std::exception&) {
    throw UsageError("malformed --slope: " + o.slope);
  }
  std::vector<F> point(s.n, F(0));
  if (!o.point.empty()) {
    const auto parts = split(o.point);
    if (parts.size() != s.n) throw UsageError("--point needs n coordinates");
    for (std::size_t i = 0; i < s.n; ++i) {
      try {
        point[i] = field_traits<F>::parse(parts[i]);
      } catch (const std::exception&) {
        throw UsageError("malformed --point: " + o.point);
      }
    }
  }
  RotationType rot;
  try {
    rot = parse_rotation(o.rotation);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto patch = make_patch(s, twist(s, linear_scalar<F>(s.n, 0, slope), {plane[0], plane[1]}, rot));
  NijenhuisBreakdown<F> N;
  try {
    N = nijenhuis_at(patch, xy[0], xy[1], std::span<const F>(point));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  const std::vector<std::string> names{"[x,y]", "-/+ J[Jx,y]", "-/+ J[x,Jy]", "+/- [Jx,Jy]"};
  Output out;
  ojson terms = ojson::array();
  std::ostringstream md;
  md << "### Nijenhuis tensor N(d" << xy[0] + 1 << ", d" << xy[1] + 1 << ") (" << describe(s).label() << ", "
     << mode.label() << ")\n\ntwist: " << to_string(rot) << " rotation of plane (" << plane[0] + 1 << ","
     << plane[1] + 1 << ") by angle " << o.slope << "*x1\n\n| term | value |\n|---|---|\n";
  for (std::size_t t = 0; t < 4; ++t) {
    terms.push_back({{"term", names[t]}, {"vector", vector_to_json<F>(N.terms[t])}});
    md << "| " << names[t] << " | " << vector_label(N.terms[t]) << " |\n";
  }
  md << "| total | " << vector_label(N.total) << " |\n";
  out.json = {{"command", "eval"},
              {"map", "nijenhuis"},
              {"space", model_space_to_json(s)},
              {"mode", mode.label()},
              {"index_base", 0},
              {"plane", {plane[0], plane[1]}},
              {"xy", {xy[0], xy[1]}},
              {"rotation", to_string(rot)},
              {"slope", scalar_to_json(slope)},
              {"point", vector_to_json<F>(point)},
              {"terms", terms},
              {"total", vector_to_json<F>(N.total)},
              {"vanishes", is_zero_vector<F>(N.total)}};
  out.markdown = md.str();
  return out;
}

template <class F>
Output cmd_eval(const RunConfig& cfg, const FieldMode& mode, const EvalOptions& o) {
  const auto s = make_space<F>(cfg);
  if (o.map == "nijenhuis") return cmd_eval_nijenhuis(s, o, mode);

  F value;
  ojson args = ojson::object();
  std::string label;
  if (o.map == "sigma" || o.map == "psi") {
    if (o.idx.empty()) throw UsageError("--idx is required");
    const auto idx = parse_indices(o.idx, 4, s.n, "--idx");
    if (o.last_pair_structure && !s.has_structure()) throw UsageError("--last-pair-J needs a structure");
    Tensor2<F> form(s.n);
    try {
      form = model_two_form(s, o.form);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    Tensor4<F> A(s.n);
    try {
      A = o.map == "sigma" ? sigma(form, s) : psi_map(form, s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (o.last_pair_structure) A = apply_structure_last_pair(A, s);
    value = A(idx[0], idx[1], idx[2], idx[3]);
    args["form"] = o.form;
    args["indices"] = idx;
    args["last_pair_structure"] = o.last_pair_structure;
    label = (o.map == "sigma" ? "sigma(" : "Psi(") + o.form + ")(e" + std::to_string(idx[0] + 1) + ",e" +
            std::to_string(idx[1] + 1) + (o.last_pair_structure ? ",Je" : ",e") + std::to_string(idx[2] + 1) +
            (o.last_pair_structure ? ",Je" : ",e") + std::to_string(idx[3] + 1) + ")";
  } else if (o.map == "invariant") {
    const auto p = parse_indices(o.perm, 4, 4, "--perm");
    SlotPermutation pi{p[0], p[1], p[2], p[3]};
    PairWord a;
    try {
      a = pair_word_from_string(o.word);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if ((a[0] || a[1] || o.tensor != "hh") && !s.has_structure()) throw UsageError("Kähler form needs a structure");
    Tensor4<F> T(s.n);
    if (o.tensor == "hh") T = outer(metric_tensor(s), metric_tensor(s));
    else if (o.tensor == "omega-omega") T = outer(kaehler_form(s), kaehler_form(s));
    else if (o.tensor == "h-omega") T = outer(metric_tensor(s), kaehler_form(s));
    else throw UsageError("--tensor must be hh, omega-omega or h-omega");
    value = invariant_contraction(T, pi, a, s);
    args["tensor"] = o.tensor;
    args["permutation"] = permutation_to_json(pi);
    args["word"] = o.word;
    label = "psi_{" + o.perm + "; " + o.word + "}(" + o.tensor + ")";
  } else {
    throw UsageError("eval map must be sigma, psi, invariant or nijenhuis");
  }
  Output out;
  out.json = {{"command", "eval"},   {"map", o.map},       {"space", model_space_to_json(s)},
              {"mode", mode.label()}, {"index_base", 0},   {"arguments", args},
              {"value", scalar_to_json(value)}};
  out.markdown = "### eval (" + describe(s).label() + ", " + mode.label() + ")\n\n| expression | value |\n|---|---|\n| " +
                 label + " | " + scalar_string(value) + " |\n";
  return out;
}

/// Metric sign layouts for a sweep cell: one standard layout, or every
/// admissible one ("all": complex and none over all signatures, para with the
/// standard layout and the layout with the first plane swapped).
inline std::vector<std::vector<int>> sweep_layouts(std::size_t n, StructureKind kind, bool all) {
  std::vector<std::vector<int>> out;
  auto with_negatives_from = [n](std::size_t p) {
    std::vector<int> e(n, 1);
    for (std::size_t i = p; i < n; ++i) e[i] = -1;
    return e;
  };
  switch (kind) {
    case StructureKind::none:
      if (!all) return {with_negatives_from(n)};
      for (std::size_t p = n + 1; p-- > 0;) out.push_back(with_negatives_from(p));
      return out;
    case StructureKind::complex:
      if (!all) return {with_negatives_from(n)};
      for (std::size_t p = n + 2; p >= 2; p -= 2) out.push_back(with_negatives_from(p - 2));
      return out;
    case StructureKind::para: {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = i % 2 == 0 ? 1 : -1;
      out.push_back(e);
      if (all && n >= 2) {
        std::swap(e[0], e[1]);
        out.push_back(e);
      }
      return out;
    }
  }
  return out;
}

template <class F>
ojson sweep_cell(StructureKind kind, const std::vector<int>& eps, const std::vector<std::string>& claims,
                 const FieldMode& mode) {
  std::optional<ScopedFloatTolerance> tol;
  if (!mode.exact) tol.emplace(mode.tolerance);
  ojson cell = ojson::array();
  const auto s = make_with_signs<F>(kind, eps);
  const auto applicable = applicable_claims(s);
  std::optional<CurvatureSpaceCatalog<F>> cat;
  for (const auto& id : claims) {
    ojson row{{"n", s.n},
              {"kind", to_string(kind)},
              {"sig", {describe(s).p, describe(s).q}},
              {"eps", eps},
              {"claim", id},
              {"mode", mode.label()}};
    if (std::find(applicable.begin(), applicable.end(), id) == applicable.end()) {
      row["verdict"] = "n/a";
      row["expected_failure"] = false;
    } else {
      try {
        if (!cat) cat = build_catalog(s);
        const auto r = run_claim(id, *cat);
        row["verdict"] = r.pass ? "pass" : "fail";
        row["expected_failure"] = r.expected_failure;
      } catch (const std::exception& e) {
        row["verdict"] = "error";
        row["expected_failure"] = false;
        row["error"] = e.what();
      }
    }
    cell.push_back(row);
  }
  return cell;
}

inline Output cmd_sweep(const SweepOptions& o, const FieldMode& mode) {
  std::vector<std::size_t> ns;
  if (!o.ns.empty())
    for (long x : parse_int_list(o.ns, "--ns")) {
      if (x < 2) throw UsageError("--ns entries must be >= 2");
      ns.push_back(static_cast<std::size_t>(x));
    }
  std::vector<StructureKind> kinds;
  for (const auto& k : split(o.kinds)) {
    try {
      kinds.push_back(parse_kind(k));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  auto claims = split(o.claims);
  for (const auto& id : claims)
    if (id != "all" && std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
      throw UsageError("unknown claim id: " + id);
  if (claims.size() == 1 && claims[0] == "all") claims = claim_ids();
  if (o.signatures != "standard" && o.signatures != "all") throw UsageError("--signatures must be standard or all");

  std::vector<std::future<ojson>> jobs;
  for (auto n : ns)
    for (auto kind : kinds) {
      if (kind != StructureKind::none && (n % 2 != 0 || n < 4)) continue;
      for (const auto& eps : sweep_layouts(n, kind, o.signatures == "all"))
        jobs.push_back(std::async(std::launch::async, [kind, eps, claims, mode] {
          return mode.exact ? sweep_cell<Rational>(kind, eps, claims, mode) : sweep_cell<double>(kind, eps, claims, mode);
        }));
    }

  Output out;
  ojson rows = ojson::array();
  bool ok = true;
  std::ostringstream md;
  md << "### sweep (" << mode.label() << ")\n\n| n | kind | sig | eps | claim | verdict | mode |\n|---|---|---|---|---|---|---|\n";
  for (auto& j : jobs)
    for (auto& row : j.get()) {
      const auto verdict = row["verdict"].get<std::string>();
      if (verdict == "fail" || verdict == "error") ok = false;
      std::string eps;
      for (const auto& e : row["eps"]) eps += e.get<int>() > 0 ? "+" : "-";
      md << "| " << row["n"].dump() << " | " << row["kind"].get<std::string>() << " | " << row["sig"][0].dump() << ","
         << row["sig"][1].dump() << " | " << eps << " | " << row["claim"].get<std::string>() << " | " << verdict
         << (row["expected_failure"].get<bool>() ? " (counterexample exhibited)" : "") << " | "
         << row["mode"].get<std::string>() << " |\n";
      rows.push_back(std::move(row));
    }
  out.json = {{"command", "sweep"}, {"mode", mode.label()}, {"cells", rows}, {"all_pass", ok}};
  out.markdown = md.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

// ---------------------------------------------------------------------------

template <class Fn>
Output with_field(const FieldMode& mode, Fn&& fn) {
  if (mode.exact) return fn(Rational{});
  ScopedFloatTolerance tol(mode.tolerance);
  return fn(double{});
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvlab: exact curvature tensor spaces on (para-)Hermitian model spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--n", cfg.n, "dimension");
  app.add_option("--kind", cfg.kind, "complex, para or none")->check(CLI::IsMember({"complex", "para", "none"}));
  app.add_option("--sig", cfg.sig, "signature p,q");
  app.add_option("--eps", cfg.eps, "explicit metric signs, e.g. 1,-1,1,-1");
  app.add_option("--mode", cfg.mode, "exact or float:TOL");
  app.add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));

  auto* dims = app.add_subcommand("dims", "dimensions of the catalog subspaces");
  auto* verify = app.add_subcommand("verify", "run claim checks");
  std::vector<std::string> claims;
  verify->add_option("claims", claims, "claim ids, or all")->required();

  auto* eval = app.add_subcommand("eval", "evaluate sigma, Psi, an invariant contraction or the Nijenhuis tensor");
  EvalOptions eo;
  eval->add_option("map", eo.map, "sigma, psi, invariant or nijenhuis")
      ->required()
      ->check(CLI::IsMember({"sigma", "psi", "invariant", "nijenhuis"}));
  eval->add_option("--psi", eo.form, "2-form: omega, psi0 or psipm");
  eval->add_option("--idx", eo.idx, "four 1-based indices, e.g. 1,4,3,1");
  eval->add_flag("--last-pair-J", eo.last_pair_structure, "apply J to the last two arguments");
  eval->add_option("--tensor", eo.tensor, "hh, omega-omega or h-omega");
  eval->add_option("--perm", eo.perm, "1-based slot permutation");
  eval->add_option("--word", eo.word, "pair-word such as 01");
  eval->add_option("--plane", eo.plane, "1-based twist plane");
  eval->add_option("--xy", eo.xy, "1-based coordinate directions");
  eval->add_option("--slope", eo.slope, "twist angle slope in x1");
  eval->add_option("--rotation", eo.rotation, "circular or hyperbolic");
  eval->add_option("--point", eo.point, "evaluation point (default origin)");

  auto* sweep = app.add_subcommand("sweep", "verify claims over dimensions, kinds and signatures");
  SweepOptions so;
  sweep->add_option("--ns", so.ns, "dimensions, e.g. 4,6");
  sweep->add_option("--kinds", so.kinds, "kinds, e.g. complex,para");
  sweep->add_option("--claims", so.claims, "claim ids or all");
  sweep->add_option("--signatures", so.signatures, "standard or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto mode = parse_mode(cfg.mode);
    Output o;
    if (dims->parsed()) {
      o = with_field(mode, [&](auto f) { return cmd_dims<decltype(f)>(cfg, mode); });
    } else if (verify->parsed()) {
      o = with_field(mode, [&](auto f) { return cmd_verify<decltype(f)>(cfg, mode, claims); });
    } else if (eval->parsed()) {
      o = with_field(mode, [&](auto f) { return cmd_eval<decltype(f)>(cfg, mode, eo); });
    } else {
      o = cmd_sweep(so, mode);
    }
    if (cfg.format == "json") out << o.json.dump(2) << "\n";
    else out << o.markdown;
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownClaimError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ModelSpaceError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace curvlab::cli
