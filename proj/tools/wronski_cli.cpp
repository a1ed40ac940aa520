#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "wronski/errors.hpp"
#include "wronski/maya.hpp"
#include "wronski/random_tuples.hpp"
#include "wronski/serialize.hpp"
#include "wronski/spectral.hpp"
#include "wronski/wronskian.hpp"

using namespace wronski;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kInvalidTuple = 3, kIdentity = 4, kNonGeneric = 5 };

struct Options {
  bool json = false;
  bool latex = false;
  std::string g, h;
  std::uint64_t seed = 1;
};

std::optional<ParamPoint> point_from(const Options& o) {
  if (o.g.empty() && o.h.empty()) return std::nullopt;
  if (o.g.empty() || o.h.empty()) throw ParseError("--g and --h must be given together");
  ParamPoint p{parse_rational(o.g), parse_rational(o.h)};
  require_generic(p);
  return p;
}

Json point_json(const std::optional<ParamPoint>& p) {
  if (!p) return nullptr;
  return {{"g", to_json(p->g)}, {"h", to_json(p->h)}};
}

ReductionTarget target_from(const std::string& s) {
  if (s == "IN") return ReductionTarget::kIN;
  if (s == "I3") return ReductionTarget::kIIII;
  if (s == "2N") return ReductionTarget::kIIN;
  if (s == "23") return ReductionTarget::kIIIII;
  return parse_target(s);
}

std::pair<Which, Direction> move_from(const std::string& s) {
  if (s == "first-left") return {Which::kFirst, Direction::kLeft};
  if (s == "first-right") return {Which::kFirst, Direction::kRight};
  if (s == "second-left") return {Which::kSecond, Direction::kLeft};
  if (s == "second-right") return {Which::kSecond, Direction::kRight};
  throw ParseError("bad move '" + s + "': expected first-left|first-right|second-left|second-right");
}

Json report_json(const ProportionalityReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(point_json(p));
  Json out = {{"original", r.original.to_string()},
              {"current", r.current.to_string()},
              {"ledger", to_json(r.ledger)},
              {"symbolic", r.symbolic},
              {"points", points},
              {"proportional", r.proportional},
              {"constant", r.constant ? to_json(*r.constant) : Json(nullptr)}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

std::string shifted_args(long dg, long dh) {
  auto arg = [](const char* x, long d) {
    if (d == 0) return std::string(x);
    return std::string(x) + (d < 0 ? " - " : " + ") + std::to_string(d < 0 ? -d : d);
  };
  return "(" + arg("g", dg) + ", " + arg("h", dh) + ")";
}

std::string ledger_text(const Ledger& l) {
  return "shift (" + std::to_string(l.dg) + ", " + std::to_string(l.dh) + "), prefactor (sin x)^(" +
         l.pref_sin.to_string() + ") (cos x)^(" + l.pref_cos.to_string() + ")";
}

void emit(const Options& o, const Json& j, const std::string& text, const std::string& latex) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else if (o.latex) {
    std::cout << latex << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_poly(const Options& o, const std::string& spec) {
  const StateTuple t = StateTuple::parse(spec);
  const auto at = point_from(o);
  const QuasiPoly w = at ? wronskian(t, *at) : wronskian(t);
  Json j = {{"command", "poly"},
            {"tuple", t.to_string()},
            {"at", point_json(at)},
            {"expS", to_json(w.exp_sin())},
            {"expC", to_json(w.exp_cos())},
            {"degree", w.poly().degree()},
            {"poly", to_json(w.poly())}};
  std::string text = "W[" + t.to_string() + "] = (sin x)^(" + w.exp_sin().to_string() +
                     ") (cos x)^(" + w.exp_cos().to_string() + ") P(eta)\n";
  text += "degree " + std::to_string(w.poly().degree()) + "\n";
  for (int k = w.poly().degree(); k >= 0; --k) {
    text += "eta^" + std::to_string(k) + ": " + w.poly().coeff(k).to_string() + "\n";
  }
  emit(o, j, text, t.to_latex() + " = " + to_latex(w));
  return kOk;
}

int cmd_maya(const Options& o, const std::string& spec) {
  const StateTuple t = StateTuple::parse(spec);
  const DiagramPair d = tuple_to_diagrams(t);
  Json j = {{"command", "maya"},
            {"tuple", t.to_string()},
            {"first", to_json(d.first)},
            {"second", to_json(d.second)}};
  const std::string text =
      "first  " + render_ascii(d.first) + "\nsecond " + render_ascii(d.second) + "\n";
  const std::string latex = "\\texttt{" + render_ascii(d.first) + "}\\quad\\texttt{" +
                            render_ascii(d.second) + "}";
  emit(o, j, text, latex);
  return kOk;
}

ProportionalityReport verify_reduction(const StateTuple& from, const StateTuple& to,
                                       const Ledger& l, const std::optional<ParamPoint>& at) {
  std::vector<ParamPoint> points;
  if (at) {
    points.push_back(*at);
  } else if (from.size() > 5 || to.size() > 5) {
    points.push_back(default_generic_point());
  }
  return verify_ledger_identity(from, to, l, points);
}

int cmd_reduce(const Options& o, const std::string& spec, const std::string& target_text,
               bool verify) {
  const StateTuple t = StateTuple::parse(spec);
  const ReductionTarget target = target_from(target_text);
  const auto at = point_from(o);
  const Reduction r = reduce(t, target);
  Json j = {{"command", "reduce"},
            {"tuple", t.to_string()},
            {"target", std::string(to_string(target))},
            {"reduced", r.tuple.to_string()},
            {"ledger", to_json(r.ledger)}};
  std::string text = "W[" + t.to_string() + "](g, h) ~ W[" + r.tuple.to_string() + "]" +
                     shifted_args(r.ledger.dg, r.ledger.dh) + "\n" +
                     ledger_text(r.ledger) + "\n";
  int code = kOk;
  if (verify) {
    const ProportionalityReport rep = verify_reduction(t, r.tuple, r.ledger, at);
    j["verification"] = report_json(rep);
    text += std::string("verification: ") + (rep.proportional ? "proportional" : "MISMATCH");
    if (rep.constant) text += ", constant " + rep.constant->to_string();
    text += "\n";
    if (!rep.proportional) code = kIdentity;
  }
  const std::string latex = t.to_latex() + "(g,h) \\propto " + r.tuple.to_latex() + "(g" +
                            (r.ledger.dg < 0 ? "" : "+") + std::to_string(r.ledger.dg) + ",h" +
                            (r.ledger.dh < 0 ? "" : "+") + std::to_string(r.ledger.dh) +
                            ") (\\sin x)^{" + to_latex(r.ledger.pref_sin) + "} (\\cos x)^{" +
                            to_latex(r.ledger.pref_cos) + "}";
  emit(o, j, text, latex);
  return code;
}

int cmd_spectrum(const Options& o, const std::string& spec, int up_to, bool verify) {
  const StateTuple t = StateTuple::parse(spec);
  if (up_to < 0) throw ParseError("--up-to must be >= 0");
  auto at = point_from(o);
  const auto labels = permitted_spectrum(t, up_to);
  Json list = Json::array();
  std::string text, latex;
  for (const auto& l : labels) {
    list.push_back(to_json(l));
    text += l.to_string() + " = " + l.eigenvalue.to_string() + "\n";
    latex += (latex.empty() ? "" : ",\\ ") + std::string("\\mathcal{E}_{") +
             std::to_string(l.level()) + "}";
  }
  Json j = {{"command", "spectrum"}, {"tuple", t.to_string()}, {"upTo", up_to}, {"spectrum", list}};
  int code = kOk;
  if (verify) {
    if (!at) at = default_generic_point();
    Json checks = Json::array();
    auto record = [&](const std::string& what, const EigenCheck& c) {
      checks.push_back({{"check", what}, {"holds", c.holds}, {"eigenvalue", to_json(c.eigenvalue)}});
      text += what + ": " + (c.holds ? "ok" : "FAILED") + "\n";
      if (!c.holds) code = kIdentity;
    };
    for (const auto& l : labels) {
      if (l.kind == SpectrumLabel::Kind::kBound) {
        record("eigenfunction " + l.to_string(), verify_eigenfunction(t, l.index, at));
      }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].type == StateType::III) {
        record("extra eigenstate deleting " + t[i].to_string(), verify_extra_eigenstate(t, i, at));
      }
    }
    const bool nonsingular = check_nonsingular(t, *at);
    Json warnings = parameter_warnings(*at);
    j["verification"] = {{"at", point_json(at)},
                         {"nonsingular", nonsingular},
                         {"warnings", warnings},
                         {"checks", checks}};
    text += std::string("nonsingular on (0, pi/2): ") + (nonsingular ? "yes" : "no") + "\n";
    for (const auto& w : parameter_warnings(*at)) text += "warning: " + w + "\n";
  }
  emit(o, j, text, latex);
  return code;
}

int cmd_verify(const Options& o, const std::string& spec, const std::string& move,
               const std::string& compose, int random_cases) {
  const auto at = point_from(o);
  Json results = Json::array();
  std::string text;
  bool all = true;
  auto run_move = [&](const StateTuple& t, const std::string& m) {
    const auto [which, dir] = move_from(m);
    const ProportionalityReport r = verify_move_identity(t, which, dir, at);
    Json j = report_json(r);
    j["move"] = m;
    results.push_back(j);
    text += t.to_string() + " " + m + " -> " + r.current.to_string() + ": " +
            (r.proportional ? "proportional" : "MISMATCH") + "\n";
    all = all && r.proportional;
  };
  if (random_cases > 0) {
    std::mt19937_64 rng(o.seed);
    static const char* moves[] = {"first-left", "first-right", "second-left", "second-right"};
    for (int i = 0; i < random_cases; ++i) {
      const StateTuple t = random_tuple(rng, 4, 4);
      run_move(t, moves[std::uniform_int_distribution<int>(0, 3)(rng)]);
    }
  } else if (!compose.empty()) {
    const StateTuple t = StateTuple::parse(spec);
    const StateTuple pair = StateTuple::parse(compose);
    if (pair.size() != 2) throw ParseError("--compose expects two states, e.g. \"I0,N1\"");
    const ParamPoint p = at.value_or(default_generic_point());
    const bool ok = wronskian_compose_check(t, pair[0], pair[1], p);
    results.push_back({{"base", t.to_string()},
                       {"f", pair[0].to_string()},
                       {"g", pair[1].to_string()},
                       {"at", point_json(p)},
                       {"holds", ok}});
    text += "composition identity: " + std::string(ok ? "holds" : "FAILED") + "\n";
    all = ok;
  } else {
    if (move.empty()) throw ParseError("verify-identity needs --move, --compose or --random");
    run_move(StateTuple::parse(spec), move);
  }
  Json j = {{"command", "verify-identity"}, {"results", results}, {"allHold", all}};
  emit(o, j, text, all ? "\\text{all identities hold}" : "\\text{identity failure}");
  return all ? kOk : kIdentity;
}

int cmd_equivalent(const Options& o, const std::string& a_spec, const std::string& b_spec,
                   bool verify) {
  const StateTuple a = StateTuple::parse(a_spec);
  const StateTuple b = StateTuple::parse(b_spec);
  const auto at = point_from(o);
  const Reduction ra = canonical_form(a);
  const Reduction rb = canonical_form(b);
  const bool same = ra.tuple == rb.tuple;
  Json j = {{"command", "equivalent"},
            {"a", {{"tuple", a.to_string()}, {"canonical", ra.tuple.to_string()}, {"ledger", to_json(ra.ledger)}}},
            {"b", {{"tuple", b.to_string()}, {"canonical", rb.tuple.to_string()}, {"ledger", to_json(rb.ledger)}}},
            {"equivalent", same}};
  std::string text = a.to_string() + " -> " + ra.tuple.to_string() + "\n" + b.to_string() + " -> " +
                     rb.tuple.to_string() + "\n" +
                     (same ? "equivalent" : "not equivalent (canonical forms differ)") + "\n";
  int code = kOk;
  if (same) {
    // W[a](g,h) ~ W[c](g+da) and W[b](G) ~ W[c](G+db), so W[a](g,h) ~ W[b](g+da-db).
    Ledger rel;
    rel.dg = ra.ledger.dg - rb.ledger.dg;
    rel.dh = ra.ledger.dh - rb.ledger.dh;
    rel.pref_sin = ra.ledger.pref_sin - rb.ledger.pref_sin.shifted(rel.dg, rel.dh);
    rel.pref_cos = ra.ledger.pref_cos - rb.ledger.pref_cos.shifted(rel.dg, rel.dh);
    j["relation"] = to_json(rel);
    text += "W[a](g, h) ~ W[b]" + shifted_args(rel.dg, rel.dh) + ", " + ledger_text(rel) + "\n";
    if (verify) {
      const ProportionalityReport rep = verify_reduction(a, b, rel, at);
      j["verification"] = report_json(rep);
      text += std::string("verification: ") + (rep.proportional ? "proportional" : "MISMATCH") + "\n";
      if (!rep.proportional) code = kIdentity;
    }
  }
  emit(o, j, text, same ? "\\text{equivalent}" : "\\text{not equivalent}");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wronskians of Poschl-Teller eigenstates and seed solutions"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON output");
  app.add_flag("--latex", o.latex, "LaTeX output");
  app.add_option("--g", o.g, "instantiate g (p/q)");
  app.add_option("--h", o.h, "instantiate h (p/q)");
  app.add_option("--seed", o.seed, "seed for randomized runs");

  std::string tuple, tuple_b, target = "IN", move, compose;
  bool verify = false;
  int up_to = 6, random_cases = 0;

  auto* poly = app.add_subcommand("poly", "Wronskian exponents and polynomial part");
  poly->add_option("tuple", tuple, "states, e.g. I1,II2,III1")->required();

  auto* maya = app.add_subcommand("maya", "Maya diagram pair of a tuple");
  maya->add_option("tuple", tuple, "states")->required();

  auto* red = app.add_subcommand("reduce", "reduce to a two-type tuple");
  red->add_option("tuple", tuple, "states")->required();
  red->add_option("--target", target, "IN | I3 | 2N | 23 (default IN)");
  red->add_flag("--verify", verify, "verify the Wronskian identity");

  auto* spec = app.add_subcommand("spectrum", "permitted eigenvalues of the deformed Hamiltonian");
  spec->add_option("tuple", tuple, "states")->required();
  spec->add_option("--up-to", up_to, "largest bound level listed (default 6)");
  spec->add_flag("--verify", verify, "verify eigenfunctions and nonsingularity");

  auto* ver = app.add_subcommand("verify-identity", "check a division-move or composition identity");
  ver->add_option("tuple", tuple, "states");
  ver->add_option("--move", move, "first-left | first-right | second-left | second-right");
  ver->add_option("--compose", compose, "two states f,g for W[t,f,g]W[t] = W[W[t,f],W[t,g]]");
  ver->add_option("--random", random_cases, "check this many random move identities (uses --seed)");

  auto* eq = app.add_subcommand("equivalent", "compare canonical forms of two tuples");
  eq->add_option("a", tuple, "first tuple")->required();
  eq->add_option("b", tuple_b, "second tuple")->required();
  eq->add_flag("--verify", verify, "verify the resulting Wronskian relation");

  for (CLI::App* sub : {poly, maya, red, spec, ver, eq}) sub->set_help_flag("--help", "print help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*poly) return cmd_poly(o, tuple);
    if (*maya) return cmd_maya(o, tuple);
    if (*red) return cmd_reduce(o, tuple, target, verify);
    if (*spec) return cmd_spectrum(o, tuple, up_to, verify);
    if (*ver) return cmd_verify(o, tuple, move, compose, random_cases);
    if (*eq) return cmd_equivalent(o, tuple, tuple_b, verify);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidTuple& e) {
    std::cerr << "invalid tuple: " << e.what() << "\n";
    return kInvalidTuple;
  } catch (const NonGenericParameters& e) {
    std::cerr << "non-generic parameters: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const IdentityFailure& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return kIdentity;
  } catch (const ZeroPolynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIdentity;
  }
  return kOk;
}
