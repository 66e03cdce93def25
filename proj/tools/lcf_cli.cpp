// Command-line front end: one subcommand per operation, JSON on stdout,
// a short summary on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "lcf/mcmullen.hpp"
#include "lcf/zaremba.hpp"

using json = nlohmann::ordered_json;
using namespace lcf;

namespace {

// malformed input; reported with exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string field = "Q";
  int budget = 200;
  int depth = 50;
  bool pretty = false;
  size_t witness_cap = 16;
  unsigned workers = 1;
};

template <class F>
auto parsing(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError("cannot parse " + what + ": " + e.what());
  }
}

Field make_field(const std::string& spec) {
  return parsing("field '" + spec + "'", [&] { return field_make(spec); });
}

Poly poly_arg(const Field& F, const std::string& name, const std::string& text) {
  return parsing(name, [&] { return parse_poly(F, text); });
}

Elem elem_arg(const Field& F, const std::string& name, const std::string& text) {
  return parsing(name, [&] { return parse_elem(F, text); });
}

Quad quad_arg(const Field& F, const std::string& name, const std::string& text) {
  return parsing(name, [&] { return Quad::from_text(parse_quadratic(F, text)); });
}

// comma separated items, brackets optional, commas inside parentheses kept
std::vector<std::string> split_list(std::string text) {
  auto ws = [](char c) { return c == ' ' || c == '\t'; };
  while (!text.empty() && ws(text.front())) text.erase(text.begin());
  while (!text.empty() && ws(text.back())) text.pop_back();
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& s : out)
    if (s.find_first_not_of(" \t") == std::string::npos) throw UsageError("empty item in list '" + text + "'");
  return out;
}

std::vector<Poly> word_arg(const Field& F, const std::string& name, const std::string& text) {
  std::vector<Poly> w;
  for (const auto& s : split_list(text)) w.push_back(poly_arg(F, name, s));
  return w;
}

std::vector<Elem> elems_arg(const Field& F, const std::string& name, const std::string& text) {
  std::vector<Elem> v;
  for (const auto& s : split_list(text)) v.push_back(elem_arg(F, name, s));
  return v;
}

std::vector<std::uint64_t> primes_arg(const std::string& text) {
  std::vector<std::uint64_t> v;
  for (const auto& s : split_list(text)) {
    try {
      size_t used = 0;
      long long p = std::stoll(s, &used);
      if (p < 2 || s.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(s);
      v.push_back(static_cast<std::uint64_t>(p));
    } catch (const std::exception&) {
      throw UsageError("invalid prime '" + s + "'");
    }
  }
  return v;
}

json strs(const std::vector<Poly>& v) {
  json j = json::array();
  for (const auto& p : v) j.push_back(p.str());
  return j;
}

json strs(const std::vector<Elem>& v) {
  json j = json::array();
  for (const auto& e : v) j.push_back(e.str());
  return j;
}

json mat_json(const Mat2& m) { return json::array({json::array({m[0].str(), m[1].str()}), json::array({m[2].str(), m[3].str()})}); }

json period_json(const PeriodInfo& i) {
  json j = {{"status", period_status_name(i.status)}, {"preperiod", i.preperiod}, {"quasi_period", i.quasi_period}};
  j["multiplier"] = i.multiplier ? json(i.multiplier->str()) : json(nullptr);
  j["period"] = i.period;
  j["period_observed"] = i.period_observed;
  j["budget"] = i.budget;
  return j;
}

json expansion_json(const Expansion& e, const std::string& input) {
  KProfile k = k_profile(e);
  json j = {{"field", e.field->spec()}, {"input", input}, {"partial_quotients", strs(e.a)}};
  json c = json::array();
  if (e.has_continuants())
    for (size_t n = 0; n < e.size(); ++n) c.push_back({{"p", e.p[n].str()}, {"q", e.q[n].str()}});
  j["continuants"] = c;
  j["terminated"] = e.terminated;
  j["budget_exhausted"] = e.budget_exhausted;
  j["K_observed"] = k.K;
  j["ovK_observed"] = k.ovK;
  j["ovK_window"] = k.window;
  return j;
}

json census_json(const CensusReport& r) {
  return {{"field", r.field->spec()}, {"f", r.f.str()}, {"multiplicity", r.multiplicity},
          {"witnesses", strs(r.witnesses)}, {"witness_cap", r.witness_cap}, {"method", r.method},
          {"candidates", r.candidates}};
}

json pell_json(const std::optional<PellSolution>& s) {
  if (!s) return nullptr;
  return {{"x", s->x.str()}, {"y", s->y.str()}, {"unit", s->unit.str()}, {"index", s->index},
          {"normalized", s->normalized}};
}

Expansion expand_quad(const Quad& x, int budget) {
  if (x.is_rational()) return cf_expand_rational(x.a(), x.c(), budget);
  return cf_expand(laurent_from_quad(x), budget);
}

struct Outcome {
  json inputs = json::object();
  json outputs = json::object();
  std::string summary;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions of Laurent series over function fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "coefficient field: Q, F<p> or Q[x]/(m)");
  app.add_option("--budget", g.budget, "maximal number of partial quotients")->check(CLI::PositiveNumber);
  app.add_option("--depth", g.depth, "reduction depth")->check(CLI::PositiveNumber);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "compact JSON (default)");
  app.add_flag("--pretty", g.pretty, "indented JSON");
  app.add_option("--witness-cap", g.witness_cap, "witnesses kept by a census");
  app.add_option("--workers", g.workers, "census worker threads")->check(CLI::PositiveNumber);

  std::string alpha, D, word, f, Z, X, Y, P, prefix, roots, b, a0, w, a, e1, e2, c, primes_s, lambdas = "auto",
                                                                                         lambda_s, a_s, method = "infinite",
                                                                                         count_method = "exhaustive";
  unsigned n_max = 3, supply_count = 20;
  int d = 0, r = 2;
  std::uint64_t p = 0, pi = 3;

  std::function<Outcome()> run;
  auto command = [&](CLI::App* sub, std::function<Outcome()> body) { sub->callback([&run, body] { run = body; }); };

  auto* expand = app.add_subcommand("expand", "continued fraction of a rational or quadratic element");
  expand->add_option("--alpha", alpha)->required();
  command(expand, [&] {
    Field F = make_field(g.field);
    Quad x = quad_arg(F, "--alpha", alpha);
    Expansion e = expand_quad(x, g.budget);
    Outcome o;
    o.inputs = {{"alpha", alpha}};
    o.outputs = expansion_json(e, x.str());
    o.summary = std::to_string(e.size()) + " partial quotients, K_observed " + std::to_string(k_profile(e).K);
    return o;
  });

  auto* sqrt_cmd = app.add_subcommand("sqrt", "expansion and periodicity of sqrt D");
  sqrt_cmd->add_option("--D", D)->required();
  command(sqrt_cmd, [&] {
    Field F = make_field(g.field);
    Poly Dp = poly_arg(F, "--D", D);
    PeriodResult res = detect_periodicity_sqrt(Dp, g.budget);
    Outcome o;
    o.inputs = {{"D", D}};
    o.outputs = {{"expansion", expansion_json(res.expansion, "sqrt(" + Dp.str() + ")")}, {"period", period_json(res.info)}};
    o.summary = "sqrt(" + Dp.str() + "): " + period_status_name(res.info.status);
    return o;
  });

  auto* period = app.add_subcommand("period", "periodicity of a quadratic element");
  period->add_option("--alpha", alpha)->required();
  command(period, [&] {
    Field F = make_field(g.field);
    Quad x = quad_arg(F, "--alpha", alpha);
    if (x.is_rational()) throw Error("period: alpha is rational");
    PeriodResult res = detect_periodicity(surd_from_quad(x), g.budget);
    Outcome o;
    o.inputs = {{"alpha", alpha}};
    o.outputs = {{"expansion", expansion_json(res.expansion, x.str())}, {"period", period_json(res.info)}};
    o.summary = x.str() + ": " + period_status_name(res.info.status);
    return o;
  });

  auto* value = app.add_subcommand("value", "value of a finite word [a0, ..., an]");
  value->add_option("--word", word)->required();
  command(value, [&] {
    Field F = make_field(g.field);
    std::vector<Poly> wd = word_arg(F, "--word", word);
    RatFn v = cf_value(F, wd);
    Outcome o;
    o.inputs = {{"word", strs(wd)}};
    o.outputs = {{"num", v.num.str()}, {"den", v.den.str()}};
    o.summary = "(" + v.num.str() + ")/(" + v.den.str() + ")";
    return o;
  });

  auto* pell = app.add_subcommand("pell", "minimal solution of x^2 - D y^2 = unit");
  pell->add_option("--D", D)->required();
  command(pell, [&] {
    Field F = make_field(g.field);
    Poly Dp = poly_arg(F, "--D", D);
    PellResult res = pell_solve(Dp, g.budget);
    Outcome o;
    o.inputs = {{"D", D}};
    o.outputs = {{"D", Dp.str()}, {"solution", pell_json(res.solution)}, {"period", period_json(res.info)}};
    o.summary = res.solution ? "x = " + res.solution->x.str() + ", y = " + res.solution->y.str()
                             : "no solution within the budget";
    return o;
  });

  auto* pellian = app.add_subcommand("pellian", "Pellianity of D over Q from reductions modulo primes");
  pellian->add_option("--D", D)->required();
  pellian->add_option("--primes", primes_s)->required();
  command(pellian, [&] {
    Field F = make_field(g.field);
    if (F->kind() != FieldKind::rationals) throw Error("pellian: field must be Q");
    Poly Dp = poly_arg(F, "--D", D);
    auto ps = primes_arg(primes_s);
    PellianityReport rep = pellianity_decide(Dp, ps, g.budget);
    json pj = json::array();
    for (const auto& q : rep.primes) {
      json e = {{"p", q.p}, {"good", q.good}};
      e["torsion_order"] = q.torsion_order ? json(*q.torsion_order) : json(nullptr);
      if (!q.reason.empty()) e["reason"] = q.reason;
      pj.push_back(e);
    }
    Outcome o;
    o.inputs = {{"D", D}, {"primes", ps}};
    o.outputs = {{"D", Dp.str()}, {"primes", pj}, {"verdict", pellianity_name(rep.verdict)}};
    o.outputs["incompatible"] = rep.incompatible ? json::array({rep.incompatible->first, rep.incompatible->second}) : json(nullptr);
    o.outputs["common_order"] = rep.common_order ? json(*rep.common_order) : json(nullptr);
    o.outputs["bounded_check"] = {{"steps", rep.bounded_steps}, {"max_quotient_degree", rep.max_quotient_degree}};
    o.outputs["solution"] = pell_json(rep.solution);
    o.summary = pellianity_name(rep.verdict);
    return o;
  });

  auto* zaremba = app.add_subcommand("zaremba", "normal rational functions");
  zaremba->require_subcommand(1);
  auto* census = zaremba->add_subcommand("census", "orthogonal multiplicity of f");
  census->add_option("--f", f)->required();
  census->add_option("--method", count_method)->check(CLI::IsMember({"exhaustive", "hankel"}));
  command(census, [&] {
    Field F = make_field(g.field);
    Poly fp = poly_arg(F, "--f", f);
    CensusReport rep = orthogonal_multiplicity(fp, g.witness_cap, g.workers, 10000000, count_method);
    Outcome o;
    o.inputs = {{"f", f}, {"method", count_method}};
    o.outputs = census_json(rep);
    o.summary = "m(" + fp.str() + ") = " + std::to_string(rep.multiplicity);
    return o;
  });
  auto* find = zaremba->add_subcommand("find", "construct a normal partner g of f");
  find->add_option("--f", f);
  find->add_option("--method", method)->check(CLI::IsMember({"infinite", "folded", "friesen", "splits"}));
  find->add_option("--supply", supply_count, "number of lambdas from the default supply (infinite)");
  find->add_option("--P", P, "base polynomial (folded)");
  find->add_option("--d", d, "number of folds (folded)");
  find->add_option("--prefix", prefix, "partial quotients of f/g (friesen)");
  find->add_option("--roots", roots, "roots of f in the chosen order (splits)");
  find->add_option("--b", b, "constants to check instead of searching (splits)");
  command(find, [&] {
    Field F = make_field(g.field);
    Outcome o;
    o.inputs = {{"method", method}};
    if (method == "folded") {
      if (P.empty()) throw UsageError("--P is required for the folded method");
      Poly Pp = poly_arg(F, "--P", P);
      FoldedPartner fp = folded_partner(Pp, d);
      o.inputs["P"] = P;
      o.inputs["d"] = d;
      o.outputs = {{"g", fp.g.str()}, {"f", fp.f.str()}, {"K", fp.K},
                   {"expansion", expansion_json(fp.expansion, "(" + fp.g.str() + ")/(" + fp.f.str() + ")")}};
      o.summary = "g = " + fp.g.str() + ", K = " + std::to_string(fp.K);
      return o;
    }
    if (f.empty()) throw UsageError("--f is required");
    Poly fp = poly_arg(F, "--f", f);
    o.inputs["f"] = f;
    if (method == "infinite") {
      auto supply = default_lambda_supply(F, F->is_finite() ? F->size() : supply_count);
      PartnerResult pr = construct_partner_infinite(fp, supply);
      o.inputs["supply"] = strs(supply);
      o.outputs = {{"found", pr.found}, {"g", pr.found ? json(pr.g.str()) : json(nullptr)}, {"lambdas", strs(pr.lambdas)},
                   {"K_steps", pr.K_steps}, {"blocked", strs(pr.blocked)}, {"reason", pr.reason}};
      if (pr.found) o.outputs["expansion"] = expansion_json(pr.expansion, "(" + pr.g.str() + ")/(" + fp.str() + ")");
      o.summary = pr.found ? "g = " + pr.g.str() : "not found: " + pr.reason;
    } else if (method == "friesen") {
      if (prefix.empty()) throw UsageError("--prefix is required for the friesen method");
      auto pre = word_arg(F, "--prefix", prefix);
      auto gs = friesen_prefix_solve(fp, pre);
      o.inputs["prefix"] = strs(pre);
      o.outputs = {{"solutions", strs(gs)}, {"count", gs.size()}};
      o.summary = std::to_string(gs.size()) + " solutions";
    } else {
      if (roots.empty()) throw UsageError("--roots is required for the splits method");
      auto rs = elems_arg(F, "--roots", roots);
      std::optional<std::vector<Elem>> bs;
      if (!b.empty()) bs = elems_arg(F, "--b", b);
      SplitsResult sr = splits_construct(fp, rs, bs);
      o.inputs["roots"] = strs(rs);
      if (bs) o.inputs["b"] = strs(*bs);
      o.outputs = {{"found", sr.found}, {"g", sr.found ? json(sr.g.str()) : json(nullptr)}, {"b", strs(sr.b)},
                   {"blocking_step", sr.blocking_step}, {"reason", sr.reason}};
      if (sr.found) o.outputs["expansion"] = expansion_json(sr.expansion, "(" + sr.g.str() + ")/(" + fp.str() + ")");
      o.summary = sr.found ? "g = " + sr.g.str() : "not found: " + sr.reason;
    }
    return o;
  });

  auto* mercat = app.add_subcommand("mercat", "bounded quotients from Pell solutions and periodic words");
  mercat->require_subcommand(1);
  auto* lift = mercat->add_subcommand("lift", "lift Z/X through a Pell solution (X, Y) of D");
  lift->add_option("--D", D)->required();
  lift->add_option("--Z", Z)->required();
  lift->add_option("--X", X, "defaults to the minimal Pell solution");
  lift->add_option("--Y", Y, "defaults to the minimal Pell solution");
  command(lift, [&] {
    Field F = make_field(g.field);
    Poly Dp = poly_arg(F, "--D", D), Zp = poly_arg(F, "--Z", Z);
    Poly Xp, Yp;
    if (X.empty() != Y.empty()) throw UsageError("--X and --Y go together");
    if (X.empty()) {
      PellResult pr = pell_solve(Dp, g.budget);
      if (!pr.solution) throw Error("mercat lift: no Pell solution within the budget");
      Xp = pr.solution->x;
      Yp = pr.solution->y;
    } else {
      Xp = poly_arg(F, "--X", X);
      Yp = poly_arg(F, "--Y", Y);
    }
    MercatLift m = mercat_lift(Dp, Xp, Yp, Zp, g.budget);
    Outcome o;
    o.inputs = {{"D", D}, {"Z", Z}, {"X", Xp.str()}, {"Y", Yp.str()}};
    o.outputs = {{"X", m.X.str()},       {"Y", m.Y.str()},         {"y_flipped", m.y_flipped},
                 {"t", m.t.str()},       {"k", m.k.str()},         {"a", strs(m.a)},
                 {"word", strs(m.word)}, {"value", m.value.str()}, {"mu", m.mu.str()},
                 {"eigen_ok", m.eigen_ok}, {"K_regular", m.K_regular}, {"K_ZX", m.K_ZX},
                 {"K_bound_ok", m.K_bound_ok}, {"regular", expansion_json(m.regular, m.value.str())}};
    o.summary = "period of " + std::to_string(m.word.size()) + " quotients, eigen " + (m.eigen_ok ? "ok" : "failed");
    return o;
  });
  auto* family = mercat->add_subcommand("family", "periodic family built from a word [a0, a1, ..., a1]");
  family->add_option("--word", word)->required();
  family->add_option("--n", n_max);
  command(family, [&] {
    Field F = make_field(g.field);
    auto wd = word_arg(F, "--word", word);
    MercatFamily fam = mercat_family(F, wd, n_max);
    json ms = json::array();
    for (const auto& m : fam.members)
      ms.push_back({{"n", m.n}, {"word", strs(m.word)}, {"P", mat_json(m.P)}, {"value", m.value.str()},
                    {"trace_ok", m.trace_ok}, {"discriminant_ok", m.discriminant_ok}, {"K_word", m.K_word}});
    Outcome o;
    o.inputs = {{"word", strs(wd)}, {"n", n_max}};
    o.outputs = {{"branch", fam.branch}, {"A", mat_json(fam.A)}, {"B", mat_json(fam.B)}, {"C", mat_json(fam.C)},
                 {"H", mat_json(fam.H)}, {"b_word", strs(fam.b_word)}, {"c_word", strs(fam.c_word)}, {"members", ms}};
    o.summary = std::to_string(fam.members.size()) + " members, branch " + fam.branch;
    return o;
  });

  auto* mm = app.add_subcommand("mm", "products by linear factors with bounded quotients");
  mm->require_subcommand(1);
  auto* pipeline = mm->add_subcommand("pipeline", "multiply sqrt D by T - lambda until K = 1");
  pipeline->add_option("--D", D)->required();
  pipeline->add_option("--lambdas", lambdas, "auto or a list of lambdas");
  command(pipeline, [&] {
    Field F = make_field(g.field);
    Poly Dp = poly_arg(F, "--D", D);
    auto supply = lambdas == "auto" ? default_lambda_supply(F, 20) : elems_arg(F, "--lambdas", lambdas);
    PipelineResult pr = sqrt_multiplier_pipeline(Dp, supply, g.budget);
    json steps = json::array();
    for (const auto& s : pr.steps)
      steps.push_back({{"lambda", s.lambda.str()}, {"K_before", s.K_before}, {"K_after", s.K_after}, {"avoided", s.avoided}});
    Outcome o;
    o.inputs = {{"D", D}, {"lambdas", lambdas}, {"supply", strs(supply)}};
    o.outputs = {{"D", pr.D.str()},       {"lambdas", strs(pr.lambdas)}, {"product", pr.product.str()},
                 {"steps", steps},        {"reached_one", pr.reached_one}, {"reason", pr.reason},
                 {"expansion", expansion_json(pr.expansion, "(" + pr.product.str() + ")*sqrt(" + pr.D.str() + ")")}};
    o.summary = pr.reached_one ? "K = 1 with product " + pr.product.str() : "K = 1 not reached: " + pr.reason;
    return o;
  });
  auto* eis = mm->add_subcommand("eisenstein", "lambda in Q[x]/(pi x^r - 1)");
  eis->add_option("--D", D)->required();
  eis->add_option("--pi", pi);
  eis->add_option("--r", r);
  command(eis, [&] {
    Field F = make_field(g.field);
    Poly Dp = poly_arg(F, "--D", D);
    EisensteinResult er = eisenstein_lambda(Dp, pi, r, g.budget);
    Outcome o;
    o.inputs = {{"D", D}, {"pi", pi}, {"r", r}};
    o.outputs = {{"extension", er.extension->spec()}, {"lambda", er.lambda.str()}, {"window", er.window},
                 {"nonvanishing", er.nonvanishing}, {"K_observed", er.profile.K}, {"ovK_observed", er.profile.ovK},
                 {"partial_quotients", strs(er.expansion.a)}};
    if (!er.nonvanishing) o.outputs["first_vanishing"] = er.first_vanishing;
    o.summary = "lambda = " + er.lambda.str() + ", K_observed " + std::to_string(er.profile.K) + " on " +
                std::to_string(er.window) + " steps";
    return o;
  });
  auto* shift = mm->add_subcommand("shift", "(alpha + a)/(T - lambda)");
  shift->add_option("--alpha", alpha)->required();
  shift->add_option("--a", a_s)->required();
  shift->add_option("--lambda", lambda_s)->required();
  command(shift, [&] {
    Field F = make_field(g.field);
    Quad x = quad_arg(F, "--alpha", alpha);
    ShiftResult sr = divide_shift(x, elem_arg(F, "--a", a_s), elem_arg(F, "--lambda", lambda_s), g.budget);
    Outcome o;
    o.inputs = {{"alpha", alpha}, {"a", a_s}, {"lambda", lambda_s}};
    o.outputs = {{"value", sr.value.str()}, {"avoided", sr.avoided}, {"K_before", sr.K_before},
                 {"K_after", sr.K_after}, {"K_relation", sr.K_relation},
                 {"before", expansion_json(sr.before, x.str())}, {"after", expansion_json(sr.after, sr.value.str())}};
    o.summary = "K " + std::to_string(sr.K_before) + " -> " + std::to_string(sr.K_after);
    return o;
  });

  auto* reduce = app.add_subcommand("reduce", "reduction of alpha over Q modulo a prime");
  reduce->add_option("--alpha", alpha)->required();
  reduce->add_option("--p", p)->required();
  command(reduce, [&] {
    Field F = make_field(g.field);
    if (F->kind() != FieldKind::rationals) throw Error("reduce: field must be Q");
    Quad x = quad_arg(F, "--alpha", alpha);
    ReductionReport rr = rho_map(x, p, g.depth);
    Outcome o;
    o.inputs = {{"alpha", alpha}, {"p", p}};
    o.outputs = {{"p", p}, {"reducible", rr.reducible}, {"reason", rr.reason}};
    if (rr.reducible) {
      json rows = json::array();
      for (size_t n = 0; n < rr.normalized.size(); ++n)
        rows.push_back({{"n", n}, {"i", rr.normalized[n].i}, {"x", rr.normalized[n].x.str()},
                        {"y", rr.normalized[n].y.str()}, {"rho", rr.rho[n]}});
      o.outputs["source"] = expansion_json(rr.source, x.str());
      o.outputs["reduced"] = expansion_json(rr.reduced, "reduction mod " + std::to_string(p));
      o.outputs["table"] = rows;
      o.outputs["properties"] = {{"rho_starts_at_zero", rr.rho_starts_at_zero}, {"nondecreasing", rr.nondecreasing},
                                 {"step_at_most_one", rr.step_at_most_one}, {"surjective", rr.surjective},
                                 {"coprime_on_increments", rr.coprime_on_increments}};
      o.outputs["checked_depth"] = rr.checked_depth;
      o.outputs["ord_positive_reduction"] = rr.ord_positive_reduction;
      if (!x.is_rational()) {
        NormalityReport nr = normality_by_reduction(x, p, g.budget);
        o.outputs["normality"] = {{"verdict", normality_name(nr.verdict)}, {"reason", nr.reason},
                                  {"reduced_word", strs(nr.reduced_word)}, {"reduced_period", period_json(nr.reduced_period)},
                                  {"source_K", nr.source_K}};
      }
    }
    o.summary = rr.reducible ? std::to_string(rr.normalized.size()) + " rows, reduced expansion of " +
                                   std::to_string(rr.reduced.size()) + " quotients"
                             : "not reducible: " + rr.reason;
    return o;
  });

  auto* fold_cmd = app.add_subcommand("fold", "folding [a0, w, a, -rev(w)] or its signed form");
  fold_cmd->add_option("--a0", a0)->required();
  fold_cmd->add_option("--w", w)->required();
  fold_cmd->add_option("--a", a, "middle quotient (plain form)");
  fold_cmd->add_option("--e1", e1, "signed form");
  fold_cmd->add_option("--e2", e2, "signed form");
  fold_cmd->add_option("--c", c, "signed form");
  command(fold_cmd, [&] {
    Field F = make_field(g.field);
    Poly a0p = poly_arg(F, "--a0", a0);
    auto wd = word_arg(F, "--w", w);
    bool is_signed = !e1.empty() || !e2.empty() || !c.empty();
    if (is_signed == !a.empty()) throw UsageError("give either --a or all of --e1 --e2 --c");
    FoldResult fr;
    Outcome o;
    o.inputs = {{"a0", a0}, {"w", strs(wd)}};
    if (is_signed) {
      if (e1.empty() || e2.empty() || c.empty()) throw UsageError("--e1, --e2 and --c go together");
      fr = fold_signed(a0p, wd, FoldSigns{elem_arg(F, "--e1", e1), elem_arg(F, "--e2", e2), elem_arg(F, "--c", c)});
      o.inputs["e1"] = e1;
      o.inputs["e2"] = e2;
      o.inputs["c"] = c;
    } else {
      fr = fold(a0p, wd, poly_arg(F, "--a", a));
      o.inputs["a"] = a;
    }
    o.outputs = {{"num", fr.num.str()}, {"den", fr.den.str()}, {"word", strs(fr.word)}};
    o.summary = "(" + fr.num.str() + ")/(" + fr.den.str() + "), " + std::to_string(fr.word.size()) + " quotients";
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);
  json result = {{"command", echo},
                 {"field", g.field},
                 {"inputs", out.inputs},
                 {"outputs", out.outputs},
                 {"budgets", {{"budget", g.budget}, {"depth", g.depth}, {"witness_cap", g.witness_cap}, {"workers", g.workers}}}};
  std::cout << (g.pretty ? result.dump(2) : result.dump()) << "\n";
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << secs;
  std::cerr << out.summary << " (" << t.str() << " s)\n";
  return 0;
}
