#include "mconv_cli/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "mconv/braid.hpp"
#include "mconv/cohomology.hpp"
#include "mconv/convolution.hpp"
#include "mconv/error.hpp"
#include "mconv/k3count.hpp"
#include "mconv/linalg.hpp"
#include "mconv/modgroup.hpp"
#include "mconv_cli/fixtures.hpp"
#include "mconv_cli/tuple_file.hpp"

namespace mconv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a subcommand hands back: the JSON document and its human rendering.
struct Report {
  json data;
  std::string text;
};

struct Options {
  bool json_out = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string field;
  std::string left, right, tuple, out, word, lambda, z = "1", name;
  std::vector<std::string> positional;
  std::int64_t ell = 0, q = 0;
  std::uint64_t cap = 200000;
  int m = 3, r = 4;
};

MonodromyTuple load(const Options& o, const std::string& ref, const char* what) {
  if (ref.empty()) throw UsageError(std::string("missing --") + what);
  MonodromyTuple t = load_tuple_ref(ref);
  if (!o.field.empty()) {
    const Field target = Field::parse(o.field);
    if (target != t.field()) t = t.embedded(target);
  }
  return t;
}

Scalar lambda_in(const Options& o, const Field& f) {
  if (o.lambda.empty()) throw UsageError("missing --lambda");
  return parse_scalar(o.lambda, f);
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class v(s);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: " + s);
  }
}

json scalar_json(const Scalar& s) { return s.to_string(); }

std::string emit_tuple(const Options& o, const MonodromyTuple& t, json& data) {
  data["dimension"] = t.dim();
  data["entries"] = t.size();
  if (!o.out.empty()) {
    save_tuple_file(o.out, t);
    data["written"] = o.out;
    std::ostringstream ss;
    ss << "wrote " << o.out << " (dimension " << t.dim() << ", " << t.size() << " entries)\n";
    return ss.str();
  }
  data["tuple"] = tuple_to_json(t);
  return format_tuple(t);
}

Report cmd_convolve(const Options& o) {
  ConvolutionInput inp(load(o, o.left, "left"), load(o, o.right, "right"));
  auto res = middle_convolution_detailed(inp, o.threads);
  Report rep;
  json src = json::array();
  for (const auto& s : res.sources) {
    json one = json::array();
    for (auto [i, j] : s) one.push_back({i, j});
    src.push_back(one);
  }
  rep.data["sources"] = src;
  rep.text = emit_tuple(o, res.tuple, rep.data);
  return rep;
}

Report cmd_mcl(const Options& o) {
  auto t = load(o, o.tuple, "tuple");
  auto res = mc_lambda(t, lambda_in(o, t.field()));
  Report rep;
  rep.text = emit_tuple(o, res, rep.data);
  return rep;
}

Report cmd_rank(const Options& o) {
  ConvolutionInput inp(load(o, o.left, "left"), load(o, o.right, "right"));
  auto rf = rank_formula(inp);
  Report rep;
  rep.data["rank"] = rf.value;
  rep.data["precondition"] = rf.precondition_holds;
  rep.text = "rank " + std::to_string(rf.value) +
             (rf.precondition_holds ? " (precondition holds)\n" : " (precondition fails)\n");
  return rep;
}

Report cmd_check_conv(const Options& o) {
  auto c = is_convolution_sheaf(load(o, o.tuple, "tuple"));
  Report rep;
  rep.data["convolution_sheaf"] = c.pass;
  if (!c.pass) {
    rep.data["index"] = c.index;
    rep.data["condition"] = c.condition;
    if (c.tau) rep.data["tau"] = scalar_json(*c.tau);
    rep.text = "not a convolution sheaf: condition " + c.condition + " fails at i=" +
               std::to_string(c.index) + (c.tau ? ", tau=" + c.tau->to_string() : "") + "\n";
  } else {
    rep.text = "convolution sheaf\n";
  }
  return rep;
}

Report cmd_irred(const Options& o) {
  auto t = load(o, o.tuple, "tuple");
  const Scalar lam = lambda_in(o, t.field());
  auto v = irreducibility_criterion(t, {lam});
  Report rep;
  const bool irr = v == IrreducibilityVerdict::Irreducible;
  rep.data["verdict"] = irr ? "irreducible" : "inconclusive";
  rep.text = std::string(irr ? "irreducible" : "inconclusive") + "\n";
  return rep;
}

Report cmd_jordan(const Options& o) {
  auto t = load(o, o.tuple, "tuple");
  Report rep;
  json arr = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::string jd = jordan_data(t[k]).to_string();
    arr.push_back(jd);
    rep.text += (k + 1 == t.size() ? std::string("inf") : std::to_string(k + 1)) + ": " + jd + "\n";
  }
  rep.data["jordan"] = arr;
  return rep;
}

Report cmd_predict(const Options& o) {
  Report rep;
  if (!o.tuple.empty()) {
    auto t = load(o, o.tuple, "tuple");
    const std::string jd = predict_infinity_jordan(t, lambda_in(o, t.field())).to_string();
    rep.data["infinity"] = jd;
    rep.text = "inf: " + jd + "\n";
    return rep;
  }
  ConvolutionInput inp(load(o, o.left, "left"), load(o, o.right, "right"));
  json arr = json::array();
  for (const auto& [key, jd] : predict_local_jordan(inp)) {
    arr.push_back({{"i", key.first}, {"j", key.second}, {"jordan", jd.to_string()}});
    rep.text += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): " +
                jd.to_string() + "\n";
  }
  rep.data["local"] = arr;
  return rep;
}

Report cmd_braid(const Options& o) {
  auto t = load(o, o.tuple, "tuple");
  if (o.word.empty()) throw UsageError("missing --word");
  BraidWord w(static_cast<int>(t.r()));
  try {
    w = BraidWord::parse(o.word, static_cast<int>(t.r()));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Report rep;
  rep.text = emit_tuple(o, braid_act(t, w), rep.data);
  return rep;
}

Report cmd_cohomology(const Options& o) {
  auto t = load(o, o.tuple, "tuple");
  auto cs = cohomology_spaces(t);
  Report rep;
  rep.data = {{"H", cs.h.dim()},
              {"E", cs.e.dim()},
              {"U", cs.u.dim()},
              {"H1", cs.dim_h1()},
              {"H1_parabolic", cs.dim_parabolic()},
              {"formula", parabolic_rank_formula(t)}};
  std::ostringstream ss;
  ss << "dim H = " << cs.h.dim() << "\ndim E = " << cs.e.dim() << "\ndim U = " << cs.u.dim()
     << "\ndim H1 = " << cs.dim_h1() << "\ndim H1_p = " << cs.dim_parabolic()
     << "\nformula = " << parabolic_rank_formula(t) << "\n";
  rep.text = ss.str();
  return rep;
}

Report cmd_equiv(const Options& o) {
  if (o.positional.size() != 2) throw UsageError("equiv needs two tuples");
  auto a = load(o, o.positional[0], "tuple");
  auto b = load(o, o.positional[1], "tuple");
  Report rep;
  const bool eq = equivalent(a, b);
  rep.data["equivalent"] = eq;
  rep.text = eq ? "equivalent\n" : "not equivalent\n";
  return rep;
}

std::int64_t need_mod(const Options& o) {
  if (o.ell == 0) throw UsageError("missing --mod");
  return o.ell;
}

MonodromyTuple over_finite(const Options& o, MonodromyTuple t) {
  if (t.field().is_finite()) return t;
  return reduce_mod(t, need_mod(o));
}

Report cmd_reduce(const Options& o) {
  auto t = reduce_mod(load(o, o.tuple, "tuple"), need_mod(o));
  Report rep;
  rep.text = emit_tuple(o, t, rep.data);
  return rep;
}

Report cmd_group(const Options& o) {
  auto t = over_finite(o, load(o, o.tuple, "tuple"));
  std::vector<Matrix> gens(t.entries().begin(), t.entries().end() - 1);
  const Field f = t.field();
  GroupReport g;
  if (t.dim() == 3 && f.degree() == 1 && f.characteristic() != 2) {
    g = o3_recognition(gens, f.characteristic(), o.cap);
  } else {
    g.order = group_closure(gens, o.cap).order;
    g.absolutely_irreducible = group_absolutely_irreducible(gens);
    g.invariant_gram = invariant_symmetric_form(gens);
  }
  Report rep;
  rep.data["field"] = f.to_string();
  rep.data["order"] = g.order ? json(*g.order) : json("exceeds cap");
  rep.data["absolutely_irreducible"] = g.absolutely_irreducible;
  rep.data["invariant_gram"] = g.invariant_gram ? json(g.invariant_gram->to_string()) : json(nullptr);
  rep.data["recognized"] = g.recognized ? json(*g.recognized) : json(nullptr);
  std::ostringstream ss;
  ss << "field " << f.to_string() << "\norder "
     << (g.order ? std::to_string(*g.order) : std::string("exceeds cap")) << "\nabsolutely irreducible "
     << (g.absolutely_irreducible ? "yes" : "no") << "\ninvariant form "
     << (g.invariant_gram ? g.invariant_gram->to_string() : std::string("none")) << "\n";
  if (g.recognized) ss << "recognized " << *g.recognized << "\n";
  rep.text = ss.str();
  return rep;
}

Report cmd_primitivity(const Options& o) {
  auto t = over_finite(o, load(o, o.tuple, "tuple"));
  auto p = primitivity_bound(t);
  Report rep;
  rep.data = {{"n", p.n}, {"m", p.m}, {"x", p.x}, {"b", p.b}, {"primitive", p.primitive}};
  rep.data["bound"] = p.bound ? json(*p.bound) : json(nullptr);
  std::ostringstream ss;
  ss << "n=" << p.n << " m=" << p.m << " x=" << p.x << " b=" << p.b << " bound="
     << (p.bound ? std::to_string(*p.bound) : std::string("none")) << "\n"
     << (p.primitive ? "primitive" : "not decided") << "\n";
  rep.text = ss.str();
  return rep;
}

std::int64_t need_q(const Options& o) {
  if (o.q == 0) throw UsageError("missing --q");
  return o.q;
}

Report cmd_k3_count(const Options& o) {
  auto rec = count_record(need_q(o), parse_rational(o.z), o.threads);
  Report rep;
  rep.data = {{"q", rec.q}, {"N", rec.N}};
  rep.text = std::to_string(rec.N) + "\n";
  return rep;
}

Report cmd_k3_trace(const Options& o) {
  auto rec = count_record(need_q(o), parse_rational(o.z), o.threads);
  Report rep;
  rep.data = {{"q", rec.q}, {"N", rec.N}, {"trace", rec.trace.get_str()}};
  rep.text = rec.trace.get_str() + "\n";
  return rep;
}

Report cmd_k3_frob(const Options& o) {
  auto fd = frobenius_eigenvalues(need_q(o), o.threads);
  Report rep;
  rep.data = {{"p", fd.p},
              {"s3", fd.s3},
              {"s_minus1", fd.s_minus1},
              {"u", fd.u.get_str()},
              {"d", fd.d.get_str()},
              {"t_p", fd.t_p.get_str()},
              {"t_p2", fd.t_p2.get_str()},
              {"verified", fd.verified},
              {"alpha", fd.alpha_text()}};
  std::ostringstream ss;
  ss << "alpha = " << fd.alpha_text() << "\neigenvalues alpha, 1/alpha, " << fd.s3
     << "\nverified " << (fd.verified ? "yes" : "no") << "\n";
  rep.text = ss.str();
  return rep;
}

Report cmd_k3_nsdet(const Options&) {
  const Polynomial d = intersection_matrix_det();
  Report rep;
  json coeffs = json::array();
  for (const auto& c : d.coeffs()) coeffs.push_back(c.to_string());
  rep.data = {{"det", d.to_string()}, {"coefficients", coeffs}};
  rep.text = d.to_string() + "\n";
  return rep;
}

Report cmd_demo_sl(const Options& o) {
  auto d = sl_demo(o.m, o.r, o.threads);
  Report rep;
  rep.data = {{"m", d.m},
              {"r", d.r},
              {"field", d.field.to_string()},
              {"rank", d.rank},
              {"expected_rank", d.expected_rank},
              {"c1", d.c1.to_string()},
              {"c2", d.c2.to_string()},
              {"c1_matches", d.c1_matches},
              {"c2_homology_order4", d.c2_homology_order4},
              {"determinants_in_mu4", d.determinants_in_mu4},
              {"pass", d.all_pass()}};
  std::ostringstream ss;
  ss << "field " << d.field.to_string() << "\nrank " << d.rank << " (expected " << d.expected_rank
     << ")\nC1 " << d.c1.to_string() << (d.c1_matches ? " [ok]" : " [mismatch]") << "\nC2 "
     << d.c2.to_string() << (d.c2_homology_order4 ? " [homology of order 4]" : " [unexpected]")
     << "\ndeterminants in <zeta_4>: " << (d.determinants_in_mu4 ? "yes" : "no") << "\n"
     << (d.all_pass() ? "pass" : "FAIL") << "\n";
  rep.text = ss.str();
  if (!o.out.empty()) save_tuple_file(o.out, d.result);
  return rep;
}

Report cmd_fixtures_list(const Options&) {
  Report rep;
  json arr = json::array();
  for (const auto& f : fixtures()) {
    arr.push_back({{"name", f.name}, {"kind", f.kind}, {"description", f.description}});
    rep.text += f.name + " (" + f.kind + "): " + f.description + "\n";
  }
  rep.data["fixtures"] = arr;
  return rep;
}

Report cmd_fixtures_dump(const Options& o) {
  if (o.name.empty()) throw UsageError("missing fixture name");
  const Fixture& f = fixture(o.name);
  Report rep;
  rep.data = json::parse(f.text);
  rep.text = f.text + "\n";
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact middle convolution of monodromy tuples", "mconv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "machine-readable output");
  app.add_option("--seed", o.seed, "random seed (reserved for randomized commands)");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app.add_option("--field", o.field, "embed tuples into rational|cyclotomic:<n>|finite:<p>[,<k>]");

  std::vector<std::pair<CLI::App*, std::function<Report(const Options&)>>> handlers;
  auto sub = [&](CLI::App* parent, const char* name, const char* help,
                 std::function<Report(const Options&)> fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    handlers.emplace_back(s, std::move(fn));
    return s;
  };
  auto tuple_opt = [&](CLI::App* s) { s->add_option("--tuple", o.tuple, "tuple file or fixture:<name>"); };
  auto pair_opts = [&](CLI::App* s) {
    s->add_option("--left", o.left, "left tuple")->required();
    s->add_option("--right", o.right, "right tuple")->required();
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "write the result tuple here"); };

  auto* s = sub(&app, "convolve", "middle convolution of two tuples", cmd_convolve);
  pair_opts(s);
  out_opt(s);
  s = sub(&app, "mcl", "MC_lambda via Pochhammer matrices", cmd_mcl);
  tuple_opt(s);
  s->add_option("--lambda", o.lambda)->required();
  out_opt(s);
  s = sub(&app, "rank", "rank formula for a convolution", cmd_rank);
  pair_opts(s);
  s = sub(&app, "check-conv", "convolution-sheaf conditions", cmd_check_conv);
  tuple_opt(s);
  s = sub(&app, "irred", "irreducibility criterion for convolution with a Kummer tuple", cmd_irred);
  tuple_opt(s);
  s->add_option("--lambda", o.lambda)->required();
  s = sub(&app, "jordan", "Jordan data of every entry", cmd_jordan);
  tuple_opt(s);
  s = sub(&app, "predict", "predicted local Jordan data", cmd_predict);
  s->add_option("--left", o.left);
  s->add_option("--right", o.right);
  tuple_opt(s);
  s->add_option("--lambda", o.lambda);
  s = sub(&app, "braid", "braid action on a tuple", cmd_braid);
  tuple_opt(s);
  s->add_option("--word", o.word, "e.g. \"b1 b2^-1\"");
  out_opt(s);
  s = sub(&app, "cohomology", "dimensions of H, E, U and H1", cmd_cohomology);
  tuple_opt(s);
  s = sub(&app, "equiv", "simultaneous conjugacy test", cmd_equiv);
  s->add_option("tuples", o.positional, "two tuples")->expected(2);
  s = sub(&app, "reduce", "reduce a tuple mod a prime", cmd_reduce);
  tuple_opt(s);
  s->add_option("--mod", o.ell)->required();
  out_opt(s);
  s = sub(&app, "group", "order and invariants of the generated finite group", cmd_group);
  tuple_opt(s);
  s->add_option("--mod", o.ell);
  s->add_option("--cap", o.cap, "closure size limit");
  s = sub(&app, "primitivity", "primitivity bound", cmd_primitivity);
  tuple_opt(s);
  s->add_option("--mod", o.ell);

  CLI::App* k3 = app.add_subcommand("k3", "point counts on the K3 fibre");
  k3->require_subcommand(1);
  k3->fallthrough();
  for (auto [name, fn] : {std::pair<const char*, Report (*)(const Options&)>{"count", cmd_k3_count},
                          {"trace", cmd_k3_trace},
                          {"frob", cmd_k3_frob}}) {
    s = sub(k3, name, name, fn);
    s->add_option("--q", o.q)->required();
    s->add_option("--z", o.z, "fibre parameter");
  }
  sub(k3, "nsdet", "intersection matrix determinant", cmd_k3_nsdet);

  CLI::App* demo = app.add_subcommand("demo", "worked constructions");
  demo->require_subcommand(1);
  demo->fallthrough();
  s = sub(demo, "sl", "the SL realization tuple", cmd_demo_sl);
  s->add_option("--m", o.m);
  s->add_option("--r", o.r);
  out_opt(s);

  CLI::App* fx = app.add_subcommand("fixtures", "compiled-in fixtures");
  fx->require_subcommand(1);
  fx->fallthrough();
  sub(fx, "list", "list fixtures", cmd_fixtures_list);
  s = sub(fx, "dump", "print a fixture", cmd_fixtures_dump);
  s->add_option("name", o.name)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [cmd, fn] : handlers) {
      if (!cmd->parsed()) continue;
      Report rep = fn(o);
      if (o.json_out)
        out << rep.data.dump(2) << "\n";
      else
        out << rep.text;
      return 0;
    }
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mconv::cli
