#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adlab/decompose.hpp"
#include "adlab/dissociation.hpp"
#include "adlab/energy.hpp"
#include "adlab/growth.hpp"
#include "adlab/harness.hpp"
#include "adlab/modular.hpp"
#include "adlab/setio.hpp"

using namespace adlab;

namespace {

struct Globals {
  int k = 1;
  std::string op = "add";
  uint64_t budget = 0;
  uint64_t seed = 1;
  bool json_out = false;
  size_t cap = size_t{1} << 24;
  int64_t mod = 0;
};

Globals G;

uint64_t budget() { return G.budget ? G.budget : default_budget(); }

// inline list "1,2,5", range "1..16", or a set file
GroundSet load(const std::string& s) {
  Ambient amb = G.mod ? Ambient::mod(G.mod) : Ambient::Z();
  if (std::filesystem::exists(s)) return read_set_file(s);
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    int64_t lo = std::stoll(s.substr(0, dots)), hi = std::stoll(s.substr(dots + 2));
    if (hi < lo) throw InvalidInput("empty range " + s);
    std::vector<int64_t> v;
    for (int64_t x = lo; x <= hi; ++x) v.push_back(x);
    return GroundSet(amb, v);
  }
  return parse_inline(s, amb);
}

void emit(const json& j, const std::string& text) {
  if (G.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json cert_json(const Certificate& c) {
  return {{"verdict", c.verdict == Verdict::Dissociated ? "dissociated" : "relation"},
          {"k", c.k},
          {"relation", c.relation},
          {"method", c.method},
          {"states", c.states_visited}};
}

// key=value with integer or comma-list values
json parse_params(const std::vector<std::string>& kv) {
  json p = json::object();
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected key=value, got " + s);
    std::string key = s.substr(0, eq), val = s.substr(eq + 1);
    if (val.find(',') != std::string::npos || key == "gens" || key == "lengths" || key == "steps" ||
        key == "elements") {
      json arr = json::array();
      for (int64_t x : parse_inline(val).scalars()) arr.push_back(x);
      // parse_inline sorts; keep the given order for lengths/steps
      if (key == "lengths" || key == "steps") {
        arr = json::array();
        std::string t = val;
        for (auto& ch : t)
          if (ch == ',') ch = ' ';
        std::istringstream is(t);
        int64_t x;
        while (is >> x) arr.push_back(x);
      }
      p[key] = arr;
    } else {
      p[key] = std::stoll(val);
    }
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adlab: additive dimension experiments"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.add_option("--k", G.k, "dissociation / energy order")->check(CLI::PositiveNumber);
  app.add_option("--op", G.op, "add or mul")->check(CLI::IsMember({"add", "mul"}));
  app.add_option("--budget", G.budget, "search budget (default: ADLAB_BUDGET or 2^26)");
  app.add_option("--seed", G.seed, "seed for randomized steps");
  app.add_flag("--json", G.json_out, "print JSON");
  app.add_option("--cap", G.cap, "size cap for sumsets");
  app.add_option("--mod", G.mod, "read inline sets as residues mod N");

  int rc = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "run a claim suite");
  std::string suite = "core", out_path;
  std::vector<std::string> claim_ids;
  int n_max = 4, k_max = 3, threads = 0;
  verify->add_option("--suite", suite, "core, unconditional, exhaustive10, tiny");
  verify->add_option("--out", out_path, "report file");
  verify->add_option("--claims", claim_ids, "claim ids (default: the suite's)");
  verify->add_option("--n-max", n_max);
  verify->add_option("--k-max", k_max);
  verify->add_option("--threads", threads);
  verify->callback([&] {
    SuiteOptions opt;
    opt.budget = G.budget ? G.budget : suite_budget(suite);
    opt.seed = G.seed;
    opt.n_max = n_max;
    opt.k_max = k_max;
    opt.threads = threads;
    if (app.count("--cap")) opt.cap = G.cap;
    auto claims = claim_ids.empty() ? suite_claims(suite) : claim_ids;
    auto inst = suite_instances(suite, G.seed);
    SuiteResult res = run_suite(claims, inst, opt);
    json rep = suite_report(suite, claims, opt, res);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw InvalidInput("cannot write " + out_path);
      f << rep.dump(2) << "\n";
    }
    if (G.json_out) {
      std::cout << rep["summary"].dump(2) << "\n";
    } else {
      std::cout << "suite " << suite << ": " << inst.size() << " instances, " << res.records.size()
                << " records, " << res.skipped << " skipped, " << res.hard_violations << " hard violations\n";
      for (const auto& f : rep["summary"]["fits"])
        std::cout << "  " << f["claim_id"].get<std::string>() << " [" << f["class"].get<std::string>() << ", "
                  << f["direction"].get<std::string>() << "] n=" << f["records"] << " value=" << f["value"]
                  << " violations=" << f["violations"] << "\n";
    }
    if (res.hard_violations) rc = 1;
  });

  // dim
  auto* dim = app.add_subcommand("dim", "largest k-dissociated subset");
  std::string set_arg;
  bool spans = false;
  dim->add_option("set", set_arg, "inline list, a..b, or file")->required();
  dim->add_flag("--spans", spans, "also d_k and d*_k");
  dim->callback([&] {
    GroundSet a = load(set_arg);
    DimensionBounds d = dim_k_exact(a, G.k, budget());
    json j = {{"k", G.k},          {"lower", d.lower},     {"upper", d.upper}, {"exact", d.exact},
              {"witness", d.witness.str()}, {"method", d.method}, {"states", d.states}};
    std::string text = "dim_" + std::to_string(G.k) + " = " +
                       (d.exact ? std::to_string(d.lower)
                                : "[" + std::to_string(d.lower) + ", " + std::to_string(d.upper) + "]") +
                       "  witness " + d.witness.str() + "\n";
    if (spans) {
      SpanBounds s = d_k_exact(a, G.k, budget());
      SpanBounds st = d_star_bounds(a, G.k, budget());
      j["d"] = {{"lower", s.lower}, {"upper", s.upper}, {"exact", s.exact}, {"witness", s.witness.str()}};
      j["d_star"] = {{"lower", st.lower}, {"upper", st.upper}, {"exact", st.exact}};
      text += "d_k = [" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + "]  d*_k = [" +
              std::to_string(st.lower) + ", " + std::to_string(st.upper) + "]\n";
    }
    emit(j, text);
  });

  // energy
  auto* energy = app.add_subcommand("energy", "T_k(A)");
  energy->add_option("set", set_arg)->required();
  energy->callback([&] {
    GroundSet a = load(set_arg);
    Op op = parse_op(G.op);
    // T_1 is just |A|; without --k count quadruples
    const int k = app.count("--k") ? G.k : 2;
    BigInt t = t_k(a, k, op);
    emit({{"k", k}, {"op", op_name(op)}, {"size", a.size()}, {"T_k", to_dec(t)}},
         "T_" + std::to_string(k) + " = " + to_dec(t) + "\n");
  });

  // sumset
  auto* sum = app.add_subcommand("sumset", "nA - mA");
  int sn = 2, sm = 0;
  bool show = false;
  sum->add_option("set", set_arg)->required();
  sum->add_option("--n", sn);
  sum->add_option("--m", sm);
  sum->add_flag("--show", show, "print the set");
  sum->callback([&] {
    GroundSet a = load(set_arg);
    GroundSet s = iterated_sumset(a, sn, sm, G.cap);
    json j = {{"n", sn}, {"m", sm}, {"size", s.size()}};
    if (show) j["set"] = s.str();
    emit(j, "|" + std::to_string(sn) + "A - " + std::to_string(sm) + "A| = " + std::to_string(s.size()) + "\n" +
                (show ? s.str() + "\n" : ""));
  });

  // span
  auto* span = app.add_subcommand("span", "Span_k(S)");
  span->add_option("set", set_arg)->required();
  span->add_flag("--show", show);
  span->callback([&] {
    GroundSet s = span_k(load(set_arg), G.k, G.cap);
    json j = {{"k", G.k}, {"size", s.size()}};
    if (show) j["set"] = s.str();
    emit(j, "|Span_" + std::to_string(G.k) + "| = " + std::to_string(s.size()) + "\n" + (show ? s.str() + "\n" : ""));
  });

  // cube
  auto* cub = app.add_subcommand("cube", "combinatorial cube on generators");
  cub->add_option("set", set_arg)->required();
  cub->callback([&] {
    GroundSet g = load(set_arg);
    GroundSet q = cube(g);
    bool proper = cube_is_proper(g);
    emit({{"size", q.size()}, {"proper", proper}, {"set", q.str()}},
         "|Q| = " + std::to_string(q.size()) + (proper ? " (proper)\n" : " (not proper)\n") + q.str() + "\n");
  });

  // subgroup
  auto* sg = app.add_subcommand("subgroup", "multiplicative subgroup of F_p");
  int64_t sp = 7, st = 3;
  sg->add_option("--p", sp)->required();
  sg->add_option("--t", st)->required();
  sg->callback([&] {
    GroundSet g = subgroup(sp, st);
    BigInt t = t_k(g, std::max(G.k, 2));
    DimensionBounds d = dim_k_exact(g, 1, budget());
    emit({{"p", sp}, {"t", st}, {"set", g.str()}, {"T_k", to_dec(t)}, {"k", std::max(G.k, 2)},
          {"dim", d.upper}, {"dim_exact", d.exact}},
         "G = " + g.str() + "\nT_" + std::to_string(std::max(G.k, 2)) + " = " + to_dec(t) +
             "\ndim = " + std::to_string(d.upper) + (d.exact ? "" : " (upper)") + "\n");
  });

  // dirichlet
  auto* dir = app.add_subcommand("dirichlet", "D_{s,N}(A) and the dimension bound");
  int64_t dn = 0;
  double ds = 2;
  dir->add_option("set", set_arg)->required();
  dir->add_option("--N", dn, "modulus (default: the set's)");
  dir->add_option("--s", ds);
  dir->callback([&] {
    GroundSet a = load(set_arg);
    DirichletValue v = dirichlet_min(a, dn, ds);
    json j = {{"s", ds}, {"exact", v.exact}, {"value", v.exact ? json(to_frac(v.value)) : num(double(v.approx))},
              {"approx", num(double(v.approx))}, {"argmin_q", v.argmin_q}};
    std::string text = "D = " + (v.exact ? to_frac(v.value) : std::to_string(double(v.approx))) +
                       " at q = " + std::to_string(v.argmin_q) + "\n";
    if (ds == std::floor(ds) && ds >= 1) {
      DirichletDimCheck ch = verify_dirichlet_dim(a, dn, static_cast<int>(ds), budget());
      j["dim"] = ch.d;
      j["bound"] = num(double(ch.rhs));
      j["holds"] = ch.holds;
      text += "dim = " + std::to_string(ch.d) + " vs bound " + std::to_string(double(ch.rhs)) +
              (ch.holds ? " (holds)\n" : " (FAILS)\n");
    }
    emit(j, text);
  });

  // fourier
  auto* fou = app.add_subcommand("fourier", "largest nontrivial Fourier coefficient");
  fou->add_option("set", set_arg)->required();
  fou->add_option("--N", dn);
  fou->callback([&] {
    FourierMax f = fourier_max(load(set_arg), dn);
    emit({{"value", f.value}, {"argmax", f.argmax}, {"parseval_ok", f.parseval_ok}},
         "max |A^(r)| = " + std::to_string(f.value) + " at r = " + std::to_string(f.argmax) + "\n");
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "split A into additively and multiplicatively poor parts");
  int ds_s = 2, ds_q = 2, max_iter = 64;
  std::string K_str, trace, replay;
  dec->add_option("set", set_arg);
  dec->add_option("--s", ds_s);
  dec->add_option("--q", ds_q);
  dec->add_option("--K", K_str, "threshold parameter, rational p/q (default derived from |A| and s)");
  dec->add_option("--max-iter", max_iter);
  dec->add_option("--trace", trace, "write a replayable trace");
  dec->add_option("--replay", replay, "re-run a trace and compare");
  dec->callback([&] {
    json inputs;
    if (!replay.empty()) {
      std::ifstream f(replay);
      if (!f) throw InvalidInput("cannot read " + replay);
      json t = json::parse(f);
      inputs = t.at("inputs");
      GroundSet a = GroundSet::ints(inputs.at("elements").get<std::vector<int64_t>>());
      DecompositionResult r = dec_tk(a, inputs.at("s"), inputs.at("q"), Rational(inputs.at("K").get<std::string>()),
                                     inputs.at("max_iter"), budget());
      bool same = to_json(r) == t.at("result");
      emit({{"replay_matches", same}}, same ? "replay matches\n" : "replay DIFFERS\n");
      if (!same) rc = 1;
      return;
    }
    if (set_arg.empty()) throw InvalidInput("decompose needs a set");
    GroundSet a = load(set_arg);
    Rational K = K_str.empty() ? dec_default_K(a.size(), ds_s) : Rational(K_str);
    DecompositionResult r = dec_tk(a, ds_s, ds_q, K, max_iter, budget());
    json res = to_json(r);
    if (!trace.empty()) {
      json t = {{"schema", 1},
                {"inputs", {{"elements", a.scalars()}, {"s", ds_s}, {"q", ds_q}, {"K", to_frac(K)}, {"max_iter", max_iter},
                            {"seed", G.seed}}},
                {"result", res}};
      std::ofstream f(trace);
      if (!f) throw InvalidInput("cannot write " + trace);
      f << t.dump(2) << "\n";
    }
    emit(res, "B = " + r.B.str() + "\nC = " + r.C.str() + "\nT_s(B) = " + to_dec(r.ts_add_B) +
                  "  T_s^x(C) = " + to_dec(r.ts_mul_C) + "  threshold = " + to_frac(r.threshold) +
                  "\npeels = " + std::to_string(r.iterations.size()) +
                  (r.warning.empty() ? "" : "\nwarning: " + r.warning) + "\n");
  });

  // bsg
  auto* bsg = app.add_subcommand("bsg", "asymmetric Balog-Szemeredi-Gowers");
  std::string b_arg, bK = "0";
  int bl = 1;
  bool relax = false;
  bsg->add_option("set", set_arg)->required();
  bsg->add_option("--B", b_arg, "second set (default: A)");
  bsg->add_option("--K", bK, "energy parameter (default: measured)");
  bsg->add_option("--l", bl);
  bsg->add_flag("--relax", relax, "allow |A| < |B|");
  bsg->callback([&] {
    GroundSet a = load(set_arg);
    GroundSet b = b_arg.empty() ? a : load(b_arg);
    Rational K(bK);
    if (K == 0) {
      BigInt e = additive_energy(a, b);
      K = Rational(BigInt(a.size()) * BigInt(b.size()) * BigInt(b.size()), e);
    }
    BsgResult r = bsg_asymmetric(a, b, K, bl, budget(), relax);
    emit(to_json(r), "H = " + r.H.str() + "\n|H+H|/|H| = " + to_frac(r.doubling) +
                         "  |B cap (H+x)| = " + std::to_string(r.intersection) + "\n");
  });

  // sidon
  auto* sid = app.add_subcommand("sidon", "largest B_h set inside A");
  int sh = 2;
  bool greedy = false;
  sid->add_option("set", set_arg)->required();
  sid->add_option("--h", sh);
  sid->add_flag("--greedy", greedy);
  sid->callback([&] {
    GroundSet a = load(set_arg);
    Op op = parse_op(G.op);
    GroundSet b = sidon_extract(a, sh, op, greedy ? SidonMode::Greedy : SidonMode::ExactTiny, budget());
    emit({{"h", sh}, {"op", op_name(op)}, {"size", b.size()}, {"set", b.str()}},
         "|B| = " + std::to_string(b.size()) + "  " + b.str() + "\n");
  });

  // ratiobox
  auto* rb = app.add_subcommand("ratiobox", "largest n with [n]/[n] inside (A-A)/(A-A)");
  rb->add_option("set", set_arg)->required();
  rb->callback([&] {
    RatioBox r = ratio_box(load(set_arg));
    json j = {{"n", r.n}};
    std::string text = "n = " + std::to_string(r.n);
    if (r.missing) {
      j["missing"] = {r.missing->first, r.missing->second};
      text += "  missing " + std::to_string(r.missing->first) + "/" + std::to_string(r.missing->second);
    }
    emit(j, text + "\n");
  });

  // dissociation check
  auto* dis = app.add_subcommand("dissociated", "k-dissociation certificate");
  dis->add_option("set", set_arg)->required();
  dis->callback([&] {
    GroundSet a = load(set_arg);
    Certificate c = is_k_dissociated(a, G.k, budget());
    std::string rel;
    for (int64_t e : c.relation) rel += std::to_string(e) + " ";
    emit(cert_json(c), c.verdict == Verdict::Dissociated ? "dissociated\n" : "relation: " + rel + "\n");
  });

  // gen
  auto* gen = app.add_subcommand("gen", "realize a generator");
  std::string gname;
  std::vector<std::string> kv;
  gen->add_option("generator", gname)->required();
  gen->add_option("params", kv, "key=value");
  gen->callback([&] {
    InstanceSpec s{gname, parse_params(kv), G.seed};
    GroundSet a = generate(s);
    json j = to_json(s);
    j["size"] = a.size();
    j["set"] = a.str();
    emit(j, format_set(a));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
