#include "chromalg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chromalg/chromatic.hpp"
#include "chromalg/dsl.hpp"
#include "chromalg/json_io.hpp"
#include "chromalg/ncqsym.hpp"
#include "chromalg/verify.hpp"

namespace chromalg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Inline JSON when it looks like JSON, otherwise a file path.
Json load_json(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return parse_json(read_text(arg));
}

struct GraphInput {
  std::vector<std::string> dsl;
  std::vector<std::string> json;

  void attach(CLI::App* app, bool many) {
    auto* d = app->add_option("--dsl", dsl, "builder expression, e.g. W(C(2),C(1))");
    auto* j = app->add_option("--json", json, "digraph JSON (inline or file path)");
    if (!many) {
      d->expected(0, 1);
      j->expected(0, 1);
    }
  }

  std::vector<LabelledDigraph> graphs() const {
    std::vector<LabelledDigraph> out;
    for (const auto& s : dsl) out.push_back(parse_dsl(s));
    for (const auto& s : json) out.push_back(digraph_from_json(load_json(s)));
    return out;
  }

  LabelledDigraph one() const {
    auto gs = graphs();
    if (gs.size() != 1) throw UsageError("exactly one of --dsl or --json is required");
    return gs[0];
  }
};

// How to treat the ascent variable in output.
struct TMode {
  bool keep = false;
  std::optional<mpz_class> value;  // unset with keep=false means t = 1

  static TMode parse(const std::string& s) {
    TMode m;
    if (s == "keep") {
      m.keep = true;
      return m;
    }
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("--t takes 'keep' or an integer");
    if (v != 1) m.value = v;
    return m;
  }

  template <class Key>
  LinearCombination<Key> apply(const LinearCombination<Key>& f) const {
    if (keep) return f;
    LinearCombination<Key> out;
    for (const auto& [k, c] : f) out.add(k, TPoly(value ? c.eval(*value) : c.at_one()));
    return out;
  }
};

struct Printer {
  bool pretty = false;
  std::ostream& out;

  void json(const Json& j) const { out << j.dump(2) << "\n"; }
  void text(const std::string& s) const { out << (s.empty() ? "0" : s) << "\n"; }

  template <class T>
  void value(const T& x) const {
    if (pretty)
      text(to_string(x));
    else
      json(to_json(x));
  }
};

std::string replace_letter(std::string s, const std::string& letter) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'M' && i + 1 < s.size() && s[i + 1] == '(') {
      out += letter;
      continue;
    }
    out += s[i];
  }
  return out;
}

std::string rational_tpoly_string(const RationalTCoeff& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string mag = mpq_class(abs(c[i])).get_str();
    if (!s.empty()) s += c[i] < 0 ? "-" : "+";
    else if (c[i] < 0) s += "-";
    if (i == 0 || mag != "1") s += mag;
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

const std::map<std::string, SymKind>& sym_kinds() {
  static const std::map<std::string, SymKind> k{{"m", SymKind::kM}, {"maug", SymKind::kMAug},
                                                {"e", SymKind::kE}, {"eaug", SymKind::kEAug},
                                                {"h", SymKind::kH}, {"p", SymKind::kP},
                                                {"s", SymKind::kS}};
  return k;
}

SymKind sym_kind(const std::string& s) {
  auto it = sym_kinds().find(s);
  if (it == sym_kinds().end()) throw UsageError("unknown symmetric basis '" + s + "'");
  return it->second;
}

void print_sym(const Printer& p, const std::string& kind, const std::map<Partition, RationalTCoeff>& coords) {
  if (p.pretty) {
    std::string s;
    for (const auto& [l, c] : coords) {
      bool all_zero = std::all_of(c.begin(), c.end(), [](const mpq_class& q) { return q == 0; });
      if (all_zero) continue;
      std::string cs = rational_tpoly_string(c);
      if (!s.empty()) s += "+";
      if (cs == "-1") s += "-";
      else if (cs != "1") s += cs.find_first_of("+-", 1) == std::string::npos ? cs : "(" + cs + ")";
      s += kind + to_string(l);
    }
    p.text(s);
    return;
  }
  Json terms = Json::array();
  for (const auto& [l, c] : coords) {
    Json cj = Json::array();
    for (const auto& q : c) cj.push_back(q.get_str());
    terms.push_back(Json{{"partition", to_json(l)}, {"coeff_t", cj}});
  }
  p.json(Json{{"basis", "sym:" + kind}, {"terms", terms}});
}

void print_in_basis(const Printer& p, const QSymExpr& f, const std::string& basis) {
  if (basis.rfind("sym:", 0) == 0) {
    std::string kind = basis.substr(4);
    print_sym(p, kind, to_sym_basis(f, sym_kind(kind)));
    return;
  }
  static const std::map<std::string, QBasis> q{{"M", QBasis::kM}, {"F", QBasis::kF}, {"Fbar", QBasis::kFbar}};
  auto it = q.find(basis);
  if (it == q.end()) throw UsageError("unknown basis '" + basis + "'");
  auto g = to_basis(f, it->second);
  if (p.pretty) {
    p.text(replace_letter(to_string(g), basis));
  } else {
    Json j = to_json(g);
    j["basis"] = basis;
    p.json(j);
  }
}

void print_in_basis_nc(const Printer& p, const NCQSymExpr& f, const std::string& basis) {
  if (basis == "sym:m") {
    p.value(to_m_coordinates(f));
    return;
  }
  static const std::map<std::string, NCBasis> q{{"M", NCBasis::kM}, {"F", NCBasis::kF}, {"Fbar", NCBasis::kFbar}};
  auto it = q.find(basis);
  if (it == q.end()) throw UsageError("unknown noncommutative basis '" + basis + "' (M, F, Fbar, sym:m)");
  auto g = to_basis_nc(f, it->second);
  if (p.pretty) {
    p.text(replace_letter(to_string(g), basis));
  } else {
    Json j = to_json(g);
    j["basis"] = basis;
    p.json(j);
  }
}

RLevel parse_r(int r) {
  if (r < 1) throw UsageError("--r must be positive");
  return RLevel(r);
}

// ---- subcommands ------------------------------------------------------------------

struct ExpandCmd {
  GraphInput input;
  bool nc = false;
  std::string t = "1";
  std::string basis = "M";
  int r = 0;
  int threads = 1;

  int run(const Printer& p) const {
    auto g = input.one();
    TMode tm = TMode::parse(t);
    if (!nc) {
      if (r) throw UsageError("--r needs --nc");
      auto f = tm.apply(expand(g.graph(), ExpandOptions{threads}));
      print_in_basis(p, f, basis);
      return 0;
    }
    auto f = tm.apply(expand_nc(g));
    if (r) {
      if (basis != "M") throw UsageError("--r prints M coordinates only");
      p.value(r_regroup(f, parse_r(r)));
      return 0;
    }
    print_in_basis_nc(p, f, basis);
    return 0;
  }
};

struct PolyCmd {
  GraphInput input;
  std::optional<long> eval;
  int threads = 1;

  int run(const Printer& p) const {
    auto g = input.one();
    auto poly = chromatic_polynomial(specialize_t(expand(g.graph(), ExpandOptions{threads})));
    if (eval) {
      p.out << poly.eval(*eval).get_str() << "\n";
      return 0;
    }
    p.value(poly);
    return 0;
  }
};

struct CombineCmd {
  GraphInput input;
  std::string kind = "U";

  int run(const Printer& p) const {
    static const std::map<std::string, SumKind> sums{
        {"U", SumKind::kDisjoint}, {"D", SumKind::kDashed}, {"S", SumKind::kSolid}, {"W", SumKind::kDouble}};
    auto gs = input.graphs();
    if (gs.empty()) throw UsageError("combine needs at least one input");
    auto it = sums.find(kind);
    if (it == sums.end()) throw UsageError("--sum takes U, D, S or W");
    LabelledDigraph acc = gs[0];
    for (std::size_t i = 1; i < gs.size(); ++i) acc = combine_labelled(it->second, acc, gs[i], true);
    if (!p.pretty) {
      p.json(to_json(acc));
      return 0;
    }
    std::string s = "n=" + std::to_string(acc.n());
    for (const auto& e : acc.graph().edges())
      s += " " + std::to_string(acc.labels()[e.from]) + "-" + to_string(e.kind) + "->" +
           std::to_string(acc.labels()[e.to]);
    p.text(s);
    return 0;
  }
};

struct CoproductCmd {
  GraphInput input;
  std::string expr;
  bool nc = false;
  std::string t = "1";
  int r = 0;

  int run(const Printer& p) const {
    TMode tm = TMode::parse(t);
    if (r && !nc) throw UsageError("--r needs --nc");
    if (!nc) {
      QSymExpr f;
      if (!expr.empty()) {
        f = qsym_from_json(load_json(expr));
      } else {
        auto g = input.one();
        if (!tm.keep && !tm.value) {
          p.value(coproduct_digraph(g.graph()));
          return 0;
        }
        f = expand(g.graph());
      }
      p.value(tm.apply(coproduct(f)));
      return 0;
    }
    NCQSymExpr f = expr.empty() ? expand_nc(input.one()) : ncqsym_from_json(load_json(expr));
    auto x = tm.apply(coproduct_nc(f));
    if (r)
      p.value(r_regroup(x, parse_r(r)));
    else
      p.value(x);
    return 0;
  }
};

struct ProductCmd {
  GraphInput input;
  bool nc = false;
  std::string t = "1";

  int run(const Printer& p) const {
    auto gs = input.graphs();
    if (gs.size() != 2) throw UsageError("product takes exactly two inputs");
    TMode tm = TMode::parse(t);
    if (nc)
      p.value(tm.apply(multiply_nc(expand_nc(gs[0]), expand_nc(gs[1]))));
    else
      p.value(tm.apply(multiply(expand(gs[0].graph()), expand(gs[1].graph()))));
    return 0;
  }
};

struct VerifyCmd {
  VerifyOptions opt;
  std::string replay_arg;

  int run(const Printer& p) const {
    VerifyReport report;
    if (!replay_arg.empty()) {
      report = replay(load_json(replay_arg));
    } else {
      if (opt.suite.empty()) throw UsageError("--suite or --replay is required");
      report = run_suite(opt);
    }
    if (p.pretty) {
      p.out << report.suite << ": " << report.checks << " checks, " << report.failures << " failures\n";
      for (const auto& c : report.counterexamples) p.out << c.dump() << "\n";
    } else {
      p.json(to_json(report));
    }
    return report.ok() ? 0 : 1;
  }
};

struct BasesCmd {
  std::string space = "qsym";
  int n = 3;
  int r = 2;
  std::string kind = "M";

  int run(const Printer& p) const {
    if (n < 0 || n > 7) throw UsageError("--n must lie in 0..7");
    Json elements = Json::array();
    std::string pretty;
    auto emit = [&](const std::string& index, const Json& index_json, const auto& f) {
      elements.push_back(Json{{"index", index_json}, {"expansion", to_json(f)}});
      pretty += index + " = " + (f.is_zero() ? std::string("0") : to_string(f)) + "\n";
    };
    if (space == "qsym") {
      if (kind.rfind("sym:", 0) == 0) {
        SymKind k = sym_kind(kind.substr(4));
        for (const auto& l : all_partitions(n)) emit(kind.substr(4) + to_string(l), to_json(l), basis_sym(k, l));
      } else {
        static const std::map<std::string, QSymExpr (*)(const Composition&)> q{
            {"M", basis_M}, {"F", basis_F}, {"Fbar", basis_Fbar}};
        auto it = q.find(kind);
        if (it == q.end()) throw UsageError("unknown qsym kind '" + kind + "'");
        for (const auto& a : all_compositions(n)) emit(kind + to_string(a), to_json(a), it->second(a));
      }
    } else if (space == "ncqsym") {
      static const std::map<std::string, NCBasis> qb{{"M", NCBasis::kM}, {"F", NCBasis::kF}, {"Fbar", NCBasis::kFbar}};
      static const std::map<std::string, NCSymKind> sb{{"sym:m", NCSymKind::kM}, {"sym:e", NCSymKind::kE},
                                                       {"sym:h", NCSymKind::kH}, {"sym:p", NCSymKind::kP},
                                                       {"sym:S", NCSymKind::kS}};
      if (auto it = qb.find(kind); it != qb.end()) {
        for (const auto& phi : all_set_compositions(n)) emit(kind + to_string(phi), to_json(phi), basis_nc(it->second, phi));
      } else if (auto jt = sb.find(kind); jt != sb.end()) {
        for (const auto& pi : all_set_partitions(n))
          emit(kind.substr(4) + "_" + to_string(pi), to_json(pi), basis_ncsym(jt->second, pi));
      } else {
        throw UsageError("unknown ncqsym kind '" + kind + "'");
      }
    } else if (space == "qsym-r") {
      static const std::map<std::string, RKind> rk{
          {"M", RKind::kM}, {"S", RKind::kS}, {"Fbar", RKind::kFbar}, {"Sbar", RKind::kSbar}};
      auto it = rk.find(kind);
      if (it == rk.end()) throw UsageError("unknown qsym-r kind '" + kind + "'");
      for (const auto& x : all_r_compositions(n, parse_r(r)))
        emit(kind + "(" + to_string(x.beta()) + "," + to_string(x.mu()) + ")",
             Json{{"beta", to_json(x.beta())}, {"mu", to_json(x.mu())}}, basis_r(it->second, x));
    } else if (space == "ncqsym-r") {
      static const std::map<std::string, NCRKind> rk{{"M", NCRKind::kM}, {"Fbar", NCRKind::kFbar}};
      auto it = rk.find(kind);
      if (it == rk.end()) throw UsageError("unknown ncqsym-r kind '" + kind + "'");
      for (const auto& x : all_r_set_compositions(n, parse_r(r)))
        emit(kind + to_string(x), to_json(x), r_regroup(basis_ncr(it->second, x), x.r()));
    } else {
      throw UsageError("--space takes qsym, ncqsym, qsym-r or ncqsym-r");
    }
    if (p.pretty)
      p.out << pretty;
    else
      p.json(Json{{"space", space}, {"kind", kind}, {"n", n}, {"elements", elements}});
    return 0;
  }
};

struct MrCmd {
  std::string perm;

  int run(const Printer& p) const {
    Json j = perm.find_first_of("[") == std::string::npos ? Json(perm) : parse_json(perm);
    p.value(mr_F(permutation_from_json(j)));
    return 0;
  }
};

struct BalancedCmd {
  std::string graph;
  std::string dsl;
  int k = 1;

  int run(const Printer& p) const {
    if (graph.empty() == dsl.empty()) throw UsageError("exactly one of --graph or --dsl is required");
    if (k < 1) throw UsageError("--k must be positive");
    SimpleGraph h = dsl.empty() ? simple_graph_from_json(load_json(graph)) : underlying(parse_dsl(dsl).graph());
    Json list = Json::array();
    std::string pretty;
    for (const auto& o : orientations(h)) {
      if (!is_k_balanced(o, k)) continue;
      list.push_back(to_json(o));
      std::string s;
      for (const auto& e : o.edges()) s += (s.empty() ? "" : " ") + std::to_string(e.from) + "->" + std::to_string(e.to);
      pretty += "[" + s + "]\n";
    }
    auto x = humpert(h, k);
    if (p.pretty)
      p.out << pretty << "X^" << k << " = " << (x.is_zero() ? "0" : to_string(x)) << "\n";
    else
      p.json(Json{{"k", k}, {"orientations", list}, {"chromatic", to_json(x)}});
    return 0;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized chromatic functions of edge-coloured digraphs", "chromalg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  ExpandCmd expand_cmd;
  auto* expand = app.add_subcommand("expand", "QSym or NCQSym expansion of a digraph");
  expand_cmd.input.attach(expand, false);
  expand->add_flag("--nc", expand_cmd.nc, "noncommutative expansion");
  expand->add_option("--t", expand_cmd.t, "1 (default), an integer, or 'keep'");
  expand->add_option("--basis", expand_cmd.basis, "M, F, Fbar or sym:<m|maug|e|eaug|h|p|s>");
  expand->add_option("--r", expand_cmd.r, "regroup into NCQSym^r coordinates");
  expand->add_option("--threads", expand_cmd.threads)->check(CLI::Range(1, 256));

  PolyCmd poly_cmd;
  auto* poly = app.add_subcommand("poly", "chromatic polynomial");
  poly_cmd.input.attach(poly, false);
  poly->add_option("--eval", poly_cmd.eval, "print the value at p");
  poly->add_option("--threads", poly_cmd.threads)->check(CLI::Range(1, 256));

  CombineCmd combine_cmd;
  auto* combine = app.add_subcommand("combine", "evaluate builder expressions and sums");
  combine_cmd.input.attach(combine, true);
  combine->add_option("--sum", combine_cmd.kind, "U, D, S or W for several inputs");

  CoproductCmd coproduct_cmd;
  auto* coproduct = app.add_subcommand("coproduct", "coproduct of a digraph expansion or expression");
  coproduct_cmd.input.attach(coproduct, false);
  coproduct->add_option("--expr", coproduct_cmd.expr, "QSym/NCQSym expression JSON instead of a digraph");
  coproduct->add_flag("--nc", coproduct_cmd.nc);
  coproduct->add_option("--t", coproduct_cmd.t, "1 (default), an integer, or 'keep'");
  coproduct->add_option("--r", coproduct_cmd.r, "regroup into NCQSym^r tensor coordinates");

  ProductCmd product_cmd;
  auto* product = app.add_subcommand("product", "product of two digraph expansions");
  product_cmd.input.attach(product, true);
  product->add_flag("--nc", product_cmd.nc);
  product->add_option("--t", product_cmd.t, "1 (default), an integer, or 'keep'");

  VerifyCmd verify_cmd;
  auto* verify = app.add_subcommand("verify", "run a property suite or replay a counterexample");
  verify->add_option("--suite", verify_cmd.opt.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", verify_cmd.opt.n)->check(CLI::Range(1, 7));
  verify->add_option("--seed", verify_cmd.opt.seed);
  verify->add_option("--trials", verify_cmd.opt.trials)->check(CLI::Range(0, 1000000));
  verify->add_option("--r", verify_cmd.opt.r)->check(CLI::Range(1, 7));
  verify->add_option("--threads", verify_cmd.opt.threads)->check(CLI::Range(1, 256));
  verify->add_option("--replay", verify_cmd.replay_arg, "counterexample JSON (inline or file path)");

  BasesCmd bases_cmd;
  auto* bases = app.add_subcommand("bases", "list basis elements in M coordinates");
  bases->add_option("--space", bases_cmd.space, "qsym, ncqsym, qsym-r or ncqsym-r");
  bases->add_option("--n", bases_cmd.n);
  bases->add_option("--r", bases_cmd.r);
  bases->add_option("--kind", bases_cmd.kind);

  MrCmd mr_cmd;
  auto* mr = app.add_subcommand("mr", "image of a permutation's fundamental element");
  mr->add_option("--perm", mr_cmd.perm, "one-line notation, e.g. 2143")->required();

  BalancedCmd balanced_cmd;
  auto* balanced = app.add_subcommand("balanced", "k-balanced orientations and their chromatic function");
  balanced->add_option("--graph", balanced_cmd.graph, "simple graph JSON {\"n\",\"edges\":[[u,v],...]}");
  balanced->add_option("--dsl", balanced_cmd.dsl, "underlying graph of a builder expression");
  balanced->add_option("--k", balanced_cmd.k);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Printer p{pretty, out};
  try {
    if (*expand) return expand_cmd.run(p);
    if (*poly) return poly_cmd.run(p);
    if (*combine) return combine_cmd.run(p);
    if (*coproduct) return coproduct_cmd.run(p);
    if (*product) return product_cmd.run(p);
    if (*verify) return verify_cmd.run(p);
    if (*bases) return bases_cmd.run(p);
    if (*mr) return mr_cmd.run(p);
    if (*balanced) return balanced_cmd.run(p);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace chromalg
