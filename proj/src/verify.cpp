#include "chromalg/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "chromalg/chromatic.hpp"
#include "chromalg/linalg.hpp"
#include "chromalg/ncqsym.hpp"
#include "chromalg/oracle.hpp"

namespace chromalg {

namespace {

using CheckFn = std::function<CheckResult(const Json&)>;

CheckResult pass() { return {}; }
CheckResult fail(std::string why) { return {false, std::move(why)}; }

template <class A, class B>
CheckResult expect_equal(const A& lhs, const B& rhs, const std::string& what) {
  if (lhs == rhs) return pass();
  return fail(what + ": " + to_string(lhs) + " != " + to_string(rhs));
}

// First failing result wins.
CheckResult all_of(std::initializer_list<std::function<CheckResult()>> parts) {
  for (const auto& p : parts) {
    auto r = p();
    if (!r.ok) return r;
  }
  return pass();
}

Partition shape_of(const SetPartition& pi) { return pi.shape(); }

Composition shape_of(const SetComposition& phi) {
  std::vector<int> parts;
  for (const auto& b : phi.blocks()) parts.push_back(static_cast<int>(b.size()));
  return Composition(parts);
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

TPoly as_tpoly(long long v) { return TPoly(mpz_class(std::to_string(v))); }

bool refines(const SetPartition& fine, const SetPartition& coarse) {
  for (const auto& b : fine.blocks()) {
    bool inside = false;
    for (const auto& c : coarse.blocks()) inside = inside || std::includes(c.begin(), c.end(), b.begin(), b.end());
    if (!inside) return false;
  }
  return true;
}

NCQSymExpr m_sum(const std::vector<SetPartition>& parts) {
  NCQSymExpr out;
  for (const auto& p : parts) out += ncsym_m(p);
  return out;
}

template <class Expr>
int rank_at_one(const std::vector<Expr>& fs) {
  using Key = typename Expr::map_type::key_type;
  std::set<Key> keys;
  for (const auto& f : fs)
    for (const auto& [k, c] : f) keys.insert(k);
  RationalMatrix m;
  for (const auto& f : fs) {
    std::vector<mpq_class> row;
    for (const auto& k : keys) row.emplace_back(f.coeff(k).at_one());
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

SimpleGraph simple_graph_from_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) edges.push_back({i, j});
  return SimpleGraph(n, edges);
}

std::vector<int> first_vertices(int n, int k) {
  std::vector<int> v;
  for (int i = 0; i < std::min(n, k); ++i) v.push_back(i);
  return v;
}

// ---- checks ------------------------------------------------------------------------

CheckResult check_oracle_expand(const Json& in) {
  auto g = digraph_from_json(in.at("graph")).graph();
  auto f = expand(g);
  for (int k = 1; k <= std::max(1, g.n()); ++k) {
    auto c = oracle::assert_equal(oracle::realize(f, k), oracle::direct_expand(g, k));
    if (!c.equal) return fail("k=" + std::to_string(k) + ": " + c.first_difference);
  }
  return pass();
}

// Regression against a frozen expansion; with t kept.
CheckResult check_expand_matches(const Json& in) {
  auto g = digraph_from_json(in.at("graph"));
  if (in.value("nc", false)) return expect_equal(expand_nc(g), ncqsym_from_json(in.at("expected")), "Y(G)");
  return expect_equal(expand(g.graph()), qsym_from_json(in.at("expected")), "X(G)");
}

CheckResult check_oracle_expand_nc(const Json& in) {
  auto g = digraph_from_json(in.at("graph"));
  int k = std::max(1, g.n());
  auto c = oracle::assert_equal(oracle::realize_nc(expand_nc(g), k), oracle::direct_expand_nc(g, k));
  if (!c.equal) return fail(c.first_difference);
  return pass();
}

CheckResult check_hopf_product(const Json& in) {
  auto a = digraph_from_json(in.at("left"));
  auto b = digraph_from_json(in.at("right"));
  auto u = combine_labelled(SumKind::kDisjoint, a, b, true);
  return all_of({
      [&] { return expect_equal(expand(u.graph()), multiply(expand(a.graph()), expand(b.graph())), "X(G+H)"); },
      [&] { return expect_equal(expand_nc(u), multiply_nc(expand_nc(a), expand_nc(b)), "Y(G+H)"); },
  });
}

CheckResult check_hopf_coproduct(const Json& in) {
  auto g = digraph_from_json(in.at("graph"));
  auto x = expand(g.graph());
  return all_of({
      [&] { return expect_equal(coproduct_digraph(g.graph()), specialize_t(coproduct(x)), "closed-subset sum"); },
      [&] { return expect_equal(coproduct_digraph_t(g.graph()), coproduct(x), "t-graded closed-subset sum"); },
      [&] {
        return expect_equal(coproduct_nc_digraph(g), specialize_t(coproduct_nc(expand_nc(g))), "labelled sum");
      },
  });
}

CheckResult check_hopf_coassociativity(const Json& in) {
  auto g = digraph_from_json(in.at("graph"));
  auto x = expand(g.graph());
  auto y = expand_nc(g);
  if (!(coproduct_left(coproduct(x)) == coproduct_right(coproduct(x)))) return fail("QSym coassociativity");
  if (!(coproduct_nc_left(coproduct_nc(y)) == coproduct_nc_right(coproduct_nc(y))))
    return fail("NCQSym coassociativity");
  return pass();
}

CheckResult check_hopf_bialgebra(const Json& in) {
  auto a = digraph_from_json(in.at("left"));
  auto b = digraph_from_json(in.at("right"));
  auto f = expand(a.graph()), g = expand(b.graph());
  auto fn = expand_nc(a), gn = expand_nc(b);
  return all_of({
      [&] { return expect_equal(coproduct(multiply(f, g)), multiply(coproduct(f), coproduct(g)), "QSym"); },
      [&] {
        return expect_equal(coproduct_nc(multiply_nc(fn, gn)), multiply_nc(coproduct_nc(fn), coproduct_nc(gn)),
                            "NCQSym");
      },
  });
}

CheckResult check_sym_row(const Json& in) {
  auto l = partition_from_json(in.at("lambda"));
  const int n = l.size();
  static const std::vector<std::pair<SymKind, const char*>> kinds{
      {SymKind::kM, "m"}, {SymKind::kMAug, "maug"}, {SymKind::kE, "e"}, {SymKind::kEAug, "eaug"},
      {SymKind::kH, "h"}, {SymKind::kP, "p"},       {SymKind::kS, "s"}};
  for (const auto& [k, name] : kinds) {
    auto r = expect_equal(basis_sym(k, l), specialize_t(expand(sym_digraph(k, l))), std::string(name) + " row");
    if (!r.ok) return r;
  }
  auto ssyt = oracle::tableau_poly(l.parts(), n, oracle::TableauRule::kSemistandard);
  auto c = oracle::assert_equal(oracle::realize(basis_sym(SymKind::kS, l), n), ssyt);
  if (!c.equal) return fail("s vs SSYT: " + c.first_difference);
  return all_of({
      [&] {
        return expect_equal(basis_sym(SymKind::kMAug, l),
                            basis_sym(SymKind::kM, l) * as_tpoly(multiplicities_factorial(l)), "augmented m");
      },
      [&] {
        return expect_equal(basis_sym(SymKind::kEAug, l), basis_sym(SymKind::kE, l) * as_tpoly(parts_factorial(l)),
                            "augmented e");
      },
  });
}

CheckResult check_qsym_row(const Json& in) {
  auto a = composition_from_json(in.at("alpha"));
  const int n = a.size();
  std::vector<EdgeColouredDigraph> c, q;
  for (int p : a.parts()) {
    c.push_back(atom(AtomKind::kC, p));
    q.push_back(atom(AtomKind::kQ, p));
  }
  auto r = all_of({
      [&] { return expect_equal(basis_M(a), specialize_t(expand(chain(SumKind::kSolid, c))), "M row"); },
      [&] { return expect_equal(basis_F(a), specialize_t(expand(chain(SumKind::kSolid, q))), "F row"); },
      [&] { return expect_equal(basis_Fbar(a), specialize_t(expand(chain(SumKind::kDouble, c))), "Fbar row"); },
  });
  if (!r.ok) return r;
  auto di = oracle::tableau_poly(a.parts(), n, oracle::TableauRule::kImmaculate);
  auto c1 = oracle::assert_equal(oracle::realize(dual_immaculate(a), n), di);
  if (!c1.equal) return fail("dual immaculate vs tableaux: " + c1.first_difference);
  auto rs = oracle::tableau_poly(a.parts(), n, oracle::TableauRule::kRowStrictImmaculate);
  auto c2 = oracle::assert_equal(oracle::realize(row_strict_dual_immaculate(a), n), rs);
  if (!c2.equal) return fail("row-strict dual immaculate vs tableaux: " + c2.first_difference);
  return pass();
}

CheckResult check_ncqsym_row(const Json& in) {
  auto phi = set_composition_from_json(in.at("phi"));
  const int n = phi.size();
  NCQSymExpr reform_sum, corrupt_sum;
  for (const auto& psi : all_set_compositions(n)) {
    if (reforms(psi, phi)) reform_sum.add(psi, 1);
    if (corrupts(psi, phi)) corrupt_sum.add(psi, 1);
  }
  return all_of({
      [&] { return expect_equal(basis_nc(NCBasis::kM, phi), specialize_t(expand_nc(nc_digraph(NCBasis::kM, phi))), "M row"); },
      [&] { return expect_equal(basis_nc(NCBasis::kF, phi), specialize_t(expand_nc(nc_digraph(NCBasis::kF, phi))), "F row"); },
      [&] {
        return expect_equal(basis_nc(NCBasis::kFbar, phi), specialize_t(expand_nc(nc_digraph(NCBasis::kFbar, phi))),
                            "Fbar row");
      },
      [&] { return expect_equal(basis_nc(NCBasis::kF, phi), reform_sum, "F vs reforming sum"); },
      [&] { return expect_equal(basis_nc(NCBasis::kFbar, phi), corrupt_sum, "Fbar vs corrupting sum"); },
      [&] { return expect_equal(rho(basis_nc(NCBasis::kFbar, phi)), basis_Fbar(shape_of(phi)), "rho(Fbar)"); },
  });
}

CheckResult check_ncsym_row(const Json& in) {
  auto pi = set_partition_from_json(in.at("pi"));
  const int n = pi.size();
  const Partition l = shape_of(pi);
  std::vector<SetPartition> coarser, transversal;
  for (const auto& omega : all_set_partitions(n)) {
    if (refines(pi, omega)) coarser.push_back(omega);
    if (partition_meet(omega, pi).size() == static_cast<int>(partition_meet(omega, pi).blocks().size()))
      transversal.push_back(omega);
  }
  auto m = basis_ncsym(NCSymKind::kM, pi);
  auto p = basis_ncsym(NCSymKind::kP, pi);
  auto e = basis_ncsym(NCSymKind::kE, pi);
  return all_of({
      [&] { return expect_equal(m, ncsym_m(pi), "m row"); },
      [&] { return expect_equal(p, m_sum(coarser), "p row vs coarser m sum"); },
      [&] { return expect_equal(e, m_sum(transversal), "e row vs transversal m sum"); },
      [&] { return expect_equal(rho(m), basis_sym(SymKind::kMAug, l), "rho(m)"); },
      [&] { return expect_equal(rho(p), basis_sym(SymKind::kP, l), "rho(p)"); },
      [&] { return expect_equal(rho(e), basis_sym(SymKind::kEAug, l), "rho(e)"); },
      [&] {
        return is_ncsym(m) && is_ncsym(p) && is_ncsym(e) ? pass() : fail("row not in NCSym");
      },
  });
}

CheckResult check_ncsym_symmetrized(const Json& in) {
  auto pi = set_partition_from_json(in.at("pi"));
  const int n = pi.size();
  const Partition l = shape_of(pi);
  auto h = basis_ncsym(NCSymKind::kH, pi);
  auto s = basis_ncsym(NCSymKind::kS, pi);
  // Canonical partition of the same shape: consecutive runs.
  std::vector<Block> runs;
  int next = 1;
  for (int part : l.parts()) {
    Block b;
    for (int i = 0; i < part; ++i) b.push_back(next++);
    runs.push_back(b);
  }
  return all_of({
      [&] { return expect_equal(basis_ncsym(NCSymKind::kE, pi), ncsym_e_from_paths(pi), "e: K blocks vs symmetrized P"); },
      [&] { return expect_equal(h, ncsym_h_from_meet(pi), "h: symmetrized Q vs meet formula"); },
      [&] { return expect_equal(rho(h), basis_sym(SymKind::kH, l) * as_tpoly(parts_factorial(l)), "rho(h)"); },
      [&] { return expect_equal(rho(s), basis_sym(SymKind::kS, l) * TPoly(factorial(n)), "rho(S)"); },
      [&] { return expect_equal(s, basis_ncsym(NCSymKind::kS, SetPartition(runs)), "S depends on shape only"); },
      [&] { return is_ncsym(h) && is_ncsym(s) ? pass() : fail("symmetrized row not in NCSym"); },
  });
}

CheckResult check_rosas_sagan_span(const Json& in) {
  const int n = in.at("n").get<int>();
  std::vector<NCQSymExpr> s;
  for (const auto& pi : all_set_partitions(n)) s.push_back(basis_ncsym(NCSymKind::kS, pi));
  int rk = rank_at_one(s);
  int want = static_cast<int>(all_partitions(n).size());
  if (rk != want) return fail("rank " + std::to_string(rk) + ", expected " + std::to_string(want));
  return pass();
}

RKind rkind_from(const std::string& s) {
  if (s == "M") return RKind::kM;
  if (s == "S") return RKind::kS;
  if (s == "Fbar") return RKind::kFbar;
  if (s == "Sbar") return RKind::kSbar;
  throw InvalidArgument("unknown r-basis kind '" + s + "'");
}

CheckResult check_qsym_r_basis(const Json& in) {
  const int n = in.at("n").get<int>();
  const RLevel r = rlevel_from_json(in.at("r"));
  const RKind kind = rkind_from(in.at("kind").get<std::string>());
  auto xs = all_r_compositions(n, r);
  std::vector<QSymExpr> fs, both;
  for (const auto& x : xs) {
    auto f = basis_r(kind, x);
    if (!in_qsym_r(f, r)) return fail("element outside QSym^r: " + to_string(f));
    for (int rr = 1; !r.is_infinite() && rr < r.value(); ++rr)
      if (!in_qsym_r(f, RLevel(rr))) return fail("chain property fails at r=" + std::to_string(rr));
    fs.push_back(f);
    both.push_back(f);
    both.push_back(basis_r(RKind::kM, x));
  }
  const int count = static_cast<int>(xs.size());
  int rk = rank_at_one(fs);
  if (rk != count) return fail("rank " + std::to_string(rk) + " of " + std::to_string(count) + " elements");
  if (rank_at_one(both) != count) return fail("span differs from the M_(beta,mu) span");
  return pass();
}

RSetComposition rsc(const Json& j) { return r_set_composition_from_json(j); }

CheckResult check_ncqsym_r_product(const Json& in) {
  auto x = rsc(in.at("left"));
  auto y = rsc(in.at("right"));
  for (auto kind : {NCRKind::kM, NCRKind::kFbar}) {
    auto prod = multiply_nc(basis_ncr(kind, x), basis_ncr(kind, y));
    try {
      auto coords = r_regroup(prod, x.r());
      if (!(embed(coords) == prod)) return fail("regrouped product does not embed back");
    } catch (const RegroupFailure& e) {
      return fail(std::string("product: ") + e.what());
    }
  }
  return pass();
}

CheckResult check_ncqsym_r_coproduct(const Json& in) {
  auto x = rsc(in.at("x"));
  for (auto kind : {NCRKind::kM, NCRKind::kFbar}) {
    try {
      r_regroup(coproduct_nc(basis_ncr(kind, x)), x.r());
    } catch (const RegroupFailure& e) {
      return fail(std::string("coproduct: ") + e.what());
    }
  }
  return pass();
}

CheckResult check_ncqsym_r_basis(const Json& in) {
  const int n = in.at("n").get<int>();
  const RLevel r = rlevel_from_json(in.at("r"));
  auto xs = all_r_set_compositions(n, r);
  for (auto kind : {NCRKind::kM, NCRKind::kFbar}) {
    std::vector<RCoords> fs;
    for (const auto& x : xs) {
      try {
        fs.push_back(r_regroup(basis_ncr(kind, x), r));
      } catch (const RegroupFailure& e) {
        return fail(e.what());
      }
    }
    int rk = rank_at_one(fs);
    if (rk != static_cast<int>(xs.size()))
      return fail("rank " + std::to_string(rk) + " of " + std::to_string(xs.size()));
  }
  return pass();
}

CheckResult check_chromatic_polynomial(const Json& in) {
  auto g = digraph_from_json(in.at("graph")).graph();
  auto f = specialize_t(expand(g));
  auto poly = chromatic_polynomial(f);
  for (long p = 0; p <= g.n() + 3; ++p) {
    auto v = poly.eval(p);
    if (v.get_den() != 1) return fail("non-integer value at p=" + std::to_string(p));
    if (v != mpq_class(evaluate_ones(f, p))) return fail("evaluate_ones disagrees at p=" + std::to_string(p));
  }
  for (int p = 1; p <= 5; ++p) {
    mpz_class count = 0;
    for (const auto& [e, c] : oracle::direct_expand(g, p).terms) count += c.at_one();
    if (poly.eval(p) != mpq_class(count))
      return fail("p=" + std::to_string(p) + ": polynomial " + poly.eval(p).get_str() + ", direct " + count.get_str());
  }
  return pass();
}

CheckResult check_polynomial_families(const Json& in) {
  const int n = in.at("n").get<int>();
  auto kn = chromatic_polynomial(expand(atom(AtomKind::kK, n)));
  std::vector<std::pair<int, int>> pe;
  for (int i = 0; i + 1 < n; ++i) pe.push_back({i, i + 1});
  auto path = chromatic_polynomial(expand(from_graph(SimpleGraph(n, pe), Orient::kByLabel)));
  for (long p = 0; p <= n + 3; ++p) {
    mpz_class ff = 1, pp = p;
    for (int i = 0; i < n; ++i) ff *= p - i;
    for (int i = 1; i < n; ++i) pp *= p - 1;
    if (kn.eval(p) != mpq_class(ff)) return fail("dashed K_n at p=" + std::to_string(p));
    if (path.eval(p) != mpq_class(pp)) return fail("dashed path at p=" + std::to_string(p));
  }
  return pass();
}

CheckResult check_ellzey(const Json& in) {
  auto d = digraph_from_json(in.at("graph")).graph();
  return expect_equal(specialize_t(ellzey(d)), stanley(underlying(d)), "ellzey at t=1");
}

CheckResult check_humpert(const Json& in) {
  auto h = simple_graph_from_json(in.at("graph"));
  const int k = in.at("k").get<int>();
  if (k == 1) {
    auto r = expect_equal(humpert(h, 1), stanley(h), "humpert k=1");
    if (!r.ok) return r;
  }
  return expect_equal(humpert(h, k), humpert_direct(h, k), "humpert vs direct");
}

CheckResult check_mr_inject(const Json& in) {
  std::string why;
  if (!mr_inject_check(permutation_from_json(in.at("sigma")), permutation_from_json(in.at("tau")), &why))
    return fail(why);
  return pass();
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r{
      {"oracle-expand", check_oracle_expand},
      {"oracle-expand-nc", check_oracle_expand_nc},
      {"expand-matches", check_expand_matches},
      {"hopf-product", check_hopf_product},
      {"hopf-coproduct", check_hopf_coproduct},
      {"hopf-coassociativity", check_hopf_coassociativity},
      {"hopf-bialgebra", check_hopf_bialgebra},
      {"table-sym", check_sym_row},
      {"table-qsym", check_qsym_row},
      {"table-ncqsym", check_ncqsym_row},
      {"table-ncsym", check_ncsym_row},
      {"table-ncsym-symmetrized", check_ncsym_symmetrized},
      {"rosas-sagan-span", check_rosas_sagan_span},
      {"qsym-r-basis", check_qsym_r_basis},
      {"ncqsym-r-product", check_ncqsym_r_product},
      {"ncqsym-r-coproduct", check_ncqsym_r_coproduct},
      {"ncqsym-r-basis", check_ncqsym_r_basis},
      {"chromatic-polynomial", check_chromatic_polynomial},
      {"polynomial-families", check_polynomial_families},
      {"ellzey", check_ellzey},
      {"humpert", check_humpert},
      {"mr-inject", check_mr_inject},
  };
  return r;
}

// ---- suites -----------------------------------------------------------------------

class Runner {
 public:
  Runner(const VerifyOptions& opt) : opt_(opt) { report_.suite = opt.suite; }

  void run(const std::string& check, Json input) {
    ++report_.checks;
    CheckResult r;
    try {
      r = run_check(check, input);
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    if (r.ok) return;
    ++report_.failures;
    if (static_cast<int>(report_.counterexamples.size()) < opt_.max_counterexamples)
      report_.counterexamples.push_back(
          Json{{"suite", opt_.suite}, {"check", check}, {"input", std::move(input)}, {"detail", r.detail}});
  }

  VerifyReport take() { return std::move(report_); }

 private:
  const VerifyOptions& opt_;
  VerifyReport report_;
};

int pick(int v, int fallback) { return v < 0 ? fallback : v; }

LabelledDigraph random_labelled(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return LabelledDigraph(random_digraph(n, seed), labels);
}

void suite_oracle(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 5), trials = pick(opt.trials, 200);
  for (int i = 0; i < trials; ++i) {
    auto g = random_labelled(1 + i % n, trial_seed(opt.seed, i));
    run.run("oracle-expand", Json{{"graph", to_json(g.graph())}});
    if (g.n() <= 4) run.run("oracle-expand-nc", Json{{"graph", to_json(g)}});
  }
}

void suite_hopf(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 4), trials = pick(opt.trials, 50);
  for (int i = 0; i < trials; ++i) {
    std::uint64_t s = trial_seed(opt.seed, i);
    auto a = random_labelled(1 + static_cast<int>(s % n), s);
    auto b = random_labelled(1 + static_cast<int>((s >> 8) % n), s + 1);
    run.run("hopf-product", Json{{"left", to_json(a)}, {"right", to_json(b)}});
    run.run("hopf-coproduct", Json{{"graph", to_json(a)}});
    run.run("hopf-coproduct", Json{{"graph", to_json(b)}});
    run.run("hopf-coassociativity", Json{{"graph", to_json(a)}});
    auto a2 = induced(a, first_vertices(a.n(), 2));
    auto b2 = induced(b, first_vertices(b.n(), 2));
    run.run("hopf-bialgebra", Json{{"left", to_json(a2)}, {"right", to_json(b2)}});
  }
}

void suite_tables(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 5);
  const int sym_n = std::min(n, 4);
  for (int m = 1; m <= n; ++m) {
    for (const auto& l : all_partitions(m)) run.run("table-sym", Json{{"lambda", to_json(l)}});
    for (const auto& a : all_compositions(m)) run.run("table-qsym", Json{{"alpha", to_json(a)}});
    for (const auto& phi : all_set_compositions(m)) run.run("table-ncqsym", Json{{"phi", to_json(phi)}});
    for (const auto& pi : all_set_partitions(m)) {
      run.run("table-ncsym", Json{{"pi", to_json(pi)}});
      if (m <= sym_n) run.run("table-ncsym-symmetrized", Json{{"pi", to_json(pi)}});
    }
    if (m <= sym_n) run.run("rosas-sagan-span", Json{{"n", m}});
  }
}

void suite_r_closure(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 4);
  const RLevel r(opt.r);
  for (int m = 1; m <= std::max(n, 5); ++m)
    for (const char* kind : {"M", "S", "Fbar", "Sbar"})
      run.run("qsym-r-basis", Json{{"n", m}, {"r", opt.r}, {"kind", kind}});
  std::vector<std::vector<RSetComposition>> by_size(n + 1);
  for (int m = 0; m <= n; ++m) by_size[m] = all_r_set_compositions(m, r);
  for (int a = 1; a <= n; ++a) {
    for (const auto& x : by_size[a]) run.run("ncqsym-r-coproduct", Json{{"x", to_json(x)}});
    for (int b = 1; a + b <= n; ++b)
      for (const auto& x : by_size[a])
        for (const auto& y : by_size[b])
          run.run("ncqsym-r-product", Json{{"left", to_json(x)}, {"right", to_json(y)}});
  }
  for (int m = 1; m <= n; ++m) run.run("ncqsym-r-basis", Json{{"n", m}, {"r", opt.r}});
}

void suite_polynomial(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 4), trials = pick(opt.trials, 100);
  for (int i = 0; i < trials; ++i) {
    auto g = random_digraph(1 + i % n, trial_seed(opt.seed, i));
    run.run("chromatic-polynomial", Json{{"graph", to_json(g)}});
  }
  for (int m = 1; m <= n + 2; ++m) run.run("polynomial-families", Json{{"n", m}});
}

void suite_specializations(const VerifyOptions& opt, Runner& run) {
  const int n = pick(opt.n, 4), trials = pick(opt.trials, 20);
  for (int i = 0; i < 50; ++i)
    run.run("ellzey", Json{{"graph", to_json(random_digraph(1 + i % n, trial_seed(opt.seed, i)))}});
  for (int m = 1; m <= n; ++m)
    for (std::uint32_t mask = 0; mask < (1u << (m * (m - 1) / 2)); ++mask)
      for (int k = 1; k <= 2; ++k)
        run.run("humpert", Json{{"graph", to_json(simple_graph_from_mask(m, mask))}, {"k", k}});
  for (const auto& a : all_permutations(2))
    for (const auto& b : all_permutations(2))
      run.run("mr-inject", Json{{"sigma", a.word()}, {"tau", b.word()}});
  auto s3 = all_permutations(3);
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < trials; ++i) {
    const auto& a = s3[rng() % s3.size()];
    const auto& b = s3[rng() % s3.size()];
    run.run("mr-inject", Json{{"sigma", a.word()}, {"tau", b.word()}});
  }
}

const std::map<std::string, std::function<void(const VerifyOptions&, Runner&)>>& suites() {
  static const std::map<std::string, std::function<void(const VerifyOptions&, Runner&)>> s{
      {"oracle", suite_oracle},
      {"hopf", suite_hopf},
      {"tables", suite_tables},
      {"r-closure", suite_r_closure},
      {"polynomial", suite_polynomial},
      {"specializations", suite_specializations},
  };
  return s;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CheckResult run_check(const std::string& check, const Json& input) {
  auto it = registry().find(check);
  if (it == registry().end()) throw InvalidArgument("unknown check '" + check + "'");
  try {
    return it->second(input);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("check input: ") + e.what());
  }
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : suites()) out.push_back(k);
  return out;
}

VerifyReport run_suite(const VerifyOptions& opt) {
  auto it = suites().find(opt.suite);
  if (it == suites().end()) throw InvalidArgument("unknown suite '" + opt.suite + "'");
  if (opt.r < 1) throw InvalidArgument("r must be positive");
  Runner runner(opt);
  it->second(opt, runner);
  return runner.take();
}

VerifyReport replay(const Json& counterexample) {
  if (!counterexample.is_object() || !counterexample.contains("check") || !counterexample.contains("input"))
    throw InvalidArgument("counterexample needs 'check' and 'input'");
  VerifyOptions opt;
  opt.suite = counterexample.value("suite", std::string("replay"));
  Runner runner(opt);
  runner.run(counterexample.at("check").get<std::string>(), counterexample.at("input"));
  return runner.take();
}

Json to_json(const VerifyReport& report) {
  Json j{{"suite", report.suite},
         {"checks", report.checks},
         {"failures", report.failures},
         {"status", report.ok() ? "pass" : "fail"}};
  if (!report.counterexamples.empty()) j["counterexamples"] = report.counterexamples;
  return j;
}

}  // namespace chromalg
