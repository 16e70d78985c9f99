#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "chromalg/chromatic.hpp"
#include "chromalg/ncqsym.hpp"
#include "chromalg/verify.hpp"

using namespace chromalg;

namespace {

constexpr auto NEQ = EdgeConstraint::kNeq;
constexpr auto LT = EdgeConstraint::kLt;
constexpr auto LEQ = EdgeConstraint::kLeq;

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from_report(const VerifyReport& r) {
  std::ostringstream s;
  s << r.checks << " checks, " << r.failures << " failures";
  if (!r.counterexamples.empty()) s << "; first: " << r.counterexamples[0].dump();
  return {r.ok() && r.checks > 0, s.str()};
}

VerifyReport suite(const std::string& name) {
  VerifyOptions opt;
  opt.suite = name;
  return run_suite(opt);
}

Outcome h_example() {
  auto h = to_m_coordinates(basis_ncsym(NCSymKind::kH, SetPartition{{1, 3}, {2, 4}}));
  NCSymCoords want;
  auto add = [&](std::initializer_list<std::initializer_list<int>> p, long c) { want.add(SetPartition(p), c); };
  add({{1}, {2}, {3}, {4}}, 1);
  add({{1, 2}, {3}, {4}}, 1);
  add({{1, 3}, {2}, {4}}, 2);
  add({{1, 4}, {2}, {3}}, 1);
  add({{1}, {2, 3}, {4}}, 1);
  add({{1}, {2, 4}, {3}}, 2);
  add({{1}, {2}, {3, 4}}, 1);
  add({{1, 2}, {3, 4}}, 1);
  add({{1, 3}, {2, 4}}, 4);
  add({{1, 4}, {2, 3}}, 1);
  add({{1, 2, 3}, {4}}, 2);
  add({{1, 2, 4}, {3}}, 2);
  add({{1, 3, 4}, {2}}, 2);
  add({{1}, {2, 3, 4}}, 2);
  add({{1, 2, 3, 4}}, 4);
  return {h == want && h.size() == 15, to_string(h)};
}

Outcome fundamental_example() {
  auto M = [](std::initializer_list<std::initializer_list<int>> b) { return NCQSymExpr::single(SetComposition(b)); };
  SetComposition x{{1, 3}, {2, 4}};
  auto f = basis_nc(NCBasis::kF, x);
  auto fb = basis_nc(NCBasis::kFbar, x);
  bool ok = f == M({{1, 3}, {2, 4}}) + M({{1}, {3}, {2, 4}}) + M({{1, 3}, {2}, {4}}) + M({{1}, {3}, {2}, {4}}) &&
            fb == M({{1, 3}, {2, 4}}) + M({{1, 2, 3, 4}});
  return {ok, "F = " + to_string(f) + "; Fbar = " + to_string(fb)};
}

Outcome r_coproduct_example() {
  auto R = [](const SetComposition& phi, const SetPartition& pi) { return RSetComposition(RLevel(2), phi, pi); };
  auto x = R(SetComposition{{2, 4}}, SetPartition{{1}, {3}});
  auto e = R(SetComposition(), SetPartition());
  RTensor want;
  auto add = [&](const RSetComposition& a, const RSetComposition& b) { want.add({a, b}, 1); };
  add(e, x);
  add(R({}, SetPartition{{1}}), R(SetComposition{{1, 3}}, SetPartition{{2}}));
  add(R({}, SetPartition{{1}}), R(SetComposition{{2, 3}}, SetPartition{{1}}));
  add(R(SetComposition{{2, 3}}, SetPartition{{1}}), R({}, SetPartition{{1}}));
  add(R(SetComposition{{1, 3}}, SetPartition{{2}}), R({}, SetPartition{{1}}));
  add(R(SetComposition{{1, 2}}, SetPartition()), R({}, SetPartition{{1}, {2}}));
  add(R({}, SetPartition{{1}, {2}}), R(SetComposition{{1, 2}}, SetPartition()));
  add(x, e);
  auto got = r_regroup(coproduct_nc(basis_ncr(NCRKind::kM, x)), RLevel(2));
  return {got == want && want.size() == 8, to_string(got)};
}

Outcome four_vertex_coproduct() {
  // v1 => v2, v2 ~> v4, v1 -> v3
  EdgeColouredDigraph g(4, {{0, 1, LEQ}, {1, 3, NEQ}, {0, 2, LT}});
  auto X = [](int n, std::vector<Edge> edges) { return specialize_t(expand(EdgeColouredDigraph(n, std::move(edges)))); };
  auto G = specialize_t(expand(g));
  QSymTensor want;
  want += tensor(one(), G);
  want += tensor(X(1, {}), X(3, {{0, 1, LEQ}, {0, 2, LT}}));
  want += tensor(X(1, {}), X(3, {{0, 2, NEQ}}));
  want += tensor(X(2, {{0, 1, LT}}), X(2, {{0, 1, NEQ}}));
  want += tensor(X(2, {}), X(2, {}));
  want += tensor(X(2, {{0, 1, LEQ}}), X(2, {}));
  want += tensor(X(3, {{0, 1, LT}}), X(1, {}));
  want += tensor(X(3, {{0, 1, LEQ}, {1, 2, NEQ}}), X(1, {}));
  want += tensor(X(3, {{0, 1, LEQ}, {0, 2, LT}}), X(1, {}));
  want += tensor(G, one());
  auto got = coproduct_digraph(g);
  bool ok = got == want && closed_subsets(g).size() == 10;
  return {ok, std::to_string(closed_subsets(g).size()) + " closed subsets, " + std::to_string(got.size()) +
                  " tensor terms"};
}

struct Criterion {
  int id;
  std::string what;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "h_13/24 in m-coordinates, 15 terms", 1, h_example},
      {2, "F and Fbar of (13|24)", 1, fundamental_example},
      {3, "regrouped coproduct of M((24),1/3) at r=2, 8 terms", 1, r_coproduct_example},
      {4, "coproduct of the four-vertex digraph, 10 terms", 5, four_vertex_coproduct},
      {5, "oracle suite: 200 random digraphs, |V| <= 5, t-graded", 60, [] { return from_report(suite("oracle")); }},
      {6, "Hopf suite: products, coproducts, coassociativity, bialgebra", 120,
       [] { return from_report(suite("hopf")); }},
      {7, "table suite, n <= 5 (symmetrized n <= 4)", 300, [] { return from_report(suite("tables")); }},
      {8, "chromatic polynomial suite", 60, [] { return from_report(suite("polynomial")); }},
      {9, "r-structure: bases by rank, closure, regrouping", 180, [] { return from_report(suite("r-closure")); }},
      {10, "specializations and MR injection", 120, [] { return from_report(suite("specializations")); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && secs < c.limit_s;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what << " [" << secs << "s, limit "
              << c.limit_s << "s] " << o.note << "\n";
  }
  return failed == 0 ? 0 : 1;
}
