#include <doctest.h>

#include "chromalg/graph.hpp"

using namespace chromalg;

namespace {

constexpr auto NEQ = EdgeConstraint::kNeq;
constexpr auto LT = EdgeConstraint::kLt;
constexpr auto LEQ = EdgeConstraint::kLeq;

EdgeColouredDigraph triangle() { return EdgeColouredDigraph(3, {{0, 1, NEQ}, {1, 2, LT}, {2, 0, LEQ}}); }

int count_kind(const EdgeColouredDigraph& g, EdgeConstraint k) {
  int c = 0;
  for (const auto& e : g.edges()) c += e.kind == k;
  return c;
}

}  // namespace

TEST_CASE("construction and validation") {
  auto g = triangle();
  CHECK(g.n() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(EdgeColouredDigraph(1, {}).edges().empty());
  CHECK_THROWS_AS(EdgeColouredDigraph(2, {{0, 1, LT}, {0, 1, LEQ}}), InvalidArgument);
  CHECK_THROWS_AS(EdgeColouredDigraph(2, {{0, 0, LT}}), InvalidArgument);
  CHECK_THROWS_AS(EdgeColouredDigraph(2, {{0, 2, LT}}), InvalidArgument);
  // Opposite directions are distinct pairs.
  CHECK(EdgeColouredDigraph(2, {{0, 1, LEQ}, {1, 0, LEQ}}).edges().size() == 2);
}

TEST_CASE("sums") {
  EdgeColouredDigraph path(2, {{0, 1, LT}});
  auto d = combine(SumKind::kDashed, triangle(), path);
  CHECK(d.n() == 5);
  CHECK(count_kind(d, NEQ) == 1 + 6);
  for (const auto& e : d.edges())
    if (e.from < 3 && e.to >= 3) CHECK(e.kind == NEQ);
  CHECK(combine(SumKind::kDisjoint, triangle(), EdgeColouredDigraph()) == triangle());
  auto s = combine(SumKind::kSolid, atom(AtomKind::kC, 1), atom(AtomKind::kC, 1));
  CHECK(s == EdgeColouredDigraph(2, {{0, 1, LT}}));
  CHECK(s == atom(AtomKind::kP, 2));
  auto w = combine(SumKind::kDouble, atom(AtomKind::kC, 1), atom(AtomKind::kC, 2));
  CHECK(count_kind(w, LEQ) == 2 + 2);
}

TEST_CASE("atoms") {
  auto c3 = atom(AtomKind::kC, 3);
  CHECK(c3 == EdgeColouredDigraph(3, {{0, 1, LEQ}, {1, 2, LEQ}, {2, 0, LEQ}}));
  CHECK(atom(AtomKind::kP, 3) == EdgeColouredDigraph(3, {{0, 1, LT}, {1, 2, LT}}));
  CHECK(atom(AtomKind::kQ, 3) == EdgeColouredDigraph(3, {{0, 1, LEQ}, {1, 2, LEQ}}));
  CHECK(atom(AtomKind::kK, 3).edges().size() == 3);
  CHECK(count_kind(atom(AtomKind::kK, 4), NEQ) == 6);
  for (auto k : {AtomKind::kC, AtomKind::kP, AtomKind::kQ, AtomKind::kK}) CHECK(atom(k, 1) == EdgeColouredDigraph(1, {}));
  auto q = atom_labelled(AtomKind::kQ, {7, 2, 4});
  CHECK(q.labels() == std::vector<int>{2, 4, 7});
  CHECK(q.graph() == atom(AtomKind::kQ, 3));
}

TEST_CASE("grids") {
  auto g = grid(Partition{2, 1});
  CHECK(g.n() == 3);
  CHECK(count_kind(g, LT) == 1);
  CHECK(count_kind(g, LEQ) == 1);
  CHECK(grid(Partition{1}) == EdgeColouredDigraph(1, {}));
  auto big = grid(Partition{3, 2});
  CHECK(count_kind(big, LT) == 2);
  CHECK(count_kind(big, LEQ) == 3);
  // Strictness only in the first column.
  auto cg = comp_grid(Composition{2, 2}, false);
  CHECK(count_kind(cg, LT) == 1);
  CHECK(count_kind(cg, LEQ) == 2);
  auto rs = comp_grid(Composition{2, 2}, true);
  CHECK(count_kind(rs, LT) == 2);
  CHECK(count_kind(rs, LEQ) == 1);
}

TEST_CASE("posets") {
  auto up = from_poset({{1, 2}}, {1, 2});
  CHECK(up.graph() == EdgeColouredDigraph(2, {{0, 1, LEQ}}));
  auto down = from_poset({{2, 1}}, {1, 2});
  CHECK(down.graph() == EdgeColouredDigraph(2, {{1, 0, LT}}));
  CHECK(from_poset({}, {1, 2}).graph().edges().empty());
  // Only cover relations become edges.
  auto chain3 = from_poset({{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3});
  CHECK(chain3.graph().edges().size() == 2);
}

TEST_CASE("graph conversions") {
  SimpleGraph e(2, {{0, 1}});
  CHECK(from_graph(e, Orient::kByLabel) == EdgeColouredDigraph(2, {{0, 1, NEQ}}));
  auto w = from_weighted(SimpleGraph(1, {}), {2});
  CHECK(w == atom(AtomKind::kC, 2));
  auto d = from_digraph_dashed(triangle());
  CHECK(count_kind(d, NEQ) == 3);
  auto u = underlying(triangle());
  CHECK(u.edges().size() == 3);
  auto cs = from_weighted(e, {2, 3});
  CHECK(cs.n() == 5);
  CHECK(count_kind(cs, NEQ) == 1);
}

TEST_CASE("contraction classes") {
  // a1..a7 as 0..6
  EdgeColouredDigraph g(7, {{0, 1, LEQ}, {1, 0, LEQ}, {1, 2, NEQ}, {2, 3, LT}, {3, 4, LEQ}, {4, 3, LEQ},
                            {4, 5, LEQ}, {5, 6, LEQ}, {6, 4, LEQ}});
  auto c = contract(g);
  CHECK(c.feasible);
  CHECK(c.classes == SetPartition{{1, 2}, {3}, {4, 5, 6, 7}});
  CHECK(c.weights == std::vector<int>{2, 1, 4});
  CHECK(c.inter_edges.size() == 2);

  EdgeColouredDigraph fig7(3, {{0, 1, LT}, {1, 2, LT}, {2, 0, LEQ}});
  auto c7 = contract(fig7);
  CHECK(c7.feasible);
  CHECK(c7.classes.size() == 3);

  auto all_neq = atom(AtomKind::kK, 4);
  CHECK(contract(all_neq).classes.size() == 4);

  // A strict edge inside a double cycle is infeasible.
  EdgeColouredDigraph bad(3, {{0, 1, LEQ}, {1, 2, LEQ}, {2, 0, LEQ}, {0, 2, LT}});
  CHECK_FALSE(contract(bad).feasible);
  // No double cycle here, so the classes stay apart.
  CHECK(contract(EdgeColouredDigraph(2, {{0, 1, LEQ}, {1, 0, LT}})).feasible);
  EdgeColouredDigraph bad2(3, {{0, 1, LEQ}, {1, 2, LEQ}, {2, 0, LEQ}, {0, 2, NEQ}});
  CHECK_FALSE(contract(bad2).feasible);
}

TEST_CASE("closed subsets") {
  EdgeColouredDigraph g(4, {{0, 1, LEQ}, {1, 3, NEQ}, {0, 2, LT}});
  CHECK(closed_subsets(g).size() == 10);
  CHECK(closed_subsets(EdgeColouredDigraph(4, {})).size() == 16);
  auto p2 = closed_subsets(atom(AtomKind::kP, 2));
  CHECK(p2 == std::vector<std::uint32_t>{0b00, 0b10, 0b11});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto r = random_digraph(5, seed);
    for (auto mask : closed_subsets(r))
      for (const auto& e : r.edges())
        if (e.kind != NEQ && (mask >> e.from & 1u)) CHECK((mask >> e.to & 1u));
  }
}

TEST_CASE("induced subgraphs") {
  auto g = triangle();
  auto h = induced(g, {1, 2});
  CHECK(h == EdgeColouredDigraph(2, {{0, 1, LT}}));
  LabelledDigraph l(g, {5, 9, 7});
  auto li = induced(l, {0, 2});
  CHECK(li.labels() == std::vector<int>{1, 2});
  CHECK(mask_vertices(0b1010) == std::vector<int>{1, 3});
}

TEST_CASE("balanced orientations") {
  SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  auto os = orientations(tri);
  CHECK(os.size() == 8);
  int ok = 0;
  for (const auto& o : os) ok += is_k_balanced(o, 1);
  CHECK(ok == 6);

  SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  int ok4 = 0;
  for (const auto& o : orientations(c4)) ok4 += is_k_balanced(o, 2);
  CHECK(ok4 == 6);

  SimpleGraph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  for (int k = 1; k <= 3; ++k)
    for (const auto& o : orientations(tree)) CHECK(is_k_balanced(o, k));
}

TEST_CASE("labelled relabelling") {
  LabelledDigraph l(triangle(), {3, 1, 2});
  auto r = l.relabelled(Permutation{2, 3, 1});
  CHECK(r.labels() == std::vector<int>{1, 2, 3});
  CHECK(LabelledDigraph(triangle(), {10, 30, 20}).standardized().labels() == std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(LabelledDigraph(triangle(), {1, 1, 2}), InvalidArgument);
}

TEST_CASE("random graphs are seeded") {
  CHECK(random_digraph(5, 7) == random_digraph(5, 7));
  CHECK(random_simple_graph(5, 3).edges() == random_simple_graph(5, 3).edges());
  CHECK(constraint_from_string("lt") == LT);
  CHECK(to_string(LEQ) == "leq");
}
