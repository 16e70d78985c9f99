#include <doctest.h>

#include <algorithm>
#include <set>

#include "chromalg/combinat.hpp"

using namespace chromalg;

namespace {

// Words over [k] of length n, odometer order.
std::vector<std::vector<int>> all_words(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 1);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && ++w[i] > k) w[i--] = 1;
    if (i < 0) break;
  }
  return out;
}

// Set composition read off a word: block j holds positions carrying the j-th
// smallest letter.
SetComposition word_pattern(const std::vector<int>& w) {
  std::set<int> letters(w.begin(), w.end());
  std::vector<Block> blocks;
  for (int l : letters) {
    Block b;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == l) b.push_back(static_cast<int>(i) + 1);
    blocks.push_back(b);
  }
  return SetComposition(blocks);
}

}  // namespace

TEST_CASE("descent sets") {
  CHECK(descent_set(Composition{2, 1, 2}) == std::vector<int>{2, 3});
  CHECK(descent_set(Composition{5}).empty());
  CHECK(descent_set(Composition{1, 1, 1}) == std::vector<int>{1, 2});
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : all_compositions(n))
      CHECK(composition_from_descent_set(descent_set(a), n) == a);
}

TEST_CASE("coarsening and dominance") {
  CHECK(coarsens(Composition{3}, Composition{2, 1}));
  CHECK_FALSE(coarsens(Composition{2, 1}, Composition{1, 2}));
  CHECK(coarsens(Composition{1, 2}, Composition{1, 1, 1}));
  CHECK_THROWS_AS(coarsens(Composition{2}, Composition{1}), InvalidArgument);

  CHECK(dominance_leq(Partition{3, 1, 1, 1}, Partition{3, 2, 1}));
  CHECK(dominance_leq(Partition{4}, Partition{4}));
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
}

TEST_CASE("dominance is a partial order for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    auto ps = all_partitions(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("word standardization") {
  CHECK(standardize_word({3, 5, 4, 4, 2, 3, 1}) == Permutation{3, 7, 5, 6, 2, 4, 1});
  CHECK(standardize_word({1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(standardize_word({2, 2, 2}) == Permutation{1, 2, 3});
}

TEST_CASE("standardization of set objects") {
  CHECK(standardize(SetComposition{{3, 5}, {9}, {6, 7}}) == SetComposition{{1, 2}, {5}, {3, 4}});
  CHECK(standardize(SetPartition{{3, 5}, {6, 7}, {9}}) == SetPartition{{1, 2}, {3, 4}, {5}});
  RSetComposition x(RLevel(2), SetComposition{{3, 6}, {2, 9}}, SetPartition{{4}, {5}, {8}});
  RSetComposition y(RLevel(2), SetComposition{{2, 5}, {1, 7}}, SetPartition{{3}, {4}, {6}});
  CHECK(standardize(x) == y);
  CHECK(to_string(standardize(x)) == "((25|17),3/4/6)");
}

TEST_CASE("standardize is idempotent") {
  for (const auto& phi : all_set_compositions(4)) {
    std::vector<Block> shifted;
    for (auto b : phi.blocks()) {
      for (int& x : b) x = 3 * x + 1;
      shifted.push_back(b);
    }
    SetComposition s = standardize(SetComposition(shifted));
    CHECK(s == phi);
    CHECK(standardize(s) == s);
  }
  for (const auto& pi : all_set_partitions(4)) CHECK(standardize(pi) == pi);
}

TEST_CASE("corrupts and reforms") {
  CHECK(corrupts(SetComposition{{1, 3}, {2}, {4, 5, 6}}, SetComposition{{1, 3}, {2}, {4}, {5, 6}}));
  CHECK(reforms(SetComposition{{1}, {3}, {2}, {4}, {5, 6}}, SetComposition{{1, 3}, {2}, {4}, {5, 6}}));
  CHECK_FALSE(reforms(SetComposition{{3}, {1}, {2}, {4}, {5, 6}}, SetComposition{{1, 3}, {2}, {4}, {5, 6}}));
  for (const auto& phi : all_set_compositions(3)) {
    CHECK(corrupts(phi, phi));
    CHECK(reforms(phi, phi));
  }
  CHECK_THROWS_AS(corrupts(SetComposition{{1}}, SetComposition{{2}}), InvalidArgument);
}

TEST_CASE("reforms implies the reverse corruption") {
  // The converse fails: (3|1|2|4|56) does not reform (13|2|4|56), yet merging
  // its first two blocks gives (13|2|4|56).
  for (int n = 1; n <= 4; ++n) {
    auto all = all_set_compositions(n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (reforms(a, b)) CHECK(corrupts(b, a));
  }
  CHECK(corrupts(SetComposition{{1, 3}, {2}, {4}, {5, 6}}, SetComposition{{3}, {1}, {2}, {4}, {5, 6}}));
}

TEST_CASE("quasi-shuffle of compositions") {
  auto q = quasi_shuffle(Composition{1}, Composition{1});
  CHECK(q.size() == 2);
  CHECK(q[Composition{1, 1}] == 2);
  CHECK(q[Composition{2}] == 1);
  auto e = quasi_shuffle(Composition(), Composition{2, 1});
  CHECK(e.size() == 1);
  CHECK(e[Composition{2, 1}] == 1);
  auto r = quasi_shuffle(Composition{2}, Composition{1});
  CHECK(r.size() == 3);
  CHECK(r[Composition{2, 1}] == 1);
  CHECK(r[Composition{1, 2}] == 1);
  CHECK(r[Composition{3}] == 1);
}

TEST_CASE("quasi-shuffle multiplicity counts") {
  // Delannoy-type count: sum_j C(a+b-j, j, a-j, b-j).
  auto total = [](const std::map<Composition, int>& m) {
    int s = 0;
    for (auto& [k, v] : m) s += v;
    return s;
  };
  CHECK(total(quasi_shuffle(Composition{1, 1}, Composition{1})) == 5);
  CHECK(total(quasi_shuffle(Composition{1, 1}, Composition{1, 1})) == 13);
  CHECK(total(quasi_shuffle(Composition{2, 1, 1}, Composition{3, 1})) == 25);
}

TEST_CASE("shifted quasi-shuffle matches a word-level brute force") {
  // Gamma belongs to the product iff its restriction to [n] is phi and the
  // standardized restriction to n+1..n+m is psi.
  auto brute = [](const SetComposition& phi, const SetComposition& psi) {
    const int n = phi.size(), m = psi.size();
    std::vector<int> low, high;
    for (int i = 1; i <= n; ++i) low.push_back(i);
    for (int i = n + 1; i <= n + m; ++i) high.push_back(i);
    std::vector<SetComposition> out;
    for (const auto& g : all_set_compositions(n + m))
      if (restrict_to(g, low) == phi && standardize(restrict_to(g, high)) == psi) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto s = shifted_quasi_shuffle(SetComposition{{1}}, SetComposition{{1}});
  CHECK(std::set<SetComposition>(s.begin(), s.end()) ==
        std::set<SetComposition>{SetComposition{{1, 2}}, SetComposition{{1}, {2}}, SetComposition{{2}, {1}}});
  CHECK(shifted_quasi_shuffle(SetComposition{{1}}, SetComposition()) ==
        std::vector<SetComposition>{SetComposition{{1}}});
  auto three = shifted_quasi_shuffle(SetComposition{{1}, {2}}, SetComposition{{1}});
  CHECK(three.size() == 5);
  CHECK(three == brute(SetComposition{{1}, {2}}, SetComposition{{1}}));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m + n <= 4; ++m)
      for (const auto& a : all_set_compositions(n))
        for (const auto& b : all_set_compositions(m)) CHECK(shifted_quasi_shuffle(a, b) == brute(a, b));
}

TEST_CASE("shifted quasi-shuffle realizes the word product") {
  // Pattern of a concatenated word uv over [3] lies in the product of the
  // patterns of u and v.
  for (const auto& u : all_words(2, 3))
    for (const auto& v : all_words(1, 3)) {
      std::vector<int> w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto prod = shifted_quasi_shuffle(word_pattern(u), word_pattern(v));
      CHECK(std::find(prod.begin(), prod.end(), word_pattern(w)) != prod.end());
    }
}

TEST_CASE("bar shuffle") {
  auto b = bar_shuffle(SetComposition{{2, 4}}, SetPartition{{1}, {3}});
  CHECK(b.size() == 6);
  std::set<SetComposition> expect;
  std::vector<Block> blocks{{2, 4}, {1}, {3}};
  std::sort(blocks.begin(), blocks.end());
  do {
    expect.insert(SetComposition(blocks));
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  CHECK(std::set<SetComposition>(b.begin(), b.end()) == expect);
  CHECK(bar_shuffle(SetComposition(), SetPartition{{1, 2}}) ==
        std::vector<SetComposition>{SetComposition{{1, 2}}});
  CHECK(bar_shuffle(SetComposition{{1}, {2}}, SetPartition()) ==
        std::vector<SetComposition>{SetComposition{{1}, {2}}});
  CHECK_THROWS_AS(bar_shuffle(SetComposition{{1}}, SetPartition{{1}}), InvalidArgument);
  // phi's order is kept.
  auto c = bar_shuffle(SetComposition{{1}, {2}}, SetPartition{{3}});
  CHECK(c.size() == 3);
  for (const auto& x : c) CHECK(restrict_to(x, {1, 2}) == SetComposition{{1}, {2}});
}

TEST_CASE("restriction") {
  SetComposition phi{{3, 5, 7}, {2, 6}, {1, 4}};
  CHECK(restrict_to(phi, {1, 3, 4}) == SetComposition{{3}, {1, 4}});
  CHECK(restrict_to(phi, phi.ground()) == phi);
  CHECK(restrict_to(phi, {}) == SetComposition());
}

TEST_CASE("r-split") {
  RLevel two(2);
  auto x = r_split(SetComposition{{2, 4}, {1}, {3}}, two);
  CHECK(x.phi() == SetComposition{{2, 4}});
  CHECK(x.pi() == SetPartition{{1}, {3}});
  auto y = r_split(SetComposition{{1}, {2}}, two);
  CHECK(y.phi().empty());
  CHECK(y.pi() == SetPartition{{1}, {2}});
  for (const auto& u : all_set_compositions(4)) {
    auto z = r_split(u, RLevel(1));
    CHECK(z.phi() == u);
    CHECK(z.pi().empty());
  }
  auto inf = r_split(SetComposition{{1, 2, 3}, {4}}, RLevel::infinity());
  CHECK(inf.phi().empty());
  CHECK(inf.pi() == SetPartition{{1, 2, 3}, {4}});
}

TEST_CASE("r-split is the unique bar-shuffle preimage, n <= 5") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      auto all_r = all_r_set_compositions(n, RLevel(r));
      for (const auto& u : all_set_compositions(n)) {
        int owners = 0;
        for (const auto& x : all_r) {
          auto b = bar_shuffle(x.phi(), x.pi());
          if (std::binary_search(b.begin(), b.end(), u)) {
            ++owners;
            CHECK(x == r_split(u, RLevel(r)));
          }
        }
        CHECK(owners == 1);
      }
    }
}

TEST_CASE("set partition meet") {
  CHECK(partition_meet(SetPartition{{1, 3}, {2, 4}}, SetPartition{{1, 2}, {3, 4}}) ==
        SetPartition{{1}, {2}, {3}, {4}});
  Partition l{2, 2, 1};
  CHECK(parts_factorial(l) == 4);
  CHECK(multiplicities_factorial(l) == 2);
  auto refines = [](const SetPartition& a, const SetPartition& b) {
    for (const auto& x : a.blocks()) {
      bool inside = false;
      for (const auto& y : b.blocks())
        inside = inside || std::includes(y.begin(), y.end(), x.begin(), x.end());
      if (!inside) return false;
    }
    return true;
  };
  for (int n = 1; n <= 5; ++n) {
    auto all = all_set_partitions(n);
    for (const auto& p : all) {
      CHECK(partition_meet(p, p) == p);
      for (const auto& q : all) {
        auto m = partition_meet(p, q);
        CHECK(refines(m, p));
        CHECK(refines(m, q));
        if (n <= 4)
          for (const auto& c : all)
            if (refines(c, p) && refines(c, q)) CHECK(refines(c, m));
      }
    }
  }
}

TEST_CASE("descent runs") {
  CHECK(descent_runs(Permutation{8, 3, 6, 7, 9, 1, 5, 2, 4}) ==
        SetComposition{{8}, {3, 6, 7, 9}, {1, 5}, {2, 4}});
  CHECK(descent_runs(Permutation::identity(4)) == SetComposition{{1, 2, 3, 4}});
  CHECK(descent_runs(Permutation{3, 2, 1}) == SetComposition{{3}, {2}, {1}});
}

TEST_CASE("enumeration counts") {
  CHECK(all_compositions(5).size() == 16);
  CHECK(all_partitions(6).size() == 11);
  CHECK(all_set_partitions(5).size() == 52);
  CHECK(all_set_compositions(4).size() == 75);
  CHECK(all_permutations(4).size() == 24);
  // r = 2, n = 3: (3,()), (2,(1)), (12|...) etc.
  CHECK(all_r_compositions(3, RLevel(2)).size() == 3);
  CHECK(all_r_compositions(4, RLevel::infinity()).size() == 5);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Composition({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(SetComposition({{1, 2}, {2}}), InvalidArgument);
  CHECK_THROWS_AS(SetPartition({{1}, {}}), InvalidArgument);
  CHECK_THROWS_AS(RComposition(RLevel(2), Composition{1}, Partition()), InvalidArgument);
  CHECK_THROWS_AS(RComposition(RLevel::infinity(), Composition{5}, Partition()), InvalidArgument);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidArgument);
  CHECK_THROWS_AS(RLevel(0), InvalidArgument);
}

TEST_CASE("printing") {
  CHECK(to_string(Composition{2, 1, 3}) == "(2,1,3)");
  CHECK(to_string(SetComposition{{1, 3}, {2}, {4}}) == "(13|2|4)");
  CHECK(to_string(SetPartition{{2, 4}, {1, 3}}) == "13/24");
  CHECK(to_string(Permutation{3, 1, 2}) == "312");
}
