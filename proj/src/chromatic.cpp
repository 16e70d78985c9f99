#include "chromalg/chromatic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace chromalg {

namespace {

struct Check {
  int other;
  EdgeConstraint kind;
  bool self_is_source;
};

bool satisfied(EdgeConstraint kind, int from, int to) {
  switch (kind) {
    case EdgeConstraint::kNeq: return from != to;
    case EdgeConstraint::kLt: return from < to;
    case EdgeConstraint::kLeq: return from <= to;
  }
  return false;
}

// Level-weight vector -> counts indexed by ascent number.
using Tally = std::map<std::vector<int>, std::vector<std::int64_t>>;

void tally_into(Tally& tally, const Contraction& c, int k,
                const std::vector<int>& level, int asc) {
  std::vector<int> alpha(k, 0);
  for (std::size_t i = 0; i < level.size(); ++i) alpha[level[i]] += c.weights[i];
  auto& slot = tally[alpha];
  if (static_cast<int>(slot.size()) <= asc) slot.resize(asc + 1, 0);
  ++slot[asc];
}

QSymExpr tally_to_expr(const Tally& tally) {
  QSymExpr out;
  for (const auto& [alpha, counts] : tally) {
    std::vector<mpz_class> coeffs;
    for (auto x : counts) coeffs.emplace_back(static_cast<long>(x));
    out.add(Composition(alpha), TPoly(std::move(coeffs)));
  }
  return out;
}

}  // namespace

void for_each_surjection(const EdgeColouredDigraph& g, const Contraction& c,
                         int k, const SurjectionVisitor& visit) {
  (void)g;
  const int s = static_cast<int>(c.weights.size());
  if (!c.feasible || k < 1 || k > s) return;
  std::vector<std::vector<Check>> checks(s);
  for (const auto& e : c.inter_edges) {
    if (e.from > e.to)
      checks[e.from].push_back({e.to, e.kind, true});
    else
      checks[e.to].push_back({e.from, e.kind, false});
  }
  std::vector<int> level(s, -1), used(k, 0);
  int distinct = 0;
  auto rec = [&](auto&& self, int cls, int asc) -> void {
    if (cls == s) {
      if (distinct == k) visit(level, asc);
      return;
    }
    const int remaining = s - cls - 1;
    for (int l = 0; l < k; ++l) {
      int gain = 0;
      bool ok = true;
      for (const auto& ch : checks[cls]) {
        int from = ch.self_is_source ? l : level[ch.other];
        int to = ch.self_is_source ? level[ch.other] : l;
        if (!satisfied(ch.kind, from, to)) {
          ok = false;
          break;
        }
        gain += from < to;
      }
      if (!ok) continue;
      int new_distinct = distinct + (used[l] == 0);
      if (k - new_distinct > remaining) continue;
      level[cls] = l;
      ++used[l];
      std::swap(distinct, new_distinct);
      self(self, cls + 1, asc + gain);
      std::swap(distinct, new_distinct);
      --used[l];
    }
    level[cls] = -1;
  };
  rec(rec, 0, 0);
}

QSymExpr expand(const EdgeColouredDigraph& g, const ExpandOptions& opt) {
  if (g.n() == 0) return one();
  const Contraction c = contract(g);
  if (!c.feasible) return {};
  const int s = static_cast<int>(c.weights.size());
  const int threads = std::clamp(opt.threads, 1, s);
  std::vector<Tally> tallies(s + 1);
  auto run = [&](int k) {
    Tally& t = tallies[k];
    for_each_surjection(g, c, k, [&](const std::vector<int>& level, int asc) {
      tally_into(t, c, k, level, asc);
    });
  };
  if (threads == 1) {
    for (int k = 1; k <= s; ++k) run(k);
  } else {
    std::atomic<int> next{s};  // largest k first: it dominates the work
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (int k; (k = next.fetch_sub(1)) >= 1;) run(k);
      });
    for (auto& th : pool) th.join();
  }
  QSymExpr out;
  for (int k = 1; k <= s; ++k) out += tally_to_expr(tallies[k]);
  return out;
}

std::pair<EdgeColouredDigraph, EdgeColouredDigraph> split_dashed(
    const EdgeColouredDigraph& g, const Edge& e) {
  if (e.kind != EdgeConstraint::kNeq) throw InvalidArgument("split_dashed needs an NEQ edge");
  std::vector<Edge> rest;
  bool found = false;
  for (const auto& f : g.edges()) {
    if (f == e) {
      found = true;
      continue;
    }
    rest.push_back(f);
  }
  if (!found) throw InvalidArgument("split_dashed: edge not in digraph");
  for (const auto& f : rest)
    if (f.from == e.to && f.to == e.from)
      throw InvalidArgument("split_dashed: reverse pair already has an edge");
  auto lt = rest, gt = rest;
  lt.push_back({e.from, e.to, EdgeConstraint::kLt});
  gt.push_back({e.to, e.from, EdgeConstraint::kLt});
  return {EdgeColouredDigraph(g.n(), std::move(lt)),
          EdgeColouredDigraph(g.n(), std::move(gt))};
}

namespace {

QSymTensor digraph_coproduct(const EdgeColouredDigraph& g, bool keep_t) {
  QSymTensor out;
  const std::uint32_t all = g.n() == 0 ? 0u : (1u << g.n()) - 1u;
  for (std::uint32_t s : closed_subsets(g)) {
    auto low = expand(induced(g, mask_vertices(all & ~s)));
    auto high = expand(induced(g, mask_vertices(s)));
    int crossing = 0;
    for (const auto& e : g.edges())
      crossing += !(s >> e.from & 1u) && (s >> e.to & 1u);
    if (keep_t) {
      out += tensor(low, high) * TPoly::monomial(crossing);
    } else {
      out += tensor(specialize_t(low), specialize_t(high));
    }
  }
  return out;
}

}  // namespace

QSymTensor coproduct_digraph(const EdgeColouredDigraph& g) {
  return digraph_coproduct(g, false);
}

QSymTensor coproduct_digraph_t(const EdgeColouredDigraph& g) {
  return digraph_coproduct(g, true);
}

std::optional<int> chromatic_number(const EdgeColouredDigraph& g) {
  if (g.n() == 0) return 0;
  const Contraction c = contract(g);
  if (!c.feasible) return std::nullopt;
  const int s = static_cast<int>(c.weights.size());
  for (int k = 1; k <= s; ++k) {
    bool any = false;
    for_each_surjection(g, c, k, [&](const std::vector<int>&, int) { any = true; });
    if (any) return k;
  }
  return std::nullopt;
}

QSymExpr stanley(const SimpleGraph& h) {
  return specialize_t(expand(from_graph(h, Orient::kPlain)));
}

QSymExpr shareshian_wachs(const SimpleGraph& h) {
  return expand(from_graph(h, Orient::kByLabel));
}

QSymExpr ellzey(const EdgeColouredDigraph& d) { return expand(from_digraph_dashed(d)); }

QSymExpr crew_spirkl(const SimpleGraph& h, const std::vector<int>& wt) {
  return specialize_t(expand(from_weighted(h, wt)));
}

QSymExpr p_partition_gf(const std::vector<std::pair<int, int>>& relations,
                        const std::vector<int>& labels) {
  return specialize_t(expand(from_poset(relations, labels).graph()));
}

QSymExpr dual_immaculate(const Composition& alpha) {
  return specialize_t(expand(comp_grid(alpha, false)));
}

QSymExpr row_strict_dual_immaculate(const Composition& alpha) {
  return specialize_t(expand(comp_grid(alpha, true)));
}

QSymExpr humpert(const SimpleGraph& h, int k) {
  QSymExpr out;
  for (const auto& o : orientations(h))
    if (is_k_balanced(o, k)) out += expand(o);
  return specialize_t(out);
}

QSymExpr humpert_direct(const SimpleGraph& h, int k) {
  const int n = h.n();
  if (n == 0) return one();
  QSymExpr out;
  std::vector<int> col(n);
  for (int m = 1; m <= n; ++m) {
    // Every function V -> [m]; keep the surjective, proper, k-balanced ones.
    std::fill(col.begin(), col.end(), 0);
    while (true) {
      std::vector<int> count(m, 0);
      for (int x : col) ++count[x];
      bool surjective = std::find(count.begin(), count.end(), 0) == count.end();
      bool proper = true;
      for (auto [a, b] : h.edges()) proper = proper && col[a] != col[b];
      if (surjective && proper) {
        std::vector<Edge> edges;
        for (auto [a, b] : h.edges())
          edges.push_back(col[a] < col[b] ? Edge{a, b, EdgeConstraint::kLt}
                                          : Edge{b, a, EdgeConstraint::kLt});
        if (is_k_balanced(EdgeColouredDigraph(n, std::move(edges)), k))
          out.add(Composition(count), TPoly(1));
      }
      int i = 0;
      while (i < n && ++col[i] == m) col[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

}  // namespace chromalg
