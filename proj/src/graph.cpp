#include "chromalg/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace chromalg {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace

EdgeColouredDigraph::EdgeColouredDigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  require(n >= 0, "negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    require(e.from >= 0 && e.from < n && e.to >= 0 && e.to < n,
            "edge endpoint out of range");
    require(e.from != e.to, "loops are not allowed");
    if (i)
      require(edges_[i - 1].from != e.from || edges_[i - 1].to != e.to,
              "two edges on the same ordered pair");
  }
}

LabelledDigraph::LabelledDigraph(EdgeColouredDigraph g, std::vector<int> labels)
    : g_(std::move(g)), labels_(std::move(labels)) {
  require(static_cast<int>(labels_.size()) == g_.n(), "one label per vertex");
  std::set<int> seen;
  for (int l : labels_) {
    require(l >= 1, "labels must be positive");
    require(seen.insert(l).second, "labels must be distinct");
  }
}

LabelledDigraph LabelledDigraph::standard(EdgeColouredDigraph g) {
  std::vector<int> labels(g.n());
  for (int i = 0; i < g.n(); ++i) labels[i] = i + 1;
  return {std::move(g), std::move(labels)};
}

LabelledDigraph LabelledDigraph::standardized() const {
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int l : labels_)
    out.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin() + 1));
  return {g_, std::move(out)};
}

LabelledDigraph LabelledDigraph::relabelled(const Permutation& sigma) const {
  std::vector<int> out;
  for (int l : labels_) {
    require(l <= sigma.size(), "relabel: label outside the permutation");
    out.push_back(sigma(l));
  }
  return {g_, std::move(out)};
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    require(a >= 0 && a < n && b >= 0 && b < n, "edge endpoint out of range");
    require(a != b, "loops are not allowed");
    require(seen.insert({std::min(a, b), std::max(a, b)}).second,
            "multi-edges are not allowed");
  }
  edges_.assign(seen.begin(), seen.end());
}

// ---- sums ----------------------------------------------------------------------------

EdgeColouredDigraph combine(SumKind kind, const EdgeColouredDigraph& g1,
                            const EdgeColouredDigraph& g2) {
  const int n1 = g1.n();
  std::vector<Edge> edges = g1.edges();
  for (const auto& e : g2.edges())
    edges.push_back({e.from + n1, e.to + n1, e.kind});
  if (kind != SumKind::kDisjoint) {
    EdgeConstraint c = kind == SumKind::kDashed  ? EdgeConstraint::kNeq
                       : kind == SumKind::kSolid ? EdgeConstraint::kLt
                                                 : EdgeConstraint::kLeq;
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < g2.n(); ++b) edges.push_back({a, n1 + b, c});
  }
  return {n1 + g2.n(), std::move(edges)};
}

LabelledDigraph combine_labelled(SumKind kind, const LabelledDigraph& g1,
                                 const LabelledDigraph& g2, bool shift_labels) {
  std::vector<int> labels = g1.labels();
  for (int l : g2.labels()) labels.push_back(shift_labels ? l + g1.n() : l);
  return {combine(kind, g1.graph(), g2.graph()), std::move(labels)};
}

EdgeColouredDigraph chain(SumKind kind,
                          const std::vector<EdgeColouredDigraph>& parts) {
  EdgeColouredDigraph acc;
  for (std::size_t i = 0; i < parts.size(); ++i)
    acc = i ? combine(kind, acc, parts[i]) : parts[i];
  return acc;
}

LabelledDigraph chain_labelled(SumKind kind,
                               const std::vector<LabelledDigraph>& parts) {
  LabelledDigraph acc;
  for (std::size_t i = 0; i < parts.size(); ++i)
    acc = i ? combine_labelled(kind, acc, parts[i], false) : parts[i];
  return acc;
}

// ---- families ----------------------------------------------------------------------------

EdgeColouredDigraph atom(AtomKind kind, int n) {
  require(n >= 1, "atom size must be positive");
  std::vector<Edge> edges;
  switch (kind) {
    case AtomKind::kC:
      if (n == 2) {
        edges = {{0, 1, EdgeConstraint::kLeq}, {1, 0, EdgeConstraint::kLeq}};
      } else if (n > 2) {
        for (int i = 0; i < n; ++i)
          edges.push_back({i, (i + 1) % n, EdgeConstraint::kLeq});
      }
      break;
    case AtomKind::kP:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, EdgeConstraint::kLt});
      break;
    case AtomKind::kQ:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, EdgeConstraint::kLeq});
      break;
    case AtomKind::kK:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, EdgeConstraint::kNeq});
      break;
  }
  return {n, std::move(edges)};
}

LabelledDigraph atom_labelled(AtomKind kind, const std::vector<int>& labels) {
  require(!labels.empty(), "atom label set must be nonempty");
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return {atom(kind, static_cast<int>(labels.size())), std::move(sorted)};
}

namespace {

// Row-major vertex numbering of a diagram with the given row lengths.
std::vector<std::vector<int>> cell_ids(const std::vector<int>& rows) {
  std::vector<std::vector<int>> id(rows.size());
  int next = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) id[i].push_back(next++);
  return id;
}

}  // namespace

EdgeColouredDigraph grid(const Partition& lambda) {
  auto id = cell_ids(lambda.parts());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < id.size(); ++i)
    for (std::size_t j = 0; j < id[i].size(); ++j) {
      if (i + 1 < id.size() && j < id[i + 1].size())
        edges.push_back({id[i][j], id[i + 1][j], EdgeConstraint::kLt});
      if (j + 1 < id[i].size())
        edges.push_back({id[i][j], id[i][j + 1], EdgeConstraint::kLeq});
    }
  return {lambda.size(), std::move(edges)};
}

LabelledDigraph grid_labelled(const Partition& lambda) {
  return LabelledDigraph::standard(grid(lambda));
}

EdgeColouredDigraph comp_grid(const Composition& alpha, bool row_strict) {
  auto id = cell_ids(alpha.parts());
  const EdgeConstraint column = row_strict ? EdgeConstraint::kLeq : EdgeConstraint::kLt;
  const EdgeConstraint row = row_strict ? EdgeConstraint::kLt : EdgeConstraint::kLeq;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (i + 1 < id.size()) edges.push_back({id[i][0], id[i + 1][0], column});
    for (std::size_t j = 0; j + 1 < id[i].size(); ++j)
      edges.push_back({id[i][j], id[i][j + 1], row});
  }
  return {alpha.size(), std::move(edges)};
}

LabelledDigraph from_poset(const std::vector<std::pair<int, int>>& relations,
                           const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[labels[i]] = i;
  require(static_cast<int>(index.size()) == n, "poset labels must be distinct");
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (auto [a, b] : relations) {
    require(index.count(a) && index.count(b), "relation on an unknown label");
    less[index[a]][index[b]] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (less[i][k] && less[k][j]) less[i][j] = true;
  for (int i = 0; i < n; ++i) require(!less[i][i], "relations contain a cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(less[i][k] && less[k][j]);
      if (cover)
        edges.push_back({i, j, labels[i] < labels[j] ? EdgeConstraint::kLeq
                                                     : EdgeConstraint::kLt});
    }
  return {EdgeColouredDigraph(n, std::move(edges)), labels};
}

EdgeColouredDigraph from_graph(const SimpleGraph& h, Orient mode) {
  std::vector<Edge> edges;
  // Edges are stored low to high, which is already the label orientation;
  // any fixed orientation serves for the plain mode.
  (void)mode;
  for (auto [a, b] : h.edges()) edges.push_back({a, b, EdgeConstraint::kNeq});
  return {h.n(), std::move(edges)};
}

EdgeColouredDigraph from_digraph_dashed(const EdgeColouredDigraph& d) {
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) edges.push_back({e.from, e.to, EdgeConstraint::kNeq});
  return {d.n(), std::move(edges)};
}

EdgeColouredDigraph from_weighted(const SimpleGraph& h, const std::vector<int>& wt) {
  require(static_cast<int>(wt.size()) == h.n(), "one weight per vertex");
  std::vector<EdgeColouredDigraph> cycles;
  std::vector<int> rep;
  int offset = 0;
  for (int w : wt) {
    require(w >= 1, "weights must be positive");
    cycles.push_back(atom(AtomKind::kC, w));
    rep.push_back(offset);
    offset += w;
  }
  EdgeColouredDigraph g = cycles.empty() ? EdgeColouredDigraph()
                                         : chain(SumKind::kDisjoint, cycles);
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.push_back({rep[a], rep[b], EdgeConstraint::kNeq});
  return {g.n(), std::move(edges)};
}

SimpleGraph underlying(const EdgeColouredDigraph& d) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : d.edges())
    pairs.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  return {d.n(), {pairs.begin(), pairs.end()}};
}

// ---- structure ------------------------------------------------------------------------------

Contraction contract(const EdgeColouredDigraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> leq(n);
  for (const auto& e : g.edges())
    if (e.kind == EdgeConstraint::kLeq) leq[e.from].push_back(e.to);

  // Tarjan
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : leq[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);

  // Renumber components by their minimum vertex.
  std::vector<int> first(ncomp, n);
  for (int v = 0; v < n; ++v) first[comp[v]] = std::min(first[comp[v]], v);
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rank(ncomp);
  for (int i = 0; i < ncomp; ++i) rank[order[i]] = i;

  Contraction c;
  c.class_of.resize(n);
  c.weights.assign(ncomp, 0);
  std::vector<Block> blocks(ncomp);
  for (int v = 0; v < n; ++v) {
    int k = rank[comp[v]];
    c.class_of[v] = k;
    ++c.weights[k];
    blocks[k].push_back(v + 1);
  }
  c.classes = SetPartition(std::move(blocks));
  for (const auto& e : g.edges()) {
    int a = c.class_of[e.from], b = c.class_of[e.to];
    if (a == b) {
      if (e.kind != EdgeConstraint::kLeq) c.feasible = false;
    } else {
      c.inter_edges.push_back({a, b, e.kind});
    }
  }
  return c;
}

std::vector<std::uint32_t> closed_subsets(const EdgeColouredDigraph& g) {
  require(g.n() <= 24, "closed_subsets: too many vertices");
  std::vector<std::uint32_t> out;
  const std::uint32_t total = 1u << g.n();
  for (std::uint32_t s = 0; s < total; ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (e.kind == EdgeConstraint::kNeq) continue;
      if ((s >> e.from & 1u) && !(s >> e.to & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<int> mask_vertices(std::uint32_t mask) {
  std::vector<int> v;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) v.push_back(i);
  return v;
}

EdgeColouredDigraph induced(const EdgeColouredDigraph& g,
                            const std::vector<int>& vertices) {
  std::vector<int> pos(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (pos[e.from] >= 0 && pos[e.to] >= 0) edges.push_back({pos[e.from], pos[e.to], e.kind});
  return {static_cast<int>(vertices.size()), std::move(edges)};
}

LabelledDigraph induced(const LabelledDigraph& g, const std::vector<int>& vertices) {
  std::vector<int> labels;
  for (int v : vertices) labels.push_back(g.labels()[v]);
  return LabelledDigraph(induced(g.graph(), vertices), std::move(labels)).standardized();
}

std::vector<EdgeColouredDigraph> orientations(const SimpleGraph& h) {
  const auto& es = h.edges();
  require(es.size() < 31, "orientations: too many edges");
  std::vector<EdgeColouredDigraph> out;
  for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      auto [a, b] = es[i];
      if (mask >> i & 1u) std::swap(a, b);
      edges.push_back({a, b, EdgeConstraint::kLt});
    }
    out.emplace_back(h.n(), std::move(edges));
  }
  return out;
}

bool is_k_balanced(const EdgeColouredDigraph& orientation, int k) {
  const int n = orientation.n();
  // dir[a][b] = +1 if a -> b, -1 if b -> a, 0 if not adjacent.
  std::vector<std::vector<int>> dir(n, std::vector<int>(n, 0));
  for (const auto& e : orientation.edges()) {
    dir[e.from][e.to] = 1;
    dir[e.to][e.from] = -1;
  }
  std::vector<bool> used(n, false);
  bool ok = true;
  // Simple cycles through their minimum vertex s; each is seen in both
  // directions, which is harmless since the test is symmetric.
  auto dfs = [&](auto&& self, int s, int v, int len, int fwd, int back) -> void {
    if (!ok) return;
    for (int w = s; w < n; ++w) {
      if (!dir[v][w]) continue;
      int f = fwd + (dir[v][w] > 0), b = back + (dir[v][w] < 0);
      if (w == s) {
        if (len >= 3 && (f < k || b < k)) ok = false;
        continue;
      }
      if (used[w]) continue;
      used[w] = true;
      self(self, s, w, len + 1, f, b);
      used[w] = false;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    used[s] = true;
    dfs(dfs, s, s, 1, 0, 0);
    used[s] = false;
  }
  return ok;
}

EdgeColouredDigraph random_digraph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (rng() % 2 == 0) continue;
      edges.push_back({a, b, static_cast<EdgeConstraint>(rng() % 3)});
    }
  return {n, std::move(edges)};
}

SimpleGraph random_simple_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 2) edges.push_back({a, b});
  return {n, std::move(edges)};
}

std::string to_string(EdgeConstraint c) {
  switch (c) {
    case EdgeConstraint::kNeq: return "neq";
    case EdgeConstraint::kLt: return "lt";
    case EdgeConstraint::kLeq: return "leq";
  }
  return "?";
}

EdgeConstraint constraint_from_string(const std::string& s) {
  if (s == "neq") return EdgeConstraint::kNeq;
  if (s == "lt") return EdgeConstraint::kLt;
  if (s == "leq") return EdgeConstraint::kLeq;
  throw InvalidArgument("unknown edge constraint: " + s);
}

}  // namespace chromalg
