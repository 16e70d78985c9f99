#pragma once

// Edge-coloured digraphs: construction, the four sums, named families,
// contraction classes, closed subsets and balanced orientations.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chromalg/combinat.hpp"

namespace chromalg {

// NEQ is the dashed edge, LT the solid edge, LEQ the double edge.
enum class EdgeConstraint { kNeq, kLt, kLeq };

struct Edge {
  int from;
  int to;
  EdgeConstraint kind;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeColouredDigraph {
 public:
  EdgeColouredDigraph() = default;
  // Throws on loops, out-of-range vertices, or two edges on one ordered pair.
  EdgeColouredDigraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return n_ == 0; }

  friend bool operator==(const EdgeColouredDigraph&,
                         const EdgeColouredDigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

class LabelledDigraph {
 public:
  LabelledDigraph() = default;
  LabelledDigraph(EdgeColouredDigraph g, std::vector<int> labels);
  // Labels 1..n in vertex order.
  static LabelledDigraph standard(EdgeColouredDigraph g);

  const EdgeColouredDigraph& graph() const { return g_; }
  const std::vector<int>& labels() const { return labels_; }
  int n() const { return g_.n(); }
  // Same digraph, labels replaced by their ranks.
  LabelledDigraph standardized() const;
  // Label of vertex v becomes sigma(label) for sigma a permutation of [n].
  LabelledDigraph relabelled(const Permutation& sigma) const;

 private:
  EdgeColouredDigraph g_;
  std::vector<int> labels_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  // Stored as (min, max), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

enum class SumKind { kDisjoint, kDashed, kSolid, kDouble };
enum class AtomKind { kC, kP, kQ, kK };

EdgeColouredDigraph combine(SumKind kind, const EdgeColouredDigraph& g1,
                            const EdgeColouredDigraph& g2);
// With shift_labels the second label set is moved up by |V(G1)| first.
LabelledDigraph combine_labelled(SumKind kind, const LabelledDigraph& g1,
                                 const LabelledDigraph& g2,
                                 bool shift_labels = true);
// Left fold of combine over a nonempty list.
EdgeColouredDigraph chain(SumKind kind,
                          const std::vector<EdgeColouredDigraph>& parts);
LabelledDigraph chain_labelled(SumKind kind,
                               const std::vector<LabelledDigraph>& parts);

EdgeColouredDigraph atom(AtomKind kind, int n);
// Labels go up along P and Q paths.
LabelledDigraph atom_labelled(AtomKind kind, const std::vector<int>& labels);

EdgeColouredDigraph grid(const Partition& lambda);
// Row-major labels 1..n.
LabelledDigraph grid_labelled(const Partition& lambda);
EdgeColouredDigraph comp_grid(const Composition& alpha, bool row_strict);

// relations are pairs (a, b) meaning a <_P b over the given labels.
LabelledDigraph from_poset(const std::vector<std::pair<int, int>>& relations,
                           const std::vector<int>& labels);

enum class Orient { kPlain, kByLabel };
EdgeColouredDigraph from_graph(const SimpleGraph& h, Orient mode);
EdgeColouredDigraph from_digraph_dashed(const EdgeColouredDigraph& d);
EdgeColouredDigraph from_weighted(const SimpleGraph& h,
                                  const std::vector<int>& wt);
SimpleGraph underlying(const EdgeColouredDigraph& d);

struct Contraction {
  SetPartition classes;             // vertex v appears as v + 1
  std::vector<int> class_of;        // vertex -> class index
  std::vector<int> weights;         // class sizes
  bool feasible = true;
  std::vector<Edge> inter_edges;    // original edges between classes, as class indices
};

Contraction contract(const EdgeColouredDigraph& g);

// Subsets closed under outgoing LT and LEQ edges, as bitmasks, ascending.
std::vector<std::uint32_t> closed_subsets(const EdgeColouredDigraph& g);
std::vector<int> mask_vertices(std::uint32_t mask);
// Induced subdigraph, vertices renumbered in increasing order.
EdgeColouredDigraph induced(const EdgeColouredDigraph& g,
                            const std::vector<int>& vertices);
// Induced labelled subdigraph with standardized labels.
LabelledDigraph induced(const LabelledDigraph& g,
                        const std::vector<int>& vertices);

// All 2^|E| orientations as LT digraphs; bit i of the index reverses edge i.
std::vector<EdgeColouredDigraph> orientations(const SimpleGraph& h);
bool is_k_balanced(const EdgeColouredDigraph& orientation, int k);

// Seeded random digraph: each ordered pair is empty with probability 1/2,
// otherwise NEQ, LT or LEQ uniformly.
EdgeColouredDigraph random_digraph(int n, std::uint64_t seed);
SimpleGraph random_simple_graph(int n, std::uint64_t seed);

std::string to_string(EdgeConstraint c);
EdgeConstraint constraint_from_string(const std::string& s);

}  // namespace chromalg
