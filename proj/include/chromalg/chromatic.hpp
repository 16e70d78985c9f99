#pragma once

// Expansion of generalized chromatic functions in the monomial basis, and the
// specializations built on it.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chromalg/graph.hpp"
#include "chromalg/qsym.hpp"

namespace chromalg {

struct ExpandOptions {
  int threads = 1;
};

// Calls visit(level_of_class, asc) for every constraint-satisfying surjection
// of the contraction classes onto levels 0..k-1.
using SurjectionVisitor = std::function<void(const std::vector<int>&, int)>;
void for_each_surjection(const EdgeColouredDigraph& g, const Contraction& c,
                         int k, const SurjectionVisitor& visit);

QSymExpr expand(const EdgeColouredDigraph& g, const ExpandOptions& opt = {});

// Replaces the NEQ edge (a,b) by a -> b and by b -> a.
std::pair<EdgeColouredDigraph, EdgeColouredDigraph> split_dashed(
    const EdgeColouredDigraph& g, const Edge& e);

// Sum over closed S of X(G|V\S) (x) X(G|S), at t = 1.
QSymTensor coproduct_digraph(const EdgeColouredDigraph& g);
// Same sum with t kept; each term carries t^(edges from V\S into S).
QSymTensor coproduct_digraph_t(const EdgeColouredDigraph& g);

std::optional<int> chromatic_number(const EdgeColouredDigraph& g);

QSymExpr stanley(const SimpleGraph& h);
QSymExpr shareshian_wachs(const SimpleGraph& h);
QSymExpr ellzey(const EdgeColouredDigraph& d);
QSymExpr crew_spirkl(const SimpleGraph& h, const std::vector<int>& wt);
QSymExpr p_partition_gf(const std::vector<std::pair<int, int>>& relations,
                        const std::vector<int>& labels);
QSymExpr dual_immaculate(const Composition& alpha);
QSymExpr row_strict_dual_immaculate(const Composition& alpha);

QSymExpr humpert(const SimpleGraph& h, int k);
QSymExpr humpert_direct(const SimpleGraph& h, int k);

}  // namespace chromalg
