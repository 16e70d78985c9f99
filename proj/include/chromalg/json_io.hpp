#pragma once

#include <json.hpp>

#include "chromalg/ncqsym.hpp"
#include "chromalg/qsym.hpp"

namespace chromalg {

using Json = nlohmann::ordered_json;

// Malformed documents raise InvalidArgument.

Json to_json(const Composition& a);
Json to_json(const Partition& l);
Json to_json(const SetComposition& phi);
Json to_json(const SetPartition& pi);
Json to_json(const RLevel& r);
Json to_json(const RSetComposition& x);
Json to_json(const TPoly& p);  // coefficient list; entries beyond int64 become strings

Json to_json(const EdgeColouredDigraph& g);
Json to_json(const LabelledDigraph& g);
Json to_json(const SimpleGraph& h);

Json to_json(const QSymExpr& f);
Json to_json(const QSymTensor& x);
Json to_json(const NCQSymExpr& f);
Json to_json(const NCTensor& x);
Json to_json(const NCSymCoords& f);
Json to_json(const RCoords& f);
Json to_json(const RTensor& x);
Json to_json(const RationalPoly& p);

Composition composition_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SetComposition set_composition_from_json(const Json& j);
SetPartition set_partition_from_json(const Json& j);
RLevel rlevel_from_json(const Json& j);
RSetComposition r_set_composition_from_json(const Json& j);
TPoly tpoly_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);

// Labels default to 1..n when absent.
LabelledDigraph digraph_from_json(const Json& j);
SimpleGraph simple_graph_from_json(const Json& j);

QSymExpr qsym_from_json(const Json& j);
NCQSymExpr ncqsym_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace chromalg
