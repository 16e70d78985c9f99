#pragma once

// NCQSym in monomial coordinates, labelled expansions, the NCSym bases, the
// Malvenuto-Reutenauer injection and the r-level subalgebras.

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chromalg/chromatic.hpp"
#include "chromalg/combinat.hpp"
#include "chromalg/graph.hpp"
#include "chromalg/linear_combination.hpp"
#include "chromalg/qsym.hpp"

namespace chromalg {

// Keys are set compositions of [n]; the key order is graded by n.
using NCQSymExpr = LinearCombination<SetComposition>;
using NCTensor = LinearCombination<std::pair<SetComposition, SetComposition>>;
using NCTensor3 =
    LinearCombination<std::tuple<SetComposition, SetComposition, SetComposition>>;
using NCSymCoords = LinearCombination<SetPartition>;
using RCoords = LinearCombination<RSetComposition>;
using RTensor = LinearCombination<std::pair<RSetComposition, RSetComposition>>;

NCQSymExpr nc_one();
NCQSymExpr specialize_t(const NCQSymExpr& f);
NCTensor specialize_t(const NCTensor& x);

// Labels that are not [n] are standardized first.
NCQSymExpr expand_nc(const LabelledDigraph& g);
QSymExpr rho(const NCQSymExpr& f);

NCQSymExpr multiply_nc(const NCQSymExpr& f, const NCQSymExpr& g);
NCTensor coproduct_nc(const NCQSymExpr& f);
NCTensor3 coproduct_nc_left(const NCTensor& x);
NCTensor3 coproduct_nc_right(const NCTensor& x);
NCTensor multiply_nc(const NCTensor& a, const NCTensor& b);
NCTensor tensor_nc(const NCQSymExpr& f, const NCQSymExpr& g);

// Sum over closed S of Y(G|V\S) (x) Y(G|S) with standardized labels, t = 1.
NCTensor coproduct_nc_digraph(const LabelledDigraph& g);

enum class NCBasis { kM, kF, kFbar };
NCQSymExpr basis_nc(NCBasis kind, const SetComposition& phi);
// Solid chain of labelled C (M), of labelled Q (F), double chain of C (Fbar).
LabelledDigraph nc_digraph(NCBasis kind, const SetComposition& phi);
// Coordinates of f in the given basis; f must be supported on initial segments.
NCQSymExpr to_basis_nc(const NCQSymExpr& f, NCBasis basis);

enum class NCSymKind { kM, kE, kH, kP, kS };
NCQSymExpr basis_ncsym(NCSymKind kind, const SetPartition& pi);
// e from blockwise symmetrized P blocks.
NCQSymExpr ncsym_e_from_paths(const SetPartition& pi);
// Sum over Omega of lambda(Omega meet Pi)! m_Omega.
NCQSymExpr ncsym_h_from_meet(const SetPartition& pi);
NCQSymExpr ncsym_m(const SetPartition& pi);  // sum of M over orderings

// Sum over every relabelling sigma in S_n of Y(sigma o (G,L)); n <= 5.
NCQSymExpr symmetrize(const LabelledDigraph& g);
// Sum over the product of the symmetric groups of the given label blocks.
NCQSymExpr symmetrize_within(const LabelledDigraph& g, const SetPartition& blocks);
NCQSymExpr relabel(const NCQSymExpr& f, const Permutation& sigma);

bool is_ncsym(const NCQSymExpr& f);
// Throws InvalidArgument when f is not in NCSym.
NCSymCoords to_m_coordinates(const NCQSymExpr& f);

NCQSymExpr mr_F(const Permutation& sigma);
// Word-realized F_sigma * F_tau, decomposed into F_gamma, mapped through
// mr_F, compared with the product of the images.
bool mr_inject_check(const Permutation& sigma, const Permutation& tau,
                     std::string* failure = nullptr);

enum class NCRKind { kM, kFbar };
NCQSymExpr basis_ncr(NCRKind kind, const RSetComposition& x);
LabelledDigraph ncr_digraph(NCRKind kind, const RSetComposition& x);

class RegroupFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects f into r-coordinates; throws RegroupFailure naming the first fiber
// on which the coefficients are not constant.
RCoords r_regroup(const NCQSymExpr& f, RLevel r);
RTensor r_regroup(const NCTensor& x, RLevel r);
bool in_ncqsym_r(const NCQSymExpr& f, RLevel r);
NCQSymExpr embed(const RCoords& f);

std::string to_string(const NCQSymExpr& f);
std::string to_string(const NCTensor& x);
std::string to_string(const NCSymCoords& f);
std::string to_string(const RCoords& f);
std::string to_string(const RTensor& x);

}  // namespace chromalg
