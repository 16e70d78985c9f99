#pragma once

// QSym in monomial coordinates with coefficients in Z[t].

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chromalg/combinat.hpp"
#include "chromalg/graph.hpp"
#include "chromalg/linear_combination.hpp"

namespace chromalg {

// Keys are graded by size, so one map holds every homogeneous component.
using QSymExpr = LinearCombination<Composition>;
using QSymTensor = LinearCombination<std::pair<Composition, Composition>>;
using QSymTensor3 = LinearCombination<std::tuple<Composition, Composition, Composition>>;

QSymExpr one();
QSymExpr homogeneous_component(const QSymExpr& f, int degree);
QSymExpr multiply(const QSymExpr& f, const QSymExpr& g);
QSymTensor coproduct(const QSymExpr& f);
QSymTensor3 coproduct_left(const QSymTensor& x);   // (Delta (x) id)
QSymTensor3 coproduct_right(const QSymTensor& x);  // (id (x) Delta)
QSymTensor multiply(const QSymTensor& a, const QSymTensor& b);
QSymTensor tensor(const QSymExpr& f, const QSymExpr& g);
TPoly counit(const QSymExpr& f);
// Replaces t by 1.
QSymExpr specialize_t(const QSymExpr& f);
QSymTensor specialize_t(const QSymTensor& x);

QSymExpr basis_M(const Composition& alpha);
// Expansion of the solid chain of Q_{alpha_i}.
QSymExpr basis_F(const Composition& alpha);
// Sum of M_gamma over gamma coarsening alpha.
QSymExpr basis_Fbar(const Composition& alpha);

enum class SymKind { kM, kMAug, kE, kEAug, kH, kP, kS };
// Combinatorial definitions, independent of the digraph engine.
QSymExpr basis_sym(SymKind kind, const Partition& lambda);
// The digraph whose generalized chromatic function is the same row.
EdgeColouredDigraph sym_digraph(SymKind kind, const Partition& lambda);

enum class RKind { kM, kS, kFbar, kSbar };
EdgeColouredDigraph r_digraph(RKind kind, const RComposition& x);
QSymExpr basis_r(RKind kind, const RComposition& x);

bool in_qsym_r(const QSymExpr& f, RLevel r);
bool is_symmetric(const QSymExpr& f);

// Coefficients indexed by t-power.
using RationalTCoeff = std::vector<mpq_class>;
// Throws InvalidArgument when f is not symmetric.
std::map<Partition, RationalTCoeff> to_sym_basis(const QSymExpr& f, SymKind kind);

enum class QBasis { kM, kF, kFbar };
// F and Fbar are unitriangular over Z, so coefficients stay in Z[t].
QSymExpr to_basis(const QSymExpr& f, QBasis basis);

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class eval(const mpq_class& p) const;
  RationalPoly& operator+=(const RationalPoly& o);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::string to_string(const RationalPoly& p);  // in the variable p

// Number of proper colourings with colours in [p]; t must already be 1.
mpz_class evaluate_ones(const QSymExpr& f, long p);
RationalPoly chromatic_polynomial(const QSymExpr& f);

struct FamilyBasisReport {
  std::vector<std::pair<Composition, QSymExpr>> elements;
  bool leading_terms_ok = true;  // each element is M_alpha plus strict refinements
  int rank = 0;
  bool invertible = false;
  std::string failure;
};

// family(i) must return an LEQ-only digraph on i vertices; elements are the
// solid chains of family(alpha_i).
FamilyBasisReport family_basis(int n,
                               const std::function<EdgeColouredDigraph(int)>& family);

std::string to_string(const QSymExpr& f);   // "(1+t)M(1,1,1)+M(2,1)"
std::string to_string(const QSymTensor& x);

}  // namespace chromalg
