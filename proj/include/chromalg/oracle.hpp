#pragma once

// Brute-force ground truth in finitely many variables. Nothing here calls
// the contraction/surjection engine.

#include <string>
#include <vector>

#include "chromalg/graph.hpp"
#include "chromalg/linear_combination.hpp"
#include "chromalg/ncqsym.hpp"
#include "chromalg/oracle_kernels.hpp"
#include "chromalg/qsym.hpp"

namespace chromalg::oracle {

// Commuting: exponent vector of length k. Noncommuting: word over [k].
struct TruncPoly {
  int k = 0;
  LinearCombination<std::vector<int>> terms;
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;
};

struct WordPoly {
  int k = 0;
  LinearCombination<std::vector<int>> terms;
  friend bool operator==(const WordPoly&, const WordPoly&) = default;
};

TruncPoly direct_expand(const EdgeColouredDigraph& g, int k,
                        kernels::Kernel kernel = kernels::best_kernel());
WordPoly direct_expand_nc(const LabelledDigraph& g, int k,
                          kernels::Kernel kernel = kernels::best_kernel());

TruncPoly realize(const QSymExpr& f, int k);
WordPoly realize_nc(const NCQSymExpr& f, int k);

TruncPoly multiply(const TruncPoly& a, const TruncPoly& b);
WordPoly multiply(const WordPoly& a, const WordPoly& b);  // concatenation

// All words of length n over [k] whose standardization is sigma^{-1}.
WordPoly mr_word_F(const Permutation& sigma, int k);

// Fillings of a row-by-row shape with entries in [k].
//   kSemistandard: rows weak, every column strict (partition shapes).
//   kImmaculate: rows weak, first column strict.
//   kRowStrictImmaculate: rows strict, first column weak.
enum class TableauRule { kSemistandard, kImmaculate, kRowStrictImmaculate };
TruncPoly tableau_poly(const std::vector<int>& shape, int k, TableauRule rule);

struct Comparison {
  bool equal = true;
  std::string first_difference;  // "monomial: lhs vs rhs"
};

Comparison assert_equal(const TruncPoly& a, const TruncPoly& b);
Comparison assert_equal(const WordPoly& a, const WordPoly& b);

}  // namespace chromalg::oracle
