#pragma once

// Exact linear algebra over the rationals, sized for basis checks.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace chromalg {

using RationalMatrix = std::vector<std::vector<mpq_class>>;  // row-major

int rank(RationalMatrix m);

// Solves sum_j x_j * columns[j] = target. Returns nullopt when target is not
// in the span; free variables are set to zero.
std::optional<std::vector<mpq_class>> solve_in_span(
    const std::vector<std::vector<mpq_class>>& columns,
    const std::vector<mpq_class>& target);

}  // namespace chromalg
