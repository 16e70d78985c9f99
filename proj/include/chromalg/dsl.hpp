#pragma once

#include <string>

#include "chromalg/graph.hpp"

namespace chromalg {

// Builder expressions:
//   atoms      C(n) P(n) Q(n) K(n) grid(3,1) cgrid(1,2) rcgrid(1,2)
//   sums       U(g,h,...) D(...) S(...) W(...)  (left folds; Uchain etc. are aliases)
// Labels come out as 1..n in vertex order. Syntax errors raise InvalidArgument.
LabelledDigraph parse_dsl(const std::string& text);

}  // namespace chromalg
