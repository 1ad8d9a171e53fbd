#pragma once

#include <vector>

namespace ader {

// Gauss-Legendre rule mapped to the reference interval [0,1].
// Weights sum to one; an n-point rule integrates polynomials of
// degree <= 2n-1 exactly.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

// n in [1,16]; throws ConfigError otherwise.
const QuadratureRule& gauss_rule(int n);

}  // namespace ader
