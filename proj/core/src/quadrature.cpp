#include "ader/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "ader/errors.hpp"

namespace ader {
namespace {

constexpr int kMaxPoints = 16;

// Nodes/weights on [-1,1] by Newton iteration on the Legendre polynomial,
// seeded with the Chebyshev-like estimate. Converges to machine precision
// in a handful of iterations for n <= 16.
QuadratureRule make_rule(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::acos(-1.0);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: p_j(x), derivative from p_{j-1}.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1,1] -> [0,1].
        rule.nodes[k] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - k] = 0.5 * (1.0 + x);
        rule.weights[k] = 0.5 * w;
        rule.weights[n - 1 - k] = 0.5 * w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.5;  // exact midpoint for odd rules
    return rule;
}

}  // namespace

const QuadratureRule& gauss_rule(int n) {
    if (n < 1 || n > kMaxPoints) {
        throw ConfigError("gauss_rule: point count " + std::to_string(n) +
                          " outside [1," + std::to_string(kMaxPoints) + "]");
    }
    static std::array<QuadratureRule, kMaxPoints> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int k = 1; k <= kMaxPoints; ++k) cache[k - 1] = make_rule(k);
    });
    return cache[n - 1];
}

}  // namespace ader
