#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ader {

// Conservation-law description u_t + dF(u)/dx = S(x,u). All member
// procedures act on raw state vectors of length `components`.
struct PdeSystem {
    int components = 1;
    std::string name;
    // Primitive-variable names used for snapshot headers.
    std::vector<std::string> field_names;

    std::function<void(const double* u, double* f)> flux;
    // Directional flux derivative F'(u)*w, used for the in-cell flux
    // divergence d/dx F(u_h) = F'(u_h) * du_h/dx.
    std::function<void(const double* u, const double* w, double* out)> flux_jacobian;
    std::function<double(const double* u)> max_abs_eigenvalue;
    // Null for homogeneous systems.
    std::function<void(double x, const double* u, double* s)> source;
    // Conserved -> primitive conversion for output.
    std::function<void(const double* u, double* prim)> to_primitive;
    // Strict physical admissibility (finiteness is checked separately).
    std::function<bool(const double* u)> admissible;

    bool has_source() const { return static_cast<bool>(source); }
};

// Conserved Euler state per unit volume.
struct EulerState {
    double rho;  // density
    double q;    // momentum
    double E;    // total energy
};

// p = (gamma-1) (E - q^2 / (2 rho)); rho <= 0 raises InadmissibleState.
double euler_pressure(const EulerState& s, double gamma);
// (q, q^2/rho + p, q/rho (E + p)); inadmissible states raise.
std::array<double, 3> euler_flux(const EulerState& s, double gamma);
// |u| + sqrt(gamma p / rho).
double euler_max_wavespeed(const EulerState& s, double gamma);

EulerState euler_from_primitive(double rho, double u, double p, double gamma);
std::array<double, 3> euler_primitive(const EulerState& s, double gamma);

PdeSystem advection_system(double speed);
PdeSystem burgers_system();
PdeSystem euler_system(double gamma = 1.4);

}  // namespace ader
