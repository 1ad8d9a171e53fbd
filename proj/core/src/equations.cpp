#include "ader/equations.hpp"

#include <cmath>

#include "ader/errors.hpp"

namespace ader {

double euler_pressure(const EulerState& s, double gamma) {
    if (!(s.rho > 0.0)) throw InadmissibleState("euler_pressure: nonpositive density");
    return (gamma - 1.0) * (s.E - 0.5 * s.q * s.q / s.rho);
}

std::array<double, 3> euler_flux(const EulerState& s, double gamma) {
    const double p = euler_pressure(s, gamma);
    if (!(p > 0.0)) throw InadmissibleState("euler_flux: nonpositive pressure");
    const double v = s.q / s.rho;
    return {s.q, s.q * v + p, v * (s.E + p)};
}

double euler_max_wavespeed(const EulerState& s, double gamma) {
    const double p = euler_pressure(s, gamma);
    if (!(p > 0.0)) throw InadmissibleState("euler_max_wavespeed: nonpositive pressure");
    const double v = s.q / s.rho;
    return std::abs(v) + std::sqrt(gamma * p / s.rho);
}

EulerState euler_from_primitive(double rho, double u, double p, double gamma) {
    return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

std::array<double, 3> euler_primitive(const EulerState& s, double gamma) {
    return {s.rho, s.q / s.rho, euler_pressure(s, gamma)};
}

PdeSystem advection_system(double speed) {
    PdeSystem sys;
    sys.components = 1;
    sys.name = "advection";
    sys.field_names = {"u"};
    sys.flux = [speed](const double* u, double* f) { f[0] = speed * u[0]; };
    sys.flux_jacobian = [speed](const double*, const double* w, double* out) {
        out[0] = speed * w[0];
    };
    sys.max_abs_eigenvalue = [speed](const double*) { return std::abs(speed); };
    sys.to_primitive = [](const double* u, double* prim) { prim[0] = u[0]; };
    sys.admissible = [](const double* u) { return std::isfinite(u[0]); };
    return sys;
}

PdeSystem burgers_system() {
    PdeSystem sys;
    sys.components = 1;
    sys.name = "burgers";
    sys.field_names = {"u"};
    sys.flux = [](const double* u, double* f) { f[0] = 0.5 * u[0] * u[0]; };
    sys.flux_jacobian = [](const double* u, const double* w, double* out) {
        out[0] = u[0] * w[0];
    };
    sys.max_abs_eigenvalue = [](const double* u) { return std::abs(u[0]); };
    sys.to_primitive = [](const double* u, double* prim) { prim[0] = u[0]; };
    sys.admissible = [](const double* u) { return std::isfinite(u[0]); };
    return sys;
}

PdeSystem euler_system(double gamma) {
    if (!(gamma > 1.0)) throw ConfigError("euler_system: gamma must exceed 1");
    PdeSystem sys;
    sys.components = 3;
    sys.name = "euler";
    sys.field_names = {"rho", "u", "p"};
    sys.flux = [gamma](const double* u, double* f) {
        const auto fl = euler_flux({u[0], u[1], u[2]}, gamma);
        f[0] = fl[0];
        f[1] = fl[1];
        f[2] = fl[2];
    };
    sys.flux_jacobian = [gamma](const double* u, const double* w, double* out) {
        // A(u) w with the ideal-gas Euler Jacobian in conserved variables.
        const double rho = u[0], q = u[1], E = u[2];
        if (!(rho > 0.0)) throw InadmissibleState("euler flux_jacobian: nonpositive density");
        const double v = q / rho;
        const double g = gamma;
        out[0] = w[1];
        out[1] = 0.5 * (g - 3.0) * v * v * w[0] + (3.0 - g) * v * w[1] + (g - 1.0) * w[2];
        const double H = (E + (g - 1.0) * (E - 0.5 * q * v)) / rho;  // total enthalpy
        out[2] = (0.5 * (g - 1.0) * v * v * v - v * H) * w[0] +
                 (H - (g - 1.0) * v * v) * w[1] + g * v * w[2];
    };
    sys.max_abs_eigenvalue = [gamma](const double* u) {
        return euler_max_wavespeed({u[0], u[1], u[2]}, gamma);
    };
    sys.to_primitive = [gamma](const double* u, double* prim) {
        const auto pr = euler_primitive({u[0], u[1], u[2]}, gamma);
        prim[0] = pr[0];
        prim[1] = pr[1];
        prim[2] = pr[2];
    };
    sys.admissible = [gamma](const double* u) {
        if (!std::isfinite(u[0]) || !std::isfinite(u[1]) || !std::isfinite(u[2])) return false;
        if (!(u[0] > 0.0)) return false;
        const double p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
        return p > 0.0;
    };
    return sys;
}

}  // namespace ader
