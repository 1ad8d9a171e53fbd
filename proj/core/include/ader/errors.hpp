#pragma once

#include <stdexcept>
#include <string>

namespace ader {

// Base class for everything thrown by this library.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad degree, bad key, bad range).
class ConfigError : public SolverError {
public:
    using SolverError::SolverError;
};

// A NaN/Inf appeared in an iterative update; carries the iteration index.
class DivergedIteration : public SolverError {
public:
    DivergedIteration(std::string what, int iteration)
        : SolverError(std::move(what)), iteration(iteration) {}
    int iteration;
};

// Tolerance-mode predictor failed to converge within its iteration cap,
// which signals a time step too large for the contraction to hold.
class NonContraction : public SolverError {
public:
    NonContraction(std::string what, int iterations)
        : SolverError(std::move(what)), iterations(iterations) {}
    int iterations;
};

// A physically inadmissible state (e.g. nonpositive density or pressure)
// was met while evaluating fluxes; carries the space-time location.
class InadmissibleState : public SolverError {
public:
    InadmissibleState(std::string what, double x = 0.0, double t = 0.0)
        : SolverError(std::move(what)), x(x), t(t) {}
    double x;
    double t;
};

// Riemann data that would generate vacuum.
class VacuumError : public SolverError {
public:
    using SolverError::SolverError;
};

// Singular local system during structure assembly.
class AssemblyError : public SolverError {
public:
    using SolverError::SolverError;
};

}  // namespace ader
