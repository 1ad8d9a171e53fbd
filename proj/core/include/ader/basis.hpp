#pragma once

#include <span>
#include <vector>

namespace ader {

// Modal Taylor basis on an interval: function i evaluates to xi^i / i!
// with xi = (x - center)/scale. Function 0 is the constant 1, and every
// function is O(1) in magnitude on the cell.
class TaylorBasis1D {
public:
    TaylorBasis1D(int degree, double center, double scale);

    int degree() const { return degree_; }
    double center() const { return center_; }
    double scale() const { return scale_; }

    // xi^i / i!; i must be in [0, degree].
    double value(int i, double x) const;
    // d/dx of function i: xi^{i-1}/(i-1)! * (1/scale), zero for i = 0.
    double derivative(int i, double x) const;

private:
    int degree_;
    double center_;
    double scale_;
};

// Reference-coordinate evaluations used by the hot paths: xi in [-1/2,1/2]
// for space (cell midpoint at 0), eta in [0,1] for time.
double taylor_ref(int i, double xi);        // xi^i / i!
double taylor_ref_deriv(int i, double xi);  // xi^{i-1}/(i-1)!, 0 for i=0

// One space-time mode: spatial index i and temporal index m.
struct SpaceTimeMode {
    int space;
    int time;
    int total() const { return space + time; }
};

// Tensor modes with total degree <= degree, ordered by total degree and
// then by ascending spatial index. The ordering makes every lower-degree
// enumeration a prefix of the higher-degree ones.
const std::vector<SpaceTimeMode>& space_time_modes(int degree);

// (degree+1)(degree+2)/2 in one space dimension plus time.
int space_time_mode_count(int degree);

// Spatial polynomial on a single cell: (degree+1) x components Taylor
// coefficients, mode-major.
struct SpatialPoly {
    int degree = 0;
    int components = 1;
    std::vector<double> coeffs;  // coeffs[i*components + q]

    static SpatialPoly zero(int degree, int components);
    static SpatialPoly constant(std::span<const double> state);

    double& at(int i, int q) { return coeffs[static_cast<size_t>(i) * components + q]; }
    double at(int i, int q) const { return coeffs[static_cast<size_t>(i) * components + q]; }

    // Value of component q at reference coordinate xi in [-1/2, 1/2].
    double value_ref(int q, double xi) const;
    // d/dxi of component q (multiply by 1/h for the physical derivative).
    double deriv_ref(int q, double xi) const;
    // Average over the cell (exact moment sum).
    double cell_mean(int q) const;
};

// Space-time polynomial coefficients on a control volume: L x components
// values against the degree-indexed space-time enumeration.
struct SpaceTimeCoeffs {
    int degree = 0;
    int components = 1;
    std::vector<double> values;  // values[l*components + q]

    static SpaceTimeCoeffs zero(int degree, int components);
    // Constant-in-space-and-time block from a single state.
    static SpaceTimeCoeffs constant(std::span<const double> state);
    // Constant-in-time extension of a spatial polynomial (time mode 0).
    static SpaceTimeCoeffs from_spatial(const SpatialPoly& poly);

    int size() const { return space_time_mode_count(degree); }
    double& at(int l, int q) { return values[static_cast<size_t>(l) * components + q]; }
    double at(int l, int q) const { return values[static_cast<size_t>(l) * components + q]; }

    // Value of component q at (xi, eta) in [-1/2,1/2] x [0,1].
    double value_ref(int q, double xi, double eta) const;
    // Full state at (xi, eta); out must have `components` slots.
    void state_ref(double xi, double eta, std::span<double> out) const;
    // d/dxi of component q (multiply by 1/h for the physical derivative).
    double deriv_xi_ref(int q, double xi, double eta) const;

    bool all_finite() const;
};

// Zero-padding embedding into the degree-dst enumeration; the represented
// polynomial is unchanged. dst_degree < src.degree is a ConfigError.
SpaceTimeCoeffs embed_coeffs(const SpaceTimeCoeffs& src, int dst_degree);

// Restriction of a space-time block at eta (time reference coordinate) to a
// spatial polynomial of the given spatial degree.
SpatialPoly spatial_slice(const SpaceTimeCoeffs& coeffs, double eta, int spatial_degree);

// Moment integrals over the reference cell: integral of xi^a/a! * xi^b/b!
// over [-1/2, 1/2] in closed form.
double taylor_pair_moment(int a, int b);
// Integral of xi^i/i! over [-1/2,1/2] (cell average of basis function i).
double taylor_moment(int i);

}  // namespace ader
