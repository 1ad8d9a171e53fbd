#include "ader/basis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "ader/errors.hpp"

namespace ader {
namespace {

constexpr int kMaxDegree = 10;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TaylorBasis1D::TaylorBasis1D(int degree, double center, double scale)
    : degree_(degree), center_(center), scale_(scale) {
    if (degree < 0 || degree > kMaxDegree) throw ConfigError("TaylorBasis1D: bad degree");
    if (!(scale > 0.0)) throw ConfigError("TaylorBasis1D: scale must be positive");
}

double TaylorBasis1D::value(int i, double x) const {
    if (i < 0 || i > degree_) throw ConfigError("TaylorBasis1D::value: index out of range");
    return taylor_ref(i, (x - center_) / scale_);
}

double TaylorBasis1D::derivative(int i, double x) const {
    if (i < 0 || i > degree_) throw ConfigError("TaylorBasis1D::derivative: index out of range");
    return taylor_ref_deriv(i, (x - center_) / scale_) / scale_;
}

double taylor_ref(int i, double xi) {
    double p = 1.0;
    for (int k = 1; k <= i; ++k) p *= xi / k;
    return p;
}

double taylor_ref_deriv(int i, double xi) {
    if (i == 0) return 0.0;
    return taylor_ref(i - 1, xi);
}

int space_time_mode_count(int degree) {
    return (degree + 1) * (degree + 2) / 2;
}

const std::vector<SpaceTimeMode>& space_time_modes(int degree) {
    if (degree < 0 || degree > kMaxDegree) throw ConfigError("space_time_modes: bad degree");
    // The enumeration is prefix-closed: the degree-p list is the head of
    // every higher-degree list.
    static std::vector<std::vector<SpaceTimeMode>> per_degree;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<SpaceTimeMode> all;
        all.reserve(space_time_mode_count(kMaxDegree));
        for (int d = 0; d <= kMaxDegree; ++d)
            for (int i = 0; i <= d; ++i) all.push_back({i, d - i});
        per_degree.resize(kMaxDegree + 1);
        for (int d = 0; d <= kMaxDegree; ++d)
            per_degree[d].assign(all.begin(), all.begin() + space_time_mode_count(d));
    });
    return per_degree[degree];
}

SpatialPoly SpatialPoly::zero(int degree, int components) {
    SpatialPoly p;
    p.degree = degree;
    p.components = components;
    p.coeffs.assign(static_cast<size_t>(degree + 1) * components, 0.0);
    return p;
}

SpatialPoly SpatialPoly::constant(std::span<const double> state) {
    SpatialPoly p = zero(0, static_cast<int>(state.size()));
    for (int q = 0; q < p.components; ++q) p.at(0, q) = state[q];
    return p;
}

double SpatialPoly::value_ref(int q, double xi) const {
    double acc = 0.0;
    for (int i = 0; i <= degree; ++i) acc += at(i, q) * taylor_ref(i, xi);
    return acc;
}

double SpatialPoly::deriv_ref(int q, double xi) const {
    double acc = 0.0;
    for (int i = 1; i <= degree; ++i) acc += at(i, q) * taylor_ref(i - 1, xi);
    return acc;
}

double SpatialPoly::cell_mean(int q) const {
    double acc = 0.0;
    for (int i = 0; i <= degree; ++i) acc += at(i, q) * taylor_moment(i);
    return acc;
}

SpaceTimeCoeffs SpaceTimeCoeffs::zero(int degree, int components) {
    SpaceTimeCoeffs c;
    c.degree = degree;
    c.components = components;
    c.values.assign(static_cast<size_t>(space_time_mode_count(degree)) * components, 0.0);
    return c;
}

SpaceTimeCoeffs SpaceTimeCoeffs::constant(std::span<const double> state) {
    SpaceTimeCoeffs c = zero(0, static_cast<int>(state.size()));
    for (int q = 0; q < c.components; ++q) c.at(0, q) = state[q];
    return c;
}

SpaceTimeCoeffs SpaceTimeCoeffs::from_spatial(const SpatialPoly& poly) {
    SpaceTimeCoeffs c = zero(poly.degree, poly.components);
    const auto& modes = space_time_modes(poly.degree);
    for (int l = 0; l < c.size(); ++l) {
        if (modes[l].time != 0) continue;
        for (int q = 0; q < c.components; ++q) c.at(l, q) = poly.at(modes[l].space, q);
    }
    return c;
}

double SpaceTimeCoeffs::value_ref(int q, double xi, double eta) const {
    const auto& modes = space_time_modes(degree);
    double acc = 0.0;
    for (int l = 0; l < size(); ++l)
        acc += at(l, q) * taylor_ref(modes[l].space, xi) * taylor_ref(modes[l].time, eta);
    return acc;
}

void SpaceTimeCoeffs::state_ref(double xi, double eta, std::span<double> out) const {
    const auto& modes = space_time_modes(degree);
    for (int q = 0; q < components; ++q) out[q] = 0.0;
    for (int l = 0; l < size(); ++l) {
        const double b = taylor_ref(modes[l].space, xi) * taylor_ref(modes[l].time, eta);
        for (int q = 0; q < components; ++q) out[q] += at(l, q) * b;
    }
}

double SpaceTimeCoeffs::deriv_xi_ref(int q, double xi, double eta) const {
    const auto& modes = space_time_modes(degree);
    double acc = 0.0;
    for (int l = 0; l < size(); ++l)
        acc += at(l, q) * taylor_ref_deriv(modes[l].space, xi) * taylor_ref(modes[l].time, eta);
    return acc;
}

bool SpaceTimeCoeffs::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

SpaceTimeCoeffs embed_coeffs(const SpaceTimeCoeffs& src, int dst_degree) {
    if (dst_degree < src.degree)
        throw ConfigError("embed_coeffs: destination degree below source degree");
    if (dst_degree == src.degree) return src;
    SpaceTimeCoeffs dst = SpaceTimeCoeffs::zero(dst_degree, src.components);
    // Prefix property of the enumeration: the first L(src) modes coincide.
    std::copy(src.values.begin(), src.values.end(), dst.values.begin());
    return dst;
}

SpatialPoly spatial_slice(const SpaceTimeCoeffs& coeffs, double eta, int spatial_degree) {
    SpatialPoly out = SpatialPoly::zero(spatial_degree, coeffs.components);
    const auto& modes = space_time_modes(coeffs.degree);
    for (int l = 0; l < coeffs.size(); ++l) {
        const auto& m = modes[l];
        if (m.space > spatial_degree) continue;
        const double t = taylor_ref(m.time, eta);
        for (int q = 0; q < coeffs.components; ++q) out.at(m.space, q) += coeffs.at(l, q) * t;
    }
    return out;
}

double taylor_pair_moment(int a, int b) {
    if ((a + b) % 2 == 1) return 0.0;
    const int s = a + b;
    return 2.0 / (factorial(a) * factorial(b) * (s + 1) * std::pow(2.0, s + 1));
}

double taylor_moment(int i) {
    return taylor_pair_moment(i, 0);
}

}  // namespace ader
