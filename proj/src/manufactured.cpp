#include "wlnn/manufactured.hpp"

#include <cmath>

namespace wlnn {

double gaussian1d_value(const Gaussian1D& s, double x, double t) {
    const double r = (x + s.k * t) / s.sigma;
    return s.A * std::exp(-r * r);
}

ScalarPointEval eval_gaussian1d(const Gaussian1D& s, double x, double t, double flux_coeff) {
    const double xi = x + s.k * t;
    const double u = s.A * std::exp(-(xi / s.sigma) * (xi / s.sigma));
    const double du_dx = u * (-2.0 * xi / (s.sigma * s.sigma));
    const double du_dt = s.k * du_dx;
    // g = u_t + d(flux_coeff u^2)/dx = u_t + 2 flux_coeff u u_x.
    return {u, du_dt, du_dt + 2.0 * flux_coeff * u * du_dx};
}

double gaussian3d_value(const Gaussian3D& s, double x, double y, double z, double t) {
    const double xi = x + s.k1 * t, yi = y + s.k2 * t, zi = z + s.k3 * t;
    return s.A * std::exp(-(xi * xi + yi * yi + zi * zi) / (s.sigma * s.sigma));
}

ScalarPointEval eval_gaussian3d(const Gaussian3D& s, double x, double y, double z, double t,
                                double flux_coeff) {
    const double xi = x + s.k1 * t, yi = y + s.k2 * t, zi = z + s.k3 * t;
    const double is2 = 1.0 / (s.sigma * s.sigma);
    const double u = s.A * std::exp(-(xi * xi + yi * yi + zi * zi) * is2);
    const double ux = u * (-2.0 * xi * is2);
    const double uy = u * (-2.0 * yi * is2);
    const double uz = u * (-2.0 * zi * is2);
    const double du_dt = s.k1 * ux + s.k2 * uy + s.k3 * uz;
    return {u, du_dt, du_dt + 2.0 * flux_coeff * u * (ux + uy + uz)};
}

Gaussian1D sample_gaussian1d(Rng& rng) {
    Gaussian1D s;
    s.A = rng.uniform(0.5, 1.0);
    s.k = rng.uniform(0.0, 0.5);
    s.sigma = rng.uniform(0.2, 0.3);
    return s;
}

Gaussian3D sample_gaussian3d(Rng& rng) {
    Gaussian3D s;
    s.A = rng.uniform(0.5, 1.0);
    s.k1 = rng.uniform(0.0, 0.5);
    s.k2 = rng.uniform(0.0, 0.5);
    s.k3 = rng.uniform(0.0, 0.5);
    s.sigma = rng.uniform(0.2, 0.3);
    return s;
}

VortexParams sample_vortex(Rng& rng) {
    VortexParams p;
    p.x_vc = rng.uniform(4.0, 6.0);
    p.y_vc = rng.uniform(4.0, 6.0);
    p.u0 = rng.uniform(-1.0, 1.0);
    p.v0 = rng.uniform(-1.0, 1.0);
    p.beta = rng.uniform(2.0, 5.0);
    return p;
}

} // namespace wlnn
