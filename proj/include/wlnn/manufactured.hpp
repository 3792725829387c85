#pragma once

#include <array>

#include "wlnn/rng.hpp"
#include "wlnn/solver.hpp"

namespace wlnn {

/// Traveling Gaussian u(x,t) = A exp(-((x + k t)/sigma)^2) used to
/// manufacture exact solutions of u_t + (gamma_flux u^2)_x = g.
struct Gaussian1D {
    double A, k, sigma;
};

/// u(x,y,z,t) = A exp(-((x+k1 t)^2 + (y+k2 t)^2 + (z+k3 t)^2) / sigma^2).
struct Gaussian3D {
    double A, k1, k2, k3, sigma;
};

struct ScalarPointEval {
    double u;
    double du_dt;
    double g;  // forcing that makes the Gaussian exact: u_t + sum_a d f(u)/d x_a
};

double gaussian1d_value(const Gaussian1D& s, double x, double t);
double gaussian3d_value(const Gaussian3D& s, double x, double y, double z, double t);

/// Closed-form value, time derivative, and forcing for flux f = gamma_flux u^2.
ScalarPointEval eval_gaussian1d(const Gaussian1D& s, double x, double t, double flux_coeff = 1.0);
ScalarPointEval eval_gaussian3d(const Gaussian3D& s, double x, double y, double z, double t,
                                double flux_coeff = 1.0);

// Parameter families and their sampling ranges.
// 1D: A ~ U[0.5,1), k ~ U[0,0.5), sigma ~ U[0.2,0.3).
Gaussian1D sample_gaussian1d(Rng& rng);
// 3D: A ~ U[0.5,1), k_i ~ U[0,0.5), sigma ~ U[0.2,0.3).
Gaussian3D sample_gaussian3d(Rng& rng);
// Vortex: x_vc, y_vc ~ U[4,6), u0, v0 ~ U[-1,1), beta ~ U[2,5).
VortexParams sample_vortex(Rng& rng);

} // namespace wlnn
