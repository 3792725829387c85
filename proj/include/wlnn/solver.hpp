#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wlnn/grid.hpp"
#include "wlnn/schemes.hpp"

namespace wlnn {

/// Scalar flux f(u) with its derivative, used for LLF splitting.
struct FluxDef {
    std::function<double(double)> f;
    std::function<double(double)> dfdu;

    /// f(u) = coeff * u^2.
    static FluxDef quadratic(double coeff);
    /// f(u) = speed * u.
    static FluxDef advection(double speed);
};

using SpaceTimeFn = std::function<double(const std::array<double, 3>&, double)>;

/// Ghost-cell policy, width 3 (a 6-point interface stencil needs three ghost
/// layers per side). DirichletExact fills ghosts by evaluating `exact` at
/// ghost-cell centers at the current stage time.
struct GhostSpec {
    enum class Kind { Periodic, DirichletExact };
    Kind kind = Kind::Periodic;
    SpaceTimeFn exact;

    static constexpr int width = 3;
    static GhostSpec periodic() { return {}; }
    static GhostSpec dirichlet(SpaceTimeFn fn);
};

/// Semi-discrete right side of u_t + sum_axes d f(u) / d x_a = g:
/// out_i = -(fhat_{i+1/2} - fhat_{i-1/2}) / dx (+ g(x_i, t)), with LLF
/// splitting and per-interface alpha over the six stencil cells.
void rhs_scalar(const ScalarField& u, const FluxScheme& scheme, const FluxDef& flux,
                const SpaceTimeFn& forcing, const GhostSpec& ghost, double t, ScalarField& out);

/// Conserved compressible-flow state on a periodic uniform grid.
/// Components are stored contiguously per component:
/// 2D: rho, rho u, rho v, E; 3D: rho, rho u, rho v, rho w, E.
struct EulerState {
    UniformGrid grid;
    double gamma = 1.4;
    int ncomp = 0;
    std::vector<double> data;

    static EulerState zeros(const UniformGrid& grid, double gamma = 1.4);

    std::int64_t cells() const { return grid.cell_count(); }
    double* component(int c) { return data.data() + static_cast<std::size_t>(c) * cells(); }
    const double* component(int c) const {
        return data.data() + static_cast<std::size_t>(c) * cells();
    }
    int energy_index() const { return ncomp - 1; }

    /// Throws NumericalError naming the first offending cell if density or
    /// pressure is nonpositive anywhere.
    void check_positivity() const;
};

/// Componentwise dimension-by-dimension right side of U_t + div F = 0 with
/// periodic ghosts; one LLF alpha per axis per interface,
/// alpha = max(|v_axis| + c) over the six stencil cells.
void rhs_euler(const EulerState& state, const FluxScheme& scheme, std::vector<double>& out);

using FlatRhsFn = std::function<void(const std::vector<double>&, double, std::vector<double>&)>;

/// One third-order TVD Runge-Kutta step on flat storage:
///   U1 = U + dt R(U),  U2 = (3U + U1 + dt R(U1))/4,
///   U_next = (U + 2 U2 + 2 dt R(U2))/3.
void tvd_rk3_step(std::vector<double>& y, double t, double dt, const FlatRhsFn& rhs);

struct AdvanceStats {
    long steps = 0;
};

/// CFL-driven time loop: dt = cfl * min(dx) / max_wave_speed, clipped to hit
/// every snapshot time and t_end exactly; observer fires at t0 (if listed),
/// each snapshot, and t_end.
AdvanceStats advance_flat(std::vector<double>& y, double t0, double t_end, double cfl,
                          double min_dx, const FlatRhsFn& rhs,
                          const std::function<double(const std::vector<double>&)>& max_wave_speed,
                          std::span<const double> snapshot_times,
                          const std::function<void(double, const std::vector<double>&)>& observer);

AdvanceStats advance_scalar(ScalarField& u, const FluxScheme& scheme, const FluxDef& flux,
                            const SpaceTimeFn& forcing, const GhostSpec& ghost, double t0,
                            double t_end, double cfl, std::span<const double> snapshot_times,
                            const std::function<void(double, const ScalarField&)>& observer);

AdvanceStats advance_euler(EulerState& state, const FluxScheme& scheme, double t0, double t_end,
                           double cfl, std::span<const double> snapshot_times,
                           const std::function<void(double, const EulerState&)>& observer);

/// Global wave-speed bounds used for dt selection.
double max_wave_speed_scalar(const ScalarField& u, const FluxDef& flux);
double max_wave_speed_euler(const EulerState& state);

// Diagnostics ---------------------------------------------------------------

/// Mean over cells of rho |v|^2 / 2.
double kinetic_energy(const EulerState& state);

/// Mean over cells of rho |curl v|^2 / 2, vorticity by 6th-order central
/// differences with periodic wrap (3D only).
double enstrophy(const EulerState& state);

/// Sum of one conserved component over cells (for conservation audits).
double component_total(const EulerState& state, int c);
double field_total(const ScalarField& u);

ScalarField component_field(const EulerState& state, int c);

// Model problems -------------------------------------------------------------

struct VortexParams {
    double x_vc, y_vc;  // initial vortex center
    double u0, v0;      // free-stream velocity
    double beta;        // vortex strength
};

/// Isentropic vortex in a periodic box:
/// rho = [1 - (gamma-1) beta^2 / (8 gamma pi^2) e^{1-r^2}]^{1/(gamma-1)},
/// (u,v) = (u0,v0) + beta/(2 pi) e^{(1-r^2)/2} (-ybar, xbar), p = rho^gamma.
EulerState init_isentropic_vortex(const UniformGrid& grid, const VortexParams& p, double gamma);

/// Exact density at time t: the initial field advected by (u0, v0) with
/// periodic wrap (nearest periodic image of the moving center).
ScalarField vortex_exact_density(const UniformGrid& grid, const VortexParams& p, double gamma,
                                 double t);

/// Inviscid Taylor-Green vortex on [0, 2pi]^3: rho = 1,
/// u = sin x cos y cos z, v = -cos x sin y cos z, w = 0,
/// p = 100 + ([cos 2x + cos 2y][cos 2z + 2] - 2)/16.
EulerState init_taylor_green(const UniformGrid& grid, double gamma);

} // namespace wlnn
