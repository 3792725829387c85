#include "wlnn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sweep.hpp"
#include "wlnn/threading.hpp"

namespace wlnn {

FluxDef FluxDef::quadratic(double coeff) {
    return {[coeff](double u) { return coeff * u * u; },
            [coeff](double u) { return 2.0 * coeff * u; }};
}

FluxDef FluxDef::advection(double speed) {
    return {[speed](double u) { return speed * u; }, [speed](double) { return speed; }};
}

GhostSpec GhostSpec::dirichlet(SpaceTimeFn fn) {
    GhostSpec g;
    g.kind = Kind::DirichletExact;
    g.exact = std::move(fn);
    if (!g.exact) throw ConfigError("DirichletExact ghosts need an evaluator");
    return g;
}

namespace sweep {

void gather_scalar(const double* upad, int n, const FluxDef& flux, ScalarGather& g) {
    const int np = n + 6;
    g.m = n + 1;
    g.fpad.resize(np);
    g.speed.resize(np);
    g.alpha.resize(g.m);
    g.cols.resize(6, 2 * g.m);

    for (int p = 0; p < np; ++p) {
        g.fpad[p] = flux.f(upad[p]);
        g.speed[p] = std::abs(flux.dfdu(upad[p]));
    }
    for (int e = 0; e < g.m; ++e) {
        double a = g.speed[e];
        for (int r = 1; r < 6; ++r) a = std::max(a, g.speed[e + r]);
        g.alpha[e] = a;
        for (int r = 0; r < 6; ++r) {
            g.cols(r, e) = 0.5 * (g.fpad[e + r] + a * upad[e + r]);
            g.cols(r, g.m + e) = 0.5 * (g.fpad[e + 5 - r] - a * upad[e + 5 - r]);
        }
    }
}

void gather_euler(const double* const* comp_pads, int ncomp, int n, int axis, double gamma,
                  EulerGather& g) {
    const int np = n + 6;
    const int dim = ncomp - 2;
    g.m = n + 1;
    g.ncomp = ncomp;
    g.rho.resize(np);
    for (int a = 0; a < 3; ++a) g.vel[a].assign(np, 0.0);
    g.pres.resize(np);
    g.snd.resize(np);
    g.fpad.resize(static_cast<std::size_t>(ncomp) * np);
    g.alpha.resize(g.m);
    g.cols.resize(6, 2 * g.m * ncomp);

    for (int p = 0; p < np; ++p) {
        const double rho = comp_pads[0][p];
        if (!(rho > 0.0)) throw NumericalError("nonpositive density in stencil", p - 3);
        double ke = 0.0;
        for (int a = 0; a < dim; ++a) {
            const double v = comp_pads[1 + a][p] / rho;
            g.vel[a][p] = v;
            ke += v * v;
        }
        const double E = comp_pads[ncomp - 1][p];
        const double pres = (gamma - 1.0) * (E - 0.5 * rho * ke);
        if (!(pres > 0.0)) throw NumericalError("nonpositive pressure in stencil", p - 3);
        g.rho[p] = rho;
        g.pres[p] = pres;
        g.snd[p] = std::sqrt(gamma * pres / rho);

        // Axis flux: [rho va, rho vb va + p delta_ab ..., va (E + p)].
        const double va = g.vel[axis][p];
        double* f = g.fpad.data();
        f[p] = rho * va;
        for (int b = 0; b < dim; ++b)
            f[static_cast<std::size_t>(1 + b) * np + p] =
                rho * g.vel[b][p] * va + (b == axis ? pres : 0.0);
        f[static_cast<std::size_t>(ncomp - 1) * np + p] = va * (E + pres);
    }

    for (int e = 0; e < g.m; ++e) {
        double a = 0.0;
        for (int r = 0; r < 6; ++r)
            a = std::max(a, std::abs(g.vel[axis][e + r]) + g.snd[e + r]);
        g.alpha[e] = a;
        for (int c = 0; c < ncomp; ++c) {
            const double* f = g.fpad.data() + static_cast<std::size_t>(c) * np;
            const double* u = comp_pads[c];
            const int base = c * 2 * g.m;
            for (int r = 0; r < 6; ++r) {
                g.cols(r, base + e) = 0.5 * (f[e + r] + a * u[e + r]);
                g.cols(r, base + g.m + e) = 0.5 * (f[e + 5 - r] - a * u[e + 5 - r]);
            }
        }
    }
}

void combine_interface_values(const Eigen::VectorXd& vals, int block_offset, int m, double* fhat) {
    for (int e = 0; e < m; ++e) {
        const double v = vals[block_offset + e] + vals[block_offset + m + e];
        if (std::isnan(v)) throw NumericalError("NaN in interface reconstruction", e);
        fhat[e] = v;
    }
}

} // namespace sweep

namespace {

struct AxisIter {
    std::int64_t stride;
    int n;
    int b1, b2;          // orthogonal axes
    std::int64_t count;  // pencil count
};

AxisIter axis_iter(const UniformGrid& grid, int axis) {
    AxisIter it;
    it.n = grid.n[axis];
    it.stride = 1;
    for (int a = 0; a < axis; ++a) it.stride *= grid.n[a];
    it.b1 = axis == 0 ? 1 : 0;
    it.b2 = axis == 2 ? 1 : 2;
    if (it.b2 == it.b1) it.b2 = 2;
    it.count = static_cast<std::int64_t>(grid.n[it.b1]) * grid.n[it.b2];
    return it;
}

std::int64_t pencil_base(const UniformGrid& grid, const AxisIter& it, std::int64_t pencil) {
    const std::int64_t o1 = pencil % grid.n[it.b1];
    const std::int64_t o2 = pencil / grid.n[it.b1];
    std::array<std::int64_t, 3> idx{0, 0, 0};
    idx[it.b1] = o1;
    idx[it.b2] = o2;
    return grid.index(idx[0], idx[1], idx[2]);
}

} // namespace

void rhs_scalar(const ScalarField& u, const FluxScheme& scheme, const FluxDef& flux,
                const SpaceTimeFn& forcing, const GhostSpec& ghost, double t, ScalarField& out) {
    const UniformGrid& grid = u.grid;
    if (ghost.kind == GhostSpec::Kind::DirichletExact && !ghost.exact)
        throw ConfigError("DirichletExact ghosts need an evaluator");
    out.grid = grid;
    out.values.assign(u.values.size(), 0.0);

    for (int axis = 0; axis < grid.dim; ++axis) {
        const AxisIter it = axis_iter(grid, axis);
        const double inv_dx = 1.0 / grid.dx[axis];
        parallel_for(it.count, [&](std::int64_t pencil) {
            thread_local sweep::ScalarGather gather;
            thread_local std::vector<double> upad, fhat;
            thread_local Eigen::VectorXd vals;
            const int n = it.n;
            upad.resize(n + 6);
            fhat.resize(n + 1);

            const std::int64_t base = pencil_base(grid, it, pencil);
            if (ghost.kind == GhostSpec::Kind::Periodic) {
                sweep::fill_pencil_periodic(u.values.data() + base, it.stride, n, 3, upad.data());
            } else {
                const std::int64_t o1 = pencil % grid.n[it.b1];
                const std::int64_t o2 = pencil / grid.n[it.b1];
                std::array<double, 3> x{0.0, 0.0, 0.0};
                x[it.b1] = grid.center(it.b1, o1);
                x[it.b2] = grid.center(it.b2, o2);
                for (int p = 0; p < n + 6; ++p) {
                    const int c = p - 3;
                    if (c >= 0 && c < n) {
                        upad[p] = u.values[base + static_cast<std::int64_t>(c) * it.stride];
                    } else {
                        x[axis] = grid.center(axis, c);
                        upad[p] = ghost.exact(x, t);
                    }
                }
            }

            sweep::gather_scalar(upad.data(), n, flux, gather);
            scheme.interface_values(gather.cols, vals);
            sweep::combine_interface_values(vals, 0, gather.m, fhat.data());
            for (int i = 0; i < n; ++i)
                out.values[base + static_cast<std::int64_t>(i) * it.stride] -=
                    (fhat[i + 1] - fhat[i]) * inv_dx;
        });
    }

    if (forcing) {
        for (std::int64_t k = 0; k < grid.n[2]; ++k)
            for (std::int64_t j = 0; j < grid.n[1]; ++j)
                for (std::int64_t i = 0; i < grid.n[0]; ++i) {
                    std::array<double, 3> x{grid.center(0, i),
                                            grid.dim >= 2 ? grid.center(1, j) : 0.0,
                                            grid.dim >= 3 ? grid.center(2, k) : 0.0};
                    out.values[grid.index(i, j, k)] += forcing(x, t);
                }
    }
}

EulerState EulerState::zeros(const UniformGrid& grid, double gamma) {
    EulerState s;
    s.grid = grid;
    s.gamma = gamma;
    s.ncomp = grid.dim + 2;
    s.data.assign(static_cast<std::size_t>(s.ncomp) * grid.cell_count(), 0.0);
    return s;
}

void EulerState::check_positivity() const {
    const std::int64_t n = cells();
    const double* rho = component(0);
    const double* E = component(energy_index());
    for (std::int64_t i = 0; i < n; ++i) {
        if (!(rho[i] > 0.0)) throw NumericalError("nonpositive density", i);
        double ke = 0.0;
        for (int a = 0; a < grid.dim; ++a) {
            const double m = component(1 + a)[i];
            ke += m * m;
        }
        const double p = (gamma - 1.0) * (E[i] - 0.5 * ke / rho[i]);
        if (!(p > 0.0)) throw NumericalError("nonpositive pressure", i);
    }
}

void rhs_euler(const EulerState& state, const FluxScheme& scheme, std::vector<double>& out) {
    const UniformGrid& grid = state.grid;
    const int ncomp = state.ncomp;
    const std::int64_t cells = state.cells();
    out.assign(static_cast<std::size_t>(ncomp) * cells, 0.0);

    for (int axis = 0; axis < grid.dim; ++axis) {
        const AxisIter it = axis_iter(grid, axis);
        const double inv_dx = 1.0 / grid.dx[axis];
        parallel_for(it.count, [&](std::int64_t pencil) {
            thread_local sweep::EulerGather gather;
            thread_local std::vector<std::vector<double>> pads;
            thread_local std::vector<const double*> pad_ptrs;
            thread_local std::vector<double> fhat;
            thread_local Eigen::VectorXd vals;

            const int n = it.n;
            pads.resize(ncomp);
            pad_ptrs.resize(ncomp);
            fhat.resize(n + 1);
            const std::int64_t base = pencil_base(grid, it, pencil);
            for (int c = 0; c < ncomp; ++c) {
                pads[c].resize(n + 6);
                sweep::fill_pencil_periodic(state.component(c) + base, it.stride, n, 3,
                                            pads[c].data());
                pad_ptrs[c] = pads[c].data();
            }

            sweep::gather_euler(pad_ptrs.data(), ncomp, n, axis, state.gamma, gather);
            scheme.interface_values(gather.cols, vals);
            for (int c = 0; c < ncomp; ++c) {
                sweep::combine_interface_values(vals, c * 2 * gather.m, gather.m, fhat.data());
                double* o = out.data() + static_cast<std::size_t>(c) * cells + base;
                for (int i = 0; i < n; ++i)
                    o[static_cast<std::int64_t>(i) * it.stride] -= (fhat[i + 1] - fhat[i]) * inv_dx;
            }
        });
    }
}

void tvd_rk3_step(std::vector<double>& y, double t, double dt, const FlatRhsFn& rhs) {
    const std::size_t n = y.size();
    std::vector<double> r(n), u1(n), u2(n);

    rhs(y, t, r);
    for (std::size_t i = 0; i < n; ++i) u1[i] = y[i] + dt * r[i];

    rhs(u1, t + dt, r);
    for (std::size_t i = 0; i < n; ++i) u2[i] = 0.25 * (3.0 * y[i] + u1[i] + dt * r[i]);

    rhs(u2, t + 0.5 * dt, r);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = (y[i] + 2.0 * u2[i] + 2.0 * dt * r[i]) / 3.0;
}

AdvanceStats advance_flat(std::vector<double>& y, double t0, double t_end, double cfl,
                          double min_dx, const FlatRhsFn& rhs,
                          const std::function<double(const std::vector<double>&)>& max_wave_speed,
                          std::span<const double> snapshot_times,
                          const std::function<void(double, const std::vector<double>&)>& observer) {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (t_end < t0) throw ConfigError("t_end before t0");

    std::vector<double> snaps(snapshot_times.begin(), snapshot_times.end());
    std::sort(snaps.begin(), snaps.end());

    AdvanceStats stats;
    double t = t0;
    std::size_t si = 0;
    const auto near = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    while (si < snaps.size() && snaps[si] < t0 && !near(snaps[si], t0)) ++si;
    if (si < snaps.size() && near(snaps[si], t0)) {
        if (observer) observer(t0, y);
        ++si;
    }

    while (t < t_end && !near(t, t_end)) {
        double target = t_end;
        if (si < snaps.size() && (snaps[si] < t_end || near(snaps[si], t_end)))
            target = std::min(snaps[si], t_end);

        const double speed = max_wave_speed(y);
        double dt = speed > 1e-300 ? cfl * min_dx / speed : target - t;
        double t_next;
        if (t + dt >= target || near(t + dt, target)) {
            dt = target - t;
            t_next = target;  // land exactly on snapshots and on t_end
        } else {
            t_next = t + dt;
        }

        tvd_rk3_step(y, t, dt, rhs);
        ++stats.steps;
        t = t_next;

        for (double v : y)
            if (!std::isfinite(v))
                throw NumericalError("solution lost finiteness at t = " + std::to_string(t));

        if (si < snaps.size() && near(snaps[si], t)) {
            if (observer) observer(t, y);
            ++si;
        }
    }
    return stats;
}

double max_wave_speed_scalar(const ScalarField& u, const FluxDef& flux) {
    double s = 0.0;
    for (double v : u.values) s = std::max(s, std::abs(flux.dfdu(v)));
    return s;
}

double max_wave_speed_euler(const EulerState& state) {
    const std::int64_t n = state.cells();
    const double* rho = state.component(0);
    const double* E = state.component(state.energy_index());
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        double ke = 0.0, vmax = 0.0;
        for (int a = 0; a < state.grid.dim; ++a) {
            const double v = state.component(1 + a)[i] / rho[i];
            ke += v * v;
            vmax = std::max(vmax, std::abs(v));
        }
        const double p = (state.gamma - 1.0) * (E[i] - 0.5 * rho[i] * ke);
        if (!(rho[i] > 0.0) || !(p > 0.0)) throw NumericalError("nonpositive state", i);
        s = std::max(s, vmax + std::sqrt(state.gamma * p / rho[i]));
    }
    return s;
}

AdvanceStats advance_scalar(ScalarField& u, const FluxScheme& scheme, const FluxDef& flux,
                            const SpaceTimeFn& forcing, const GhostSpec& ghost, double t0,
                            double t_end, double cfl, std::span<const double> snapshot_times,
                            const std::function<void(double, const ScalarField&)>& observer) {
    ScalarField scratch(u.grid), rhs_out(u.grid);
    FlatRhsFn rhs = [&](const std::vector<double>& y, double t, std::vector<double>& out) {
        scratch.values = y;
        rhs_scalar(scratch, scheme, flux, forcing, ghost, t, rhs_out);
        out = rhs_out.values;
    };
    auto speed = [&](const std::vector<double>& y) {
        scratch.values = y;
        return max_wave_speed_scalar(scratch, flux);
    };
    auto obs = [&](double t, const std::vector<double>& y) {
        if (!observer) return;
        scratch.values = y;
        observer(t, scratch);
    };
    return advance_flat(u.values, t0, t_end, cfl, u.grid.min_dx(), rhs, speed, snapshot_times,
                        obs);
}

AdvanceStats advance_euler(EulerState& state, const FluxScheme& scheme, double t0, double t_end,
                           double cfl, std::span<const double> snapshot_times,
                           const std::function<void(double, const EulerState&)>& observer) {
    EulerState scratch = state;
    FlatRhsFn rhs = [&](const std::vector<double>& y, double, std::vector<double>& out) {
        scratch.data = y;
        rhs_euler(scratch, scheme, out);
    };
    auto speed = [&](const std::vector<double>& y) {
        scratch.data = y;
        return max_wave_speed_euler(scratch);
    };
    auto obs = [&](double t, const std::vector<double>& y) {
        if (!observer) return;
        scratch.data = y;
        observer(t, scratch);
    };
    return advance_flat(state.data, t0, t_end, cfl, state.grid.min_dx(), rhs, speed,
                        snapshot_times, obs);
}

double kinetic_energy(const EulerState& state) {
    const std::int64_t n = state.cells();
    const double* rho = state.component(0);
    double acc = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        double m2 = 0.0;
        for (int a = 0; a < state.grid.dim; ++a) {
            const double m = state.component(1 + a)[i];
            m2 += m * m;
        }
        const double term = 0.5 * m2 / rho[i] - comp;
        const double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    return acc / static_cast<double>(n);
}

namespace {

// 6th-order central first derivative with periodic wrap along `axis`.
std::vector<double> deriv6_periodic(const UniformGrid& grid, const double* v, int axis) {
    const std::int64_t nx = grid.n[0], ny = grid.n[1], nz = grid.n[2];
    std::vector<double> out(static_cast<std::size_t>(grid.cell_count()));
    const double inv = 1.0 / (60.0 * grid.dx[axis]);
    const int n = grid.n[axis];
    auto wrap = [n](std::int64_t i) {
        i %= n;
        return i < 0 ? i + n : i;
    };
    for (std::int64_t k = 0; k < nz; ++k)
        for (std::int64_t j = 0; j < ny; ++j)
            for (std::int64_t i = 0; i < nx; ++i) {
                std::array<std::int64_t, 3> c{i, j, k};
                auto at = [&](std::int64_t off) {
                    auto cc = c;
                    cc[axis] = wrap(cc[axis] + off);
                    return v[grid.index(cc[0], cc[1], cc[2])];
                };
                out[grid.index(i, j, k)] = (45.0 * (at(1) - at(-1)) - 9.0 * (at(2) - at(-2)) +
                                            (at(3) - at(-3))) * inv;
            }
    return out;
}

} // namespace

double enstrophy(const EulerState& state) {
    if (state.grid.dim != 3) throw ConfigError("enstrophy requires a 3D state");
    const std::int64_t n = state.cells();
    const double* rho = state.component(0);
    std::vector<double> vel[3];
    for (int a = 0; a < 3; ++a) {
        vel[a].resize(static_cast<std::size_t>(n));
        const double* m = state.component(1 + a);
        for (std::int64_t i = 0; i < n; ++i) vel[a][i] = m[i] / rho[i];
    }
    const auto dw_dy = deriv6_periodic(state.grid, vel[2].data(), 1);
    const auto dv_dz = deriv6_periodic(state.grid, vel[1].data(), 2);
    const auto du_dz = deriv6_periodic(state.grid, vel[0].data(), 2);
    const auto dw_dx = deriv6_periodic(state.grid, vel[2].data(), 0);
    const auto dv_dx = deriv6_periodic(state.grid, vel[1].data(), 0);
    const auto du_dy = deriv6_periodic(state.grid, vel[0].data(), 1);

    double acc = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double wx = dw_dy[i] - dv_dz[i];
        const double wy = du_dz[i] - dw_dx[i];
        const double wz = dv_dx[i] - du_dy[i];
        const double term = 0.5 * rho[i] * (wx * wx + wy * wy + wz * wz) - comp;
        const double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    return acc / static_cast<double>(n);
}

double component_total(const EulerState& state, int c) {
    const double* v = state.component(c);
    double acc = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < state.cells(); ++i) {
        const double term = v[i] - comp;
        const double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    return acc;
}

double field_total(const ScalarField& u) {
    double acc = 0.0, comp = 0.0;
    for (double v : u.values) {
        const double term = v - comp;
        const double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    return acc;
}

ScalarField component_field(const EulerState& state, int c) {
    ScalarField f(state.grid);
    const double* v = state.component(c);
    std::copy(v, v + state.cells(), f.values.begin());
    return f;
}

namespace {

struct VortexPrim {
    double rho, u, v, p;
};

VortexPrim vortex_primitives(double x, double y, const VortexParams& par, double gamma,
                             double t, double lx, double ly) {
    // Nearest periodic image of the advected vortex center.
    auto wrap = [](double d, double L) {
        d = std::fmod(d, L);
        if (d < -0.5 * L) d += L;
        if (d >= 0.5 * L) d -= L;
        return d;
    };
    const double xb = wrap(x - par.x_vc - par.u0 * t, lx);
    const double yb = wrap(y - par.y_vc - par.v0 * t, ly);
    const double r2 = xb * xb + yb * yb;
    const double pi = std::numbers::pi;
    const double e1 = std::exp(1.0 - r2);
    VortexPrim prim;
    prim.rho = std::pow(1.0 - (gamma - 1.0) * par.beta * par.beta / (8.0 * gamma * pi * pi) * e1,
                        1.0 / (gamma - 1.0));
    const double swirl = par.beta / (2.0 * pi) * std::exp(0.5 * (1.0 - r2));
    prim.u = par.u0 - swirl * yb;
    prim.v = par.v0 + swirl * xb;
    prim.p = std::pow(prim.rho, gamma);
    return prim;
}

} // namespace

EulerState init_isentropic_vortex(const UniformGrid& grid, const VortexParams& p, double gamma) {
    if (grid.dim != 2) throw ConfigError("isentropic vortex requires a 2D grid");
    EulerState s = EulerState::zeros(grid, gamma);
    const double lx = grid.upper[0] - grid.lower[0];
    const double ly = grid.upper[1] - grid.lower[1];
    for (std::int64_t j = 0; j < grid.n[1]; ++j)
        for (std::int64_t i = 0; i < grid.n[0]; ++i) {
            const auto prim =
                vortex_primitives(grid.center(0, i), grid.center(1, j), p, gamma, 0.0, lx, ly);
            const std::int64_t idx = grid.index(i, j);
            s.component(0)[idx] = prim.rho;
            s.component(1)[idx] = prim.rho * prim.u;
            s.component(2)[idx] = prim.rho * prim.v;
            s.component(3)[idx] =
                prim.p / (gamma - 1.0) + 0.5 * prim.rho * (prim.u * prim.u + prim.v * prim.v);
        }
    return s;
}

ScalarField vortex_exact_density(const UniformGrid& grid, const VortexParams& p, double gamma,
                                 double t) {
    ScalarField f(grid);
    const double lx = grid.upper[0] - grid.lower[0];
    const double ly = grid.upper[1] - grid.lower[1];
    for (std::int64_t j = 0; j < grid.n[1]; ++j)
        for (std::int64_t i = 0; i < grid.n[0]; ++i)
            f.values[grid.index(i, j)] =
                vortex_primitives(grid.center(0, i), grid.center(1, j), p, gamma, t, lx, ly).rho;
    return f;
}

EulerState init_taylor_green(const UniformGrid& grid, double gamma) {
    if (grid.dim != 3) throw ConfigError("Taylor-Green vortex requires a 3D grid");
    EulerState s = EulerState::zeros(grid, gamma);
    for (std::int64_t k = 0; k < grid.n[2]; ++k)
        for (std::int64_t j = 0; j < grid.n[1]; ++j)
            for (std::int64_t i = 0; i < grid.n[0]; ++i) {
                const double x = grid.center(0, i);
                const double y = grid.center(1, j);
                const double z = grid.center(2, k);
                const double u = std::sin(x) * std::cos(y) * std::cos(z);
                const double v = -std::cos(x) * std::sin(y) * std::cos(z);
                const double p =
                    100.0 +
                    ((std::cos(2.0 * x) + std::cos(2.0 * y)) * (std::cos(2.0 * z) + 2.0) - 2.0) /
                        16.0;
                const std::int64_t idx = grid.index(i, j, k);
                s.component(0)[idx] = 1.0;
                s.component(1)[idx] = u;
                s.component(2)[idx] = v;
                s.component(3)[idx] = 0.0;
                s.component(4)[idx] = p / (gamma - 1.0) + 0.5 * (u * u + v * v);
            }
    return s;
}

} // namespace wlnn
