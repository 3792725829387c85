#pragma once

#include <span>
#include <string>
#include <vector>

#include "wlnn/grid.hpp"
#include "wlnn/manufactured.hpp"
#include "wlnn/schemes.hpp"
#include "wlnn/solver.hpp"

namespace wlnn {

enum class DatasetKind { Scalar1D, Scalar3D, Euler2D, Euler3D };

std::string dataset_kind_name(DatasetKind k);
DatasetKind dataset_kind_from_name(const std::string& name);

/// One snapshot paired with its residual target.
/// Scalar kinds: `snapshot` covers the grid plus 3 ghost layers per side
/// (ghosts hold the exact solution, matching the Dirichlet solve), `target`
/// is the analytic du/dt on interior cells and `forcing` the analytic g.
/// Euler kinds: `snapshot` is the unpadded periodic conserved state and
/// `target` the downsampled reference-scheme right side; no forcing.
struct TrainingSample {
    int lambda_id = 0;
    double time = 0.0;
    std::vector<double> snapshot;
    std::vector<double> target;
    std::vector<double> forcing;
};

struct Dataset {
    DatasetKind kind = DatasetKind::Scalar1D;
    UniformGrid grid;      // interior (coarse) grid
    int pad = 0;           // 3 for scalar kinds, 0 for euler kinds
    int ncomp = 1;
    double gamma = 1.4;      // euler kinds
    double flux_coeff = 1.0; // scalar kinds: f = flux_coeff * u^2
    int n_lambda = 0;
    std::vector<TrainingSample> samples;

    bool is_scalar() const {
        return kind == DatasetKind::Scalar1D || kind == DatasetKind::Scalar3D;
    }
    std::int64_t padded_cells() const;
    std::vector<int> samples_of_lambda(int lambda_id) const;
};

/// Snapshots at t_n = n T / n_times, n = 1..n_times, for every parameter set.
Dataset build_dataset_scalar1d(std::span<const Gaussian1D> lambdas, const UniformGrid& grid,
                               int n_times, double t_final);
Dataset build_dataset_scalar3d(std::span<const Gaussian3D> lambdas, const UniformGrid& grid,
                               int n_times, double t_final);

/// Solves each vortex on the fine grid with WENO5-JS + TVD-RK3, records the
/// conserved state and the instantaneous semi-discrete right side at the
/// snapshot times, and block-averages both onto the coarse grid.
Dataset build_dataset_euler2d(std::span<const VortexParams> lambdas, int fine_n, int factor,
                              std::span<const double> times, double gamma, double cfl);

/// Same recipe for the (parameter-free) Taylor-Green vortex.
Dataset build_dataset_euler3d(int fine_n, int factor, std::span<const double> times, double gamma,
                              double cfl);

/// Line-oriented dataset file:
///   wlnn-dataset v1 kind=<...> grid=<dim>:<n,..>:<lo:hi,..> times=<t1,..>
///     lambdas=<N> pad=<p> ncomp=<c> gamma=<g> flux=<coeff>
/// then per sample "sample <lambda_id> <time>" followed by snapshot, target
/// and (scalar kinds) forcing values in storage order.
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

} // namespace wlnn
