#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wlnn/errors.hpp"

namespace wlnn {

/// Uniform structured grid in 1-3 dimensions. Cell centers sit at
/// x_j = lower + (j + 1/2) dx along each axis; unused axes have n = 1.
/// Storage order of any field on the grid is x fastest, z slowest:
/// index = i + n_x * (j + n_y * k).
struct UniformGrid {
    int dim = 1;
    std::array<double, 3> lower{0.0, 0.0, 0.0};
    std::array<double, 3> upper{1.0, 1.0, 1.0};
    std::array<int, 3> n{1, 1, 1};
    std::array<double, 3> dx{1.0, 1.0, 1.0};

    std::int64_t cell_count() const {
        return static_cast<std::int64_t>(n[0]) * n[1] * n[2];
    }
    double center(int axis, std::int64_t i) const {
        return lower[axis] + (static_cast<double>(i) + 0.5) * dx[axis];
    }
    std::int64_t index(std::int64_t i, std::int64_t j = 0, std::int64_t k = 0) const {
        return i + static_cast<std::int64_t>(n[0]) * (j + static_cast<std::int64_t>(n[1]) * k);
    }
    double min_dx() const;

    bool operator==(const UniformGrid&) const = default;
};

UniformGrid build_grid(int dim, std::span<const double> lower,
                       std::span<const double> upper, std::span<const int> n_cells);

/// One real value per cell of a UniformGrid.
struct ScalarField {
    UniformGrid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const UniformGrid& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.cell_count()), fill) {}
};

/// Root-mean-square difference over cells: sqrt(mean (a - b)^2).
/// Fields must live on the same grid.
double l2_error(const ScalarField& a, const ScalarField& b);

double field_mean(const ScalarField& f);

/// Block-averages `fine` onto a coarse grid spanning the same domain;
/// every axis resolution must be divisible by `factor`.
ScalarField downsample_block_average(const ScalarField& fine, int factor);

/// Same block averaging on a raw component array over `grid` (used for
/// multi-component states).
std::vector<double> downsample_block_average(const UniformGrid& fine, std::span<const double> values,
                                             int factor, UniformGrid& coarse_out);

/// Field dump: "# grid dim=<d> n=<n1,..> domain=<l1:u1,..>" followed by one
/// CSV row per cell in storage order, cell-center coordinates first, then
/// one value per component, 17 significant digits.
void write_field_csv(std::ostream& os, const UniformGrid& grid,
                     std::span<const std::vector<double>* const> components);
void write_field_csv(const std::string& path, const UniformGrid& grid,
                     std::span<const std::vector<double>* const> components);

} // namespace wlnn
