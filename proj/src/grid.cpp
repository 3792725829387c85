#include "wlnn/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wlnn/textio.hpp"

namespace wlnn {

double UniformGrid::min_dx() const {
    double m = dx[0];
    for (int a = 1; a < dim; ++a) m = std::min(m, dx[a]);
    return m;
}

UniformGrid build_grid(int dim, std::span<const double> lower,
                       std::span<const double> upper, std::span<const int> n_cells) {
    if (dim < 1 || dim > 3)
        throw ConfigError("grid dim must be 1, 2 or 3");
    if (lower.size() < static_cast<std::size_t>(dim) ||
        upper.size() < static_cast<std::size_t>(dim) ||
        n_cells.size() < static_cast<std::size_t>(dim))
        throw ConfigError("grid spec shorter than dim");

    UniformGrid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        if (upper[a] <= lower[a])
            throw ConfigError("degenerate domain on axis " + std::to_string(a));
        if (n_cells[a] < 1)
            throw ConfigError("n_cells must be >= 1 on axis " + std::to_string(a));
        g.lower[a] = lower[a];
        g.upper[a] = upper[a];
        g.n[a] = n_cells[a];
        g.dx[a] = (upper[a] - lower[a]) / n_cells[a];
    }
    for (int a = dim; a < 3; ++a) {
        g.lower[a] = 0.0;
        g.upper[a] = 0.0;
        g.n[a] = 1;
        g.dx[a] = 1.0;
    }
    return g;
}

double l2_error(const ScalarField& a, const ScalarField& b) {
    if (!(a.grid == b.grid))
        throw ConfigError("l2_error requires fields on the same grid");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        double d = a.values[i] - b.values[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.values.size()));
}

double field_mean(const ScalarField& f) {
    double acc = 0.0;
    for (double v : f.values) acc += v;
    return acc / static_cast<double>(f.values.size());
}

std::vector<double> downsample_block_average(const UniformGrid& fine, std::span<const double> values,
                                             int factor, UniformGrid& coarse_out) {
    if (factor < 1) throw ConfigError("downsample factor must be >= 1");
    std::array<int, 3> cn{1, 1, 1};
    for (int a = 0; a < fine.dim; ++a) {
        if (fine.n[a] % factor != 0)
            throw ConfigError("resolution not divisible by downsample factor on axis " +
                              std::to_string(a));
        cn[a] = fine.n[a] / factor;
    }
    coarse_out = build_grid(fine.dim,
                            std::span<const double>(fine.lower.data(), 3),
                            std::span<const double>(fine.upper.data(), 3),
                            std::span<const int>(cn.data(), 3));

    std::vector<double> out(static_cast<std::size_t>(coarse_out.cell_count()), 0.0);
    const int fy = fine.dim >= 2 ? factor : 1;
    const int fz = fine.dim >= 3 ? factor : 1;
    const double block = static_cast<double>(factor) * fy * fz;
    for (std::int64_t k = 0; k < coarse_out.n[2]; ++k)
        for (std::int64_t j = 0; j < coarse_out.n[1]; ++j)
            for (std::int64_t i = 0; i < coarse_out.n[0]; ++i) {
                double acc = 0.0;
                for (int dk = 0; dk < fz; ++dk)
                    for (int dj = 0; dj < fy; ++dj)
                        for (int di = 0; di < factor; ++di)
                            acc += values[static_cast<std::size_t>(
                                fine.index(i * factor + di, j * fy + dj, k * fz + dk))];
                out[static_cast<std::size_t>(coarse_out.index(i, j, k))] = acc / block;
            }
    return out;
}

ScalarField downsample_block_average(const ScalarField& fine, int factor) {
    ScalarField coarse;
    coarse.values = downsample_block_average(fine.grid, fine.values, factor, coarse.grid);
    return coarse;
}

void write_field_csv(std::ostream& os, const UniformGrid& grid,
                     std::span<const std::vector<double>* const> components) {
    os << "# grid dim=" << grid.dim << " n=";
    for (int a = 0; a < grid.dim; ++a) os << (a ? "," : "") << grid.n[a];
    os << " domain=";
    for (int a = 0; a < grid.dim; ++a)
        os << (a ? "," : "") << fmt_g17(grid.lower[a]) << ':' << fmt_g17(grid.upper[a]);
    os << '\n';
    for (std::int64_t k = 0; k < grid.n[2]; ++k)
        for (std::int64_t j = 0; j < grid.n[1]; ++j)
            for (std::int64_t i = 0; i < grid.n[0]; ++i) {
                const std::int64_t idx = grid.index(i, j, k);
                os << fmt_g17(grid.center(0, i));
                if (grid.dim >= 2) os << ',' << fmt_g17(grid.center(1, j));
                if (grid.dim >= 3) os << ',' << fmt_g17(grid.center(2, k));
                for (const auto* c : components)
                    os << ',' << fmt_g17((*c)[static_cast<std::size_t>(idx)]);
                os << '\n';
            }
}

void write_field_csv(const std::string& path, const UniformGrid& grid,
                     std::span<const std::vector<double>* const> components) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_field_csv(f, grid, components);
}

} // namespace wlnn
