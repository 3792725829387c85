#include "wlnn/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wlnn/textio.hpp"
#include "wlnn/threading.hpp"

namespace wlnn {

std::string dataset_kind_name(DatasetKind k) {
    switch (k) {
        case DatasetKind::Scalar1D: return "scalar1d";
        case DatasetKind::Scalar3D: return "scalar3d";
        case DatasetKind::Euler2D: return "euler2d";
        case DatasetKind::Euler3D: return "euler3d";
    }
    throw ConfigError("bad dataset kind");
}

DatasetKind dataset_kind_from_name(const std::string& name) {
    if (name == "scalar1d") return DatasetKind::Scalar1D;
    if (name == "scalar3d") return DatasetKind::Scalar3D;
    if (name == "euler2d") return DatasetKind::Euler2D;
    if (name == "euler3d") return DatasetKind::Euler3D;
    throw ConfigError("unknown dataset kind '" + name + "'");
}

std::int64_t Dataset::padded_cells() const {
    std::int64_t c = 1;
    for (int a = 0; a < grid.dim; ++a) c *= grid.n[a] + 2 * pad;
    return c;
}

std::vector<int> Dataset::samples_of_lambda(int lambda_id) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (samples[i].lambda_id == lambda_id) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

std::vector<double> snapshot_times_uniform(int n_times, double t_final) {
    if (n_times < 1) throw ConfigError("n_times must be >= 1");
    std::vector<double> t(static_cast<std::size_t>(n_times));
    for (int n = 1; n <= n_times; ++n) t[n - 1] = t_final * n / n_times;
    return t;
}

} // namespace

Dataset build_dataset_scalar1d(std::span<const Gaussian1D> lambdas, const UniformGrid& grid,
                               int n_times, double t_final) {
    if (grid.dim != 1) throw ConfigError("scalar1d dataset needs a 1D grid");
    Dataset ds;
    ds.kind = DatasetKind::Scalar1D;
    ds.grid = grid;
    ds.pad = 3;
    ds.ncomp = 1;
    ds.n_lambda = static_cast<int>(lambdas.size());
    const auto times = snapshot_times_uniform(n_times, t_final);

    const int n = grid.n[0];
    ds.samples.resize(lambdas.size() * times.size());
    parallel_for(static_cast<std::int64_t>(lambdas.size()), [&](std::int64_t li) {
        const Gaussian1D& lam = lambdas[static_cast<std::size_t>(li)];
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            const double t = times[ti];
            TrainingSample& s = ds.samples[static_cast<std::size_t>(li) * times.size() + ti];
            s.lambda_id = static_cast<int>(li);
            s.time = t;
            s.snapshot.resize(static_cast<std::size_t>(n) + 6);
            s.target.resize(static_cast<std::size_t>(n));
            s.forcing.resize(static_cast<std::size_t>(n));
            for (int p = 0; p < n + 6; ++p)
                s.snapshot[p] = gaussian1d_value(lam, grid.center(0, p - 3), t);
            for (int i = 0; i < n; ++i) {
                const auto ev = eval_gaussian1d(lam, grid.center(0, i), t);
                s.target[i] = ev.du_dt;
                s.forcing[i] = ev.g;
            }
        }
    });
    return ds;
}

Dataset build_dataset_scalar3d(std::span<const Gaussian3D> lambdas, const UniformGrid& grid,
                               int n_times, double t_final) {
    if (grid.dim != 3) throw ConfigError("scalar3d dataset needs a 3D grid");
    Dataset ds;
    ds.kind = DatasetKind::Scalar3D;
    ds.grid = grid;
    ds.pad = 3;
    ds.ncomp = 1;
    ds.n_lambda = static_cast<int>(lambdas.size());
    const auto times = snapshot_times_uniform(n_times, t_final);

    const std::int64_t np0 = grid.n[0] + 6, np1 = grid.n[1] + 6, np2 = grid.n[2] + 6;
    ds.samples.resize(lambdas.size() * times.size());
    parallel_for(static_cast<std::int64_t>(lambdas.size()), [&](std::int64_t li) {
        const Gaussian3D& lam = lambdas[static_cast<std::size_t>(li)];
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            const double t = times[ti];
            TrainingSample& s = ds.samples[static_cast<std::size_t>(li) * times.size() + ti];
            s.lambda_id = static_cast<int>(li);
            s.time = t;
            s.snapshot.resize(static_cast<std::size_t>(np0 * np1 * np2));
            s.target.resize(static_cast<std::size_t>(grid.cell_count()));
            s.forcing.resize(static_cast<std::size_t>(grid.cell_count()));
            for (std::int64_t k = 0; k < np2; ++k)
                for (std::int64_t j = 0; j < np1; ++j)
                    for (std::int64_t i = 0; i < np0; ++i)
                        s.snapshot[i + np0 * (j + np1 * k)] =
                            gaussian3d_value(lam, grid.center(0, i - 3), grid.center(1, j - 3),
                                             grid.center(2, k - 3), t);
            for (std::int64_t k = 0; k < grid.n[2]; ++k)
                for (std::int64_t j = 0; j < grid.n[1]; ++j)
                    for (std::int64_t i = 0; i < grid.n[0]; ++i) {
                        const auto ev = eval_gaussian3d(lam, grid.center(0, i), grid.center(1, j),
                                                        grid.center(2, k), t);
                        s.target[grid.index(i, j, k)] = ev.du_dt;
                        s.forcing[grid.index(i, j, k)] = ev.g;
                    }
        }
    });
    return ds;
}

namespace {

/// Runs one fine-grid reference solve and appends the downsampled snapshots.
void record_reference_run(EulerState fine, std::span<const double> times, int factor,
                          int lambda_id, double cfl, Dataset& ds) {
    auto weno = make_scheme("weno5js");
    std::vector<double> rhs_flat;
    const int ncomp = fine.ncomp;

    auto observer = [&](double t, const EulerState& st) {
        rhs_euler(st, *weno, rhs_flat);
        TrainingSample s;
        s.lambda_id = lambda_id;
        s.time = t;
        UniformGrid coarse;
        for (int c = 0; c < ncomp; ++c) {
            auto uc = downsample_block_average(
                st.grid, std::span<const double>(st.component(c), st.cells()), factor, coarse);
            auto rc = downsample_block_average(
                st.grid,
                std::span<const double>(rhs_flat.data() + static_cast<std::size_t>(c) * st.cells(),
                                        st.cells()),
                factor, coarse);
            s.snapshot.insert(s.snapshot.end(), uc.begin(), uc.end());
            s.target.insert(s.target.end(), rc.begin(), rc.end());
        }
        if (ds.samples.empty()) ds.grid = coarse;
        ds.samples.push_back(std::move(s));
    };

    const double t_end = times.empty() ? 0.0 : times.back();
    advance_euler(fine, *weno, 0.0, t_end, cfl, times, observer);
}

} // namespace

Dataset build_dataset_euler2d(std::span<const VortexParams> lambdas, int fine_n, int factor,
                              std::span<const double> times, double gamma, double cfl) {
    if (fine_n % factor != 0) throw ConfigError("fine_n must be divisible by the coarse factor");
    Dataset ds;
    ds.kind = DatasetKind::Euler2D;
    ds.pad = 0;
    ds.ncomp = 4;
    ds.gamma = gamma;
    ds.n_lambda = static_cast<int>(lambdas.size());

    const double lo[2] = {0.0, 0.0}, hi[2] = {10.0, 10.0};
    const int nn[2] = {fine_n, fine_n};
    const UniformGrid fine_grid = build_grid(2, lo, hi, nn);

    // Each vortex produces an independent reference solve; merge in order.
    std::vector<Dataset> parts(lambdas.size());
    parallel_for(static_cast<std::int64_t>(lambdas.size()), [&](std::int64_t li) {
        Dataset part;
        part.ncomp = 4;
        EulerState fine = init_isentropic_vortex(fine_grid, lambdas[static_cast<std::size_t>(li)],
                                                 gamma);
        record_reference_run(std::move(fine), times, factor, static_cast<int>(li), cfl, part);
        parts[static_cast<std::size_t>(li)] = std::move(part);
    });
    for (auto& part : parts) {
        if (ds.samples.empty() && !part.samples.empty()) ds.grid = part.grid;
        for (auto& s : part.samples) ds.samples.push_back(std::move(s));
    }
    return ds;
}

Dataset build_dataset_euler3d(int fine_n, int factor, std::span<const double> times, double gamma,
                              double cfl) {
    if (fine_n % factor != 0) throw ConfigError("fine_n must be divisible by the coarse factor");
    Dataset ds;
    ds.kind = DatasetKind::Euler3D;
    ds.pad = 0;
    ds.ncomp = 5;
    ds.gamma = gamma;
    ds.n_lambda = 1;

    const double two_pi = 2.0 * 3.14159265358979323846;
    const double lo[3] = {0.0, 0.0, 0.0}, hi[3] = {two_pi, two_pi, two_pi};
    const int nn[3] = {fine_n, fine_n, fine_n};
    EulerState fine = init_taylor_green(build_grid(3, lo, hi, nn), gamma);
    record_reference_run(std::move(fine), times, factor, 0, cfl, ds);
    return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");

    f << "wlnn-dataset v1 kind=" << dataset_kind_name(ds.kind) << " grid=" << ds.grid.dim << ':';
    for (int a = 0; a < ds.grid.dim; ++a) f << (a ? "," : "") << ds.grid.n[a];
    f << ':';
    for (int a = 0; a < ds.grid.dim; ++a)
        f << (a ? "," : "") << fmt_g17(ds.grid.lower[a]) << ':' << fmt_g17(ds.grid.upper[a]);
    f << " times=";
    std::vector<double> times;
    for (const auto& s : ds.samples)
        if (std::find(times.begin(), times.end(), s.time) == times.end()) times.push_back(s.time);
    for (std::size_t i = 0; i < times.size(); ++i) f << (i ? "," : "") << fmt_g17(times[i]);
    f << " lambdas=" << ds.n_lambda << " pad=" << ds.pad << " ncomp=" << ds.ncomp
      << " gamma=" << fmt_g17(ds.gamma) << " flux=" << fmt_g17(ds.flux_coeff) << '\n';

    auto write_block = [&f](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            f << fmt_g17(v[i]);
            f << ((i + 1) % 8 == 0 || i + 1 == v.size() ? '\n' : ' ');
        }
    };
    for (const auto& s : ds.samples) {
        f << "sample " << s.lambda_id << ' ' << fmt_g17(s.time) << '\n';
        write_block(s.snapshot);
        write_block(s.target);
        if (ds.is_scalar()) write_block(s.forcing);
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

Dataset load_dataset(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open dataset file '" + path + "'");
    std::string header;
    if (!std::getline(f, header)) throw IoError("empty dataset file '" + path + "'");
    auto toks = split_ws(header);
    if (toks.size() < 4 || toks[0] != "wlnn-dataset")
        throw IoError("not a wlnn dataset file: '" + path + "'");
    if (toks[1] != "v1") throw IoError("unsupported dataset version '" + toks[1] + "'");

    Dataset ds;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw IoError("bad dataset header token '" + toks[i] + "'");
        const std::string key = toks[i].substr(0, eq), val = toks[i].substr(eq + 1);
        if (key == "kind") {
            ds.kind = dataset_kind_from_name(val);
        } else if (key == "grid") {
            const auto parts = split_char(val, ':');
            if (parts.size() < 2) throw IoError("bad grid spec in dataset header");
            const int dim = static_cast<int>(parse_long(parts[0]));
            const auto ns = split_char(parts[1], ',');
            std::vector<int> n;
            for (const auto& s : ns) n.push_back(static_cast<int>(parse_long(s)));
            // bounds tokens contain ':' themselves; rejoin the remainder
            std::string rest;
            for (std::size_t p = 2; p < parts.size(); ++p) rest += (p > 2 ? ":" : "") + parts[p];
            std::vector<double> lo, hi;
            for (const auto& pair : split_char(rest, ',')) {
                const auto lh = split_char(pair, ':');
                if (lh.size() != 2) throw IoError("bad domain spec in dataset header");
                lo.push_back(parse_double(lh[0]));
                hi.push_back(parse_double(lh[1]));
            }
            ds.grid = build_grid(dim, lo, hi, n);
        } else if (key == "lambdas") {
            ds.n_lambda = static_cast<int>(parse_long(val));
        } else if (key == "pad") {
            ds.pad = static_cast<int>(parse_long(val));
        } else if (key == "ncomp") {
            ds.ncomp = static_cast<int>(parse_long(val));
        } else if (key == "gamma") {
            ds.gamma = parse_double(val);
        } else if (key == "flux") {
            ds.flux_coeff = parse_double(val);
        } // times= is informative; sample blocks carry the actual values
    }

    const std::size_t snap_n = static_cast<std::size_t>(ds.padded_cells()) * ds.ncomp;
    const std::size_t targ_n = static_cast<std::size_t>(ds.grid.cell_count()) * ds.ncomp;
    std::string tok;
    while (f >> tok) {
        if (tok != "sample") throw IoError("expected 'sample', got '" + tok + "'");
        TrainingSample s;
        std::string id_tok, t_tok;
        if (!(f >> id_tok >> t_tok)) throw IoError("truncated sample header");
        s.lambda_id = static_cast<int>(parse_long(id_tok));
        s.time = parse_double(t_tok);
        auto read_n = [&](std::vector<double>& v, std::size_t n, const char* what) {
            v.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!(f >> tok)) throw IoError(std::string("dataset truncated in ") + what);
                v[i] = parse_double(tok);
            }
        };
        read_n(s.snapshot, snap_n, "snapshot");
        read_n(s.target, targ_n, "target");
        if (ds.is_scalar()) read_n(s.forcing, targ_n, "forcing");
        ds.samples.push_back(std::move(s));
    }
    if (ds.samples.empty()) throw IoError("dataset file '" + path + "' holds no samples");
    return ds;
}

} // namespace wlnn
