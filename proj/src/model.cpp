#include "wlnn/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wlnn/errors.hpp"
#include "wlnn/textio.hpp"

namespace wlnn {

ConstraintBasis build_constraint_basis() {
    ConstraintBasis b;
    const auto ce6 = ce6_weights();
    for (int i = 0; i < 6; ++i) b.w_star[i] = ce6.w[i];

    // Analytic null-space seeds of [[1,1,1,1,1,1], [-5,-3,-1,1,3,5]]: each
    // sums to zero and has zero first moment about the interface.
    Eigen::Matrix<double, 6, 4> seed;
    seed.col(0) << 1, -1, -1, 1, 0, 0;
    seed.col(1) << 0, 1, -1, -1, 1, 0;
    seed.col(2) << 0, 0, 1, -1, -1, 1;
    seed.col(3) << 1, -2, 1, 1, -2, 1;

    // Modified Gram-Schmidt, deterministic column order.
    for (int j = 0; j < 4; ++j) {
        Vector6d v = seed.col(j);
        for (int i = 0; i < j; ++i) v -= b.v.col(i).dot(v) * b.v.col(i);
        const double nrm = v.norm();
        if (nrm < 1e-12) throw NumericalError("constraint basis seeds are rank deficient");
        b.v.col(j) = v / nrm;
    }
    return b;
}

std::size_t MlpModel::parameter_count() const {
    std::size_t n = 0;
    for (int l = 0; l < n_layers(); ++l)
        n += static_cast<std::size_t>(weights[l].size()) + static_cast<std::size_t>(biases[l].size());
    return n;
}

void MlpModel::check_shapes() const {
    if (layer_sizes.size() < 2) throw ConfigError("model needs at least two layers");
    if (layer_sizes.front() != 6 || layer_sizes.back() != 4)
        throw ConfigError("model must map 6 inputs to 4 outputs");
    if (weights.size() + 1 != layer_sizes.size() || biases.size() != weights.size())
        throw ConfigError("layer count mismatch");
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].rows() != layer_sizes[l + 1] || weights[l].cols() != layer_sizes[l] ||
            biases[l].size() != layer_sizes[l + 1])
            throw ConfigError("layer " + std::to_string(l) + " has inconsistent shape");
    }
}

MlpModel init_model(const std::vector<int>& layer_sizes, Rng& rng) {
    MlpModel m;
    m.layer_sizes = layer_sizes;
    const int L = static_cast<int>(layer_sizes.size()) - 1;
    for (int l = 0; l < L; ++l) {
        const int fan_in = layer_sizes[l];
        const int fan_out = layer_sizes[l + 1];
        Eigen::MatrixXd w(fan_out, fan_in);
        if (l == L - 1) {
            w.setZero(); // start from the CE6 scheme
        } else {
            const double lim = std::sqrt(6.0 / (fan_in + fan_out));
            for (Eigen::Index r = 0; r < w.rows(); ++r)
                for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = rng.uniform(-lim, lim);
        }
        m.weights.push_back(std::move(w));
        m.biases.push_back(Eigen::VectorXd::Zero(fan_out));
    }
    m.check_shapes();
    return m;
}

std::array<double, 6> normalize_stencil(std::span<const double, 6> f) {
    double lo = f[0], hi = f[0];
    for (int i = 1; i < 6; ++i) {
        lo = std::min(lo, f[i]);
        hi = std::max(hi, f[i]);
    }
    std::array<double, 6> out;
    const double range = hi - lo;
    if (!(range >= 1e-300)) {
        out.fill(1.0);
        return out;
    }
    const double inv = 1.0 / range;
    for (int i = 0; i < 6; ++i) out[i] = (f[i] - lo) * inv;
    return out;
}

namespace {

inline void normalize_columns(const Matrix6Xd& raw, Eigen::MatrixXd& norm) {
    const Eigen::Index n = raw.cols();
    norm.resize(6, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        double lo = raw(0, c), hi = raw(0, c);
        for (int i = 1; i < 6; ++i) {
            lo = std::min(lo, raw(i, c));
            hi = std::max(hi, raw(i, c));
        }
        const double range = hi - lo;
        if (!(range >= 1e-300)) {
            norm.col(c).setOnes();
        } else {
            const double inv = 1.0 / range;
            for (int i = 0; i < 6; ++i) norm(i, c) = (raw(i, c) - lo) * inv;
        }
    }
}

} // namespace

void forward_batch(const MlpModel& model, const ConstraintBasis& basis,
                   const Matrix6Xd& raw_stencils, Matrix6Xd& weights_out, ForwardCache* cache) {
    const int L = model.n_layers();
    ForwardCache local;
    ForwardCache& cc = cache ? *cache : local;

    normalize_columns(raw_stencils, cc.x0);
    cc.act.assign(static_cast<std::size_t>(L - 1), Eigen::MatrixXd());

    const Eigen::MatrixXd* prev = &cc.x0;
    for (int l = 0; l < L - 1; ++l) {
        cc.act[l].noalias() = model.weights[l] * (*prev);
        cc.act[l].colwise() += model.biases[l];
        cc.act[l] = cc.act[l].array().tanh();
        prev = &cc.act[l];
    }
    cc.s.noalias() = model.weights[L - 1] * (*prev);
    cc.s.colwise() += model.biases[L - 1];

    weights_out.resize(6, raw_stencils.cols());
    weights_out.noalias() = basis.v * cc.s;
    weights_out.colwise() += basis.w_star;
}

StencilWeights forward(const MlpModel& model, const ConstraintBasis& basis,
                       std::span<const double, 6> f_stencil) {
    Matrix6Xd in(6, 1);
    for (int i = 0; i < 6; ++i) in(i, 0) = f_stencil[i];
    Matrix6Xd out;
    forward_batch(model, basis, in, out);
    StencilWeights sw;
    for (int i = 0; i < 6; ++i) sw.w[i] = out(i, 0);
    return sw;
}

ParamGrads ParamGrads::zeros_like(const MlpModel& model) {
    ParamGrads g;
    for (int l = 0; l < model.n_layers(); ++l) {
        g.weights.push_back(Eigen::MatrixXd::Zero(model.weights[l].rows(), model.weights[l].cols()));
        g.biases.push_back(Eigen::VectorXd::Zero(model.biases[l].size()));
    }
    return g;
}

void ParamGrads::add(const ParamGrads& other) {
    for (std::size_t l = 0; l < weights.size(); ++l) {
        weights[l] += other.weights[l];
        biases[l] += other.biases[l];
    }
}

void ParamGrads::scale(double a) {
    for (std::size_t l = 0; l < weights.size(); ++l) {
        weights[l] *= a;
        biases[l] *= a;
    }
}

void backward_batch(const MlpModel& model, const ConstraintBasis& basis,
                    const ForwardCache& cache, const Matrix6Xd& dloss_dweights,
                    ParamGrads& grads) {
    const int L = model.n_layers();
    if (dloss_dweights.cols() != cache.s.cols())
        throw ConfigError("backward batch size does not match forward cache");
    if (static_cast<int>(grads.weights.size()) != L)
        throw ConfigError("gradient accumulator shape mismatch");

    // Hard-constraint layer: w = w_star + V s  =>  dL/ds = V^T dL/dw.
    Eigen::MatrixXd delta = basis.v.transpose() * dloss_dweights;

    for (int l = L - 1; l >= 0; --l) {
        const Eigen::MatrixXd& input = l == 0 ? cache.x0 : cache.act[l - 1];
        grads.weights[l].noalias() += delta * input.transpose();
        grads.biases[l] += delta.rowwise().sum();
        if (l > 0) {
            Eigen::MatrixXd up = model.weights[l].transpose() * delta;
            delta = (up.array() * (1.0 - cache.act[l - 1].array().square())).matrix();
        }
    }
}

ParamGrads backward(const MlpModel& model, const ConstraintBasis& basis,
                    std::span<const double, 6> f_stencil,
                    std::span<const double, 6> dloss_dweights) {
    Matrix6Xd in(6, 1), dw(6, 1);
    for (int i = 0; i < 6; ++i) {
        in(i, 0) = f_stencil[i];
        dw(i, 0) = dloss_dweights[i];
    }
    ForwardCache cache;
    Matrix6Xd w_out;
    forward_batch(model, basis, in, w_out, &cache);
    ParamGrads g = ParamGrads::zeros_like(model);
    backward_batch(model, basis, cache, dw, g);
    return g;
}

AdamState AdamState::init(const MlpModel& model) {
    AdamState s;
    s.m = ParamGrads::zeros_like(model);
    s.v = ParamGrads::zeros_like(model);
    return s;
}

double AdamState::learning_rate(int epoch) const {
    return lr0 * std::pow(lr_decay, epoch);
}

void adam_step(MlpModel& model, AdamState& state, const ParamGrads& grads, int epoch) {
    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
    const double lr = state.learning_rate(epoch);

    auto update = [&](auto& theta, auto& m, auto& v, const auto& g) {
        m = state.beta1 * m + (1.0 - state.beta1) * g;
        v = (state.beta2 * v.array() + (1.0 - state.beta2) * g.array().square()).matrix();
        theta.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + state.eps);
    };
    for (int l = 0; l < model.n_layers(); ++l) {
        update(model.weights[l], state.m.weights[l], state.v.weights[l], grads.weights[l]);
        update(model.biases[l], state.m.biases[l], state.v.biases[l], grads.biases[l]);
    }
}

void save_model(const MlpModel& model, const ConstraintBasis& basis, const std::string& path) {
    model.check_shapes();
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");

    f << "wlnn-model v1 layers=";
    for (std::size_t i = 0; i < model.layer_sizes.size(); ++i)
        f << (i ? "," : "") << model.layer_sizes[i];
    f << '\n';

    auto write_row = [&f](const double* p, Eigen::Index n) {
        for (Eigen::Index i = 0; i < n; ++i) f << (i ? " " : "") << fmt_g17(p[i]);
        f << '\n';
    };
    write_row(basis.w_star.data(), 6);
    for (int j = 0; j < 4; ++j) {
        Vector6d col = basis.v.col(j);
        write_row(col.data(), 6);
    }
    for (int l = 0; l < model.n_layers(); ++l) {
        for (Eigen::Index r = 0; r < model.weights[l].rows(); ++r) {
            Eigen::VectorXd row = model.weights[l].row(r);
            write_row(row.data(), row.size());
        }
        write_row(model.biases[l].data(), model.biases[l].size());
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

namespace {

std::vector<double> read_values(std::istream& in, std::size_t n, const std::string& what) {
    std::vector<double> out;
    out.reserve(n);
    std::string tok;
    while (out.size() < n && in >> tok) out.push_back(parse_double(tok));
    if (out.size() < n) throw IoError("model file truncated while reading " + what);
    return out;
}

} // namespace

std::pair<MlpModel, ConstraintBasis> load_model(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open model file '" + path + "'");

    std::string header;
    if (!std::getline(f, header)) throw IoError("empty model file '" + path + "'");
    auto toks = split_ws(header);
    if (toks.size() != 3 || toks[0] != "wlnn-model")
        throw IoError("not a wlnn model file: '" + path + "'");
    if (toks[1] != "v1")
        throw IoError("unsupported model version '" + toks[1] + "' in '" + path + "'");
    if (toks[2].rfind("layers=", 0) != 0) throw IoError("missing layers= in model header");

    std::vector<int> sizes;
    for (const auto& s : split_char(toks[2].substr(7), ','))
        sizes.push_back(static_cast<int>(parse_long(s)));
    if (sizes.size() < 2 || sizes.front() != 6 || sizes.back() != 4)
        throw IoError("model header layers=" + toks[2].substr(7) +
                      " does not describe a 6-to-4 network");

    ConstraintBasis basis;
    auto ws = read_values(f, 6, "w_star");
    for (int i = 0; i < 6; ++i) basis.w_star[i] = ws[i];
    for (int j = 0; j < 4; ++j) {
        auto vj = read_values(f, 6, "basis vector");
        for (int i = 0; i < 6; ++i) basis.v(i, j) = vj[i];
    }

    MlpModel m;
    m.layer_sizes = sizes;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        const int rows = sizes[l + 1], cols = sizes[l];
        Eigen::MatrixXd w(rows, cols);
        for (int r = 0; r < rows; ++r) {
            auto row = read_values(f, static_cast<std::size_t>(cols), "layer matrix row");
            for (int c = 0; c < cols; ++c) w(r, c) = row[c];
        }
        auto b = read_values(f, static_cast<std::size_t>(rows), "layer bias");
        m.weights.push_back(std::move(w));
        m.biases.push_back(Eigen::Map<Eigen::VectorXd>(b.data(), rows));
    }
    m.check_shapes();
    return {std::move(m), basis};
}

} // namespace wlnn
