#include "wlnn/schemes.hpp"

#include <cmath>

#include "wlnn/model.hpp"

namespace wlnn {

StencilWeights ce6_weights() {
    return {{1.0 / 60.0, -8.0 / 60.0, 37.0 / 60.0, 37.0 / 60.0, -8.0 / 60.0, 1.0 / 60.0}};
}

StencilWeights up5_weights() {
    return {{1.0 / 30.0, -13.0 / 60.0, 47.0 / 60.0, 9.0 / 20.0, -1.0 / 20.0, 0.0}};
}

double consistency_sum(const StencilWeights& sw) {
    const auto& w = sw.w;
    return w[0] + w[1] + w[2] + w[3] + w[4] + w[5];
}

double consistency_moment(const StencilWeights& sw) {
    const auto& w = sw.w;
    return -5.0 * w[0] - 3.0 * w[1] - w[2] + w[3] + 3.0 * w[4] + 5.0 * w[5];
}

double reconstruct_interface(const StencilWeights& sw, std::span<const double, 6> f,
                             Orientation dir) {
    const auto& w = sw.w;
    if (dir == Orientation::Plus)
        return w[0] * f[0] + w[1] * f[1] + w[2] * f[2] + w[3] * f[3] + w[4] * f[4] + w[5] * f[5];
    return w[0] * f[5] + w[1] * f[4] + w[2] * f[3] + w[3] * f[2] + w[4] * f[1] + w[5] * f[0];
}

SplitFluxStencil llf_split(std::span<const double, 6> f_values,
                           std::span<const double, 6> u_values, double alpha) {
    if (!(alpha >= 0.0))
        throw ConfigError("llf_split requires alpha >= 0");
    SplitFluxStencil s;
    s.alpha = alpha;
    for (int i = 0; i < 6; ++i) {
        s.plus[i] = 0.5 * (f_values[i] + alpha * u_values[i]);
        s.minus[i] = 0.5 * (f_values[i] - alpha * u_values[i]);
    }
    return s;
}

double local_alpha_scalar(std::span<const double, 6> u_stencil,
                          const std::function<double(double)>& dfdu) {
    double a = 0.0;
    for (double u : u_stencil) a = std::max(a, std::abs(dfdu(u)));
    return a;
}

namespace {

constexpr double kWenoEps = 1e-6;

// Jiang-Shu WENO5 on five upwind-ordered values f[0..4] = cells i-2..i+2.
inline double weno5js_core(const double* f) {
    const double q0 = (2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0;
    const double q1 = (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0;
    const double q2 = (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0;

    const double d01 = f[0] - 2.0 * f[1] + f[2];
    const double d12 = f[1] - 2.0 * f[2] + f[3];
    const double d23 = f[2] - 2.0 * f[3] + f[4];
    const double b0 = (13.0 / 12.0) * d01 * d01 +
                      0.25 * (f[0] - 4.0 * f[1] + 3.0 * f[2]) * (f[0] - 4.0 * f[1] + 3.0 * f[2]);
    const double b1 = (13.0 / 12.0) * d12 * d12 + 0.25 * (f[1] - f[3]) * (f[1] - f[3]);
    const double b2 = (13.0 / 12.0) * d23 * d23 +
                      0.25 * (3.0 * f[2] - 4.0 * f[3] + f[4]) * (3.0 * f[2] - 4.0 * f[3] + f[4]);

    const double a0 = 0.1 / ((kWenoEps + b0) * (kWenoEps + b0));
    const double a1 = 0.6 / ((kWenoEps + b1) * (kWenoEps + b1));
    const double a2 = 0.3 / ((kWenoEps + b2) * (kWenoEps + b2));
    const double inv = 1.0 / (a0 + a1 + a2);
    return inv * (a0 * q0 + a1 * q1 + a2 * q2);
}

} // namespace

double weno5js_interface(std::span<const double, 5> f_stencil, Orientation dir) {
    if (dir == Orientation::Plus) {
        double f[5] = {f_stencil[0], f_stencil[1], f_stencil[2], f_stencil[3], f_stencil[4]};
        return weno5js_core(f);
    }
    double f[5] = {f_stencil[4], f_stencil[3], f_stencil[2], f_stencil[1], f_stencil[0]};
    return weno5js_core(f);
}

double FluxScheme::interface_value(std::span<const double, 6> stencil) const {
    Matrix6Xd m(6, 1);
    for (int i = 0; i < 6; ++i) m(i, 0) = stencil[i];
    Eigen::VectorXd out(1);
    interface_values(m, out);
    return out[0];
}

namespace {

class LinearScheme final : public FluxScheme {
public:
    LinearScheme(std::string name, const StencilWeights& sw) : name_(std::move(name)) {
        for (int i = 0; i < 6; ++i) w_[i] = sw.w[i];
    }
    const std::string& name() const override { return name_; }
    void interface_values(const Matrix6Xd& stencils, Eigen::VectorXd& out) const override {
        out.noalias() = stencils.transpose() * w_;
    }

private:
    std::string name_;
    Vector6d w_;
};

class Weno5Scheme final : public FluxScheme {
public:
    const std::string& name() const override { return name_; }
    // Columns arrive pre-mirrored, so cells i-2..i+2 are always rows 0..4.
    void interface_values(const Matrix6Xd& stencils, Eigen::VectorXd& out) const override {
        const Eigen::Index n = stencils.cols();
        out.resize(n);
        for (Eigen::Index c = 0; c < n; ++c) {
            double f[5] = {stencils(0, c), stencils(1, c), stencils(2, c), stencils(3, c),
                           stencils(4, c)};
            out[c] = weno5js_core(f);
        }
    }

private:
    std::string name_ = "weno5js";
};

class WlnnScheme final : public FluxScheme {
public:
    WlnnScheme(std::string name, MlpModel model, ConstraintBasis basis)
        : name_(std::move(name)), model_(std::move(model)), basis_(basis) {}
    const std::string& name() const override { return name_; }
    void interface_values(const Matrix6Xd& stencils, Eigen::VectorXd& out) const override {
        Matrix6Xd w;
        forward_batch(model_, basis_, stencils, w);
        out = (w.array() * stencils.array()).colwise().sum().transpose();
    }

private:
    std::string name_;
    MlpModel model_;
    ConstraintBasis basis_;
};

} // namespace

std::shared_ptr<const FluxScheme> make_linear_scheme(const std::string& name,
                                                     const StencilWeights& sw) {
    return std::make_shared<LinearScheme>(name, sw);
}

std::shared_ptr<const FluxScheme> make_scheme(const std::string& key) {
    if (key == "ce6") return make_linear_scheme("ce6", ce6_weights());
    if (key == "up5") return make_linear_scheme("up5", up5_weights());
    if (key == "weno5js") return std::make_shared<Weno5Scheme>();
    if (key.rfind("wlnn:", 0) == 0) {
        const std::string path = key.substr(5);
        if (path.empty()) throw ConfigError("scheme 'wlnn:' needs a model file");
        auto [model, basis] = load_model(path);
        return std::make_shared<WlnnScheme>("wlnn", std::move(model), basis);
    }
    throw ConfigError("unknown scheme '" + key + "' (expected ce6, up5, weno5js, wlnn:<file>)");
}

} // namespace wlnn
