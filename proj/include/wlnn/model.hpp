#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlnn/rng.hpp"
#include "wlnn/schemes.hpp"

namespace wlnn {

/// Particular solution plus null-space basis of the two consistency
/// constraints. Any output of the hard-constraint layer
///   w = w_star + V s
/// satisfies both constraints exactly, for every s in R^4.
struct ConstraintBasis {
    Vector6d w_star;                  // CE6 weights
    Eigen::Matrix<double, 6, 4> v;    // orthonormal null-space basis, columns v_1..v_4
};

/// w_star = CE6; v = modified Gram-Schmidt of an analytic spanning set of
/// the null space of [[1,1,1,1,1,1], [-5,-3,-1,1,3,5]].
ConstraintBasis build_constraint_basis();

/// Dense tanh network mapping a normalized 6-point stencil to the four free
/// parameters s of the hard-constraint layer. Hidden layers use tanh, the
/// output layer is linear.
struct MlpModel {
    std::vector<int> layer_sizes;           // {6, 50, 50, 4}
    std::vector<Eigen::MatrixXd> weights;   // weights[l]: sizes[l+1] x sizes[l]
    std::vector<Eigen::VectorXd> biases;

    int n_layers() const { return static_cast<int>(weights.size()); }
    std::size_t parameter_count() const;
    void check_shapes() const;
};

/// Glorot-uniform hidden layers, zero biases, zero output layer: an
/// untrained model emits s = 0 and therefore reproduces the CE6 scheme.
MlpModel init_model(const std::vector<int>& layer_sizes, Rng& rng);
inline MlpModel init_model(Rng& rng) { return init_model({6, 50, 50, 4}, rng); }

/// Min-max normalization of a stencil onto [0, 1]; a flat stencil (range
/// below 1e-300) maps to all ones. Invariant under f -> a f + b for a > 0.
std::array<double, 6> normalize_stencil(std::span<const double, 6> f);

/// Activations captured by a batched forward pass, consumed by backward.
struct ForwardCache {
    Eigen::MatrixXd x0;                 // normalized inputs, 6 x B
    std::vector<Eigen::MatrixXd> act;   // hidden activations a_1..a_{L-1}
    Eigen::MatrixXd s;                  // network output, 4 x B
};

/// Batched forward: one raw 6-point stencil per column, one weight set per
/// column out. Pass a cache to retain activations for backward.
void forward_batch(const MlpModel& model, const ConstraintBasis& basis,
                   const Matrix6Xd& raw_stencils, Matrix6Xd& weights_out,
                   ForwardCache* cache = nullptr);

StencilWeights forward(const MlpModel& model, const ConstraintBasis& basis,
                       std::span<const double, 6> f_stencil);

/// Gradient (or any moment) matching the model's parameter shapes.
struct ParamGrads {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;

    static ParamGrads zeros_like(const MlpModel& model);
    void add(const ParamGrads& other);
    void scale(double a);
};

/// Accumulates d(loss)/d(parameters) into `grads` given d(loss)/d(output
/// weights) per column. Stencil inputs are data, not parameters: nothing is
/// propagated into them.
void backward_batch(const MlpModel& model, const ConstraintBasis& basis,
                    const ForwardCache& cache, const Matrix6Xd& dloss_dweights,
                    ParamGrads& grads);

ParamGrads backward(const MlpModel& model, const ConstraintBasis& basis,
                    std::span<const double, 6> f_stencil,
                    std::span<const double, 6> dloss_dweights);

/// Adam moments plus the exponentially decaying learning-rate schedule
/// eta(epoch) = lr0 * lr_decay^epoch.
struct AdamState {
    ParamGrads m;
    ParamGrads v;
    long t = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double lr0 = 1e-3;
    double lr_decay = 0.99;

    static AdamState init(const MlpModel& model);
    double learning_rate(int epoch) const;
};

void adam_step(MlpModel& model, AdamState& state, const ParamGrads& grads, int epoch);

/// Plain-text model file, versioned:
///   wlnn-model v1 layers=6,50,50,4
///   w_star line, v_1..v_4 lines, then per layer each matrix row and the
///   bias, 17 significant digits, space separated.
void save_model(const MlpModel& model, const ConstraintBasis& basis, const std::string& path);
std::pair<MlpModel, ConstraintBasis> load_model(const std::string& path);

} // namespace wlnn
