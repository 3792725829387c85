#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "wlnn/errors.hpp"

namespace wlnn {

using Matrix6Xd = Eigen::Matrix<double, 6, Eigen::Dynamic>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Six interface-reconstruction weights over the cells i-2..i+3 of the
/// interface i+1/2. Consistent weight sets satisfy
///   w1+w2+w3+w4+w5+w6 = 1   and   -5w1-3w2-w3+w4+3w5+5w6 = 0,
/// which makes the reconstruction exact on constants and on linear data.
struct StencilWeights {
    std::array<double, 6> w{};
};

StencilWeights ce6_weights();
StencilWeights up5_weights();

/// sum w_l (consistent: 1).
double consistency_sum(const StencilWeights& sw);
/// -5w1 - 3w2 - w3 + w4 + 3w5 + 5w6 (consistent: 0).
double consistency_moment(const StencilWeights& sw);

constexpr double kSumTol = 1e-12;
constexpr double kMomentTol = 1e-11;

enum class Orientation { Plus, Minus };

/// Interface value from a 6-point stencil ordered as cells i-2..i+3.
/// Plus applies the weights directly; Minus mirrors the stencil first, which
/// is how the same weight set reconstructs the negative split flux.
double reconstruct_interface(const StencilWeights& sw, std::span<const double, 6> f_stencil,
                             Orientation dir);

/// Local Lax-Friedrichs splitting of one stencil: f_pm = (f +- alpha u) / 2.
struct SplitFluxStencil {
    std::array<double, 6> plus{};
    std::array<double, 6> minus{};
    double alpha = 0.0;
};

SplitFluxStencil llf_split(std::span<const double, 6> f_values,
                           std::span<const double, 6> u_values, double alpha);

/// max |dfdu(u_j)| over the six stencil cells.
double local_alpha_scalar(std::span<const double, 6> u_stencil,
                          const std::function<double(double)>& dfdu);

/// WENO5-JS interface value from five upwind-ordered flux values
/// (Plus: cells i-2..i+2; Minus: pass cells i-1..i+3, mirrored internally).
/// Jiang-Shu smoothness indicators with eps = 1e-6, p = 2.
double weno5js_interface(std::span<const double, 5> f_stencil, Orientation dir);

/// A reconstruction scheme evaluated per interface. `stencils` holds one
/// 6-point column per query; minus-orientation columns are passed already
/// mirrored, so every column is reconstructed with the plus formula. Batched
/// queries exist so the learned scheme can amortize network evaluation; the
/// result per column never depends on the rest of the batch.
class FluxScheme {
public:
    virtual ~FluxScheme() = default;
    virtual const std::string& name() const = 0;
    virtual void interface_values(const Matrix6Xd& stencils, Eigen::VectorXd& out) const = 0;

    double interface_value(std::span<const double, 6> stencil) const;
};

/// Scheme registry. Keys: "ce6", "up5", "weno5js", "wlnn:<model-file>".
std::shared_ptr<const FluxScheme> make_scheme(const std::string& key);

/// Fixed-weight scheme (CE6, UP5, or any consistent weight set).
std::shared_ptr<const FluxScheme> make_linear_scheme(const std::string& name,
                                                     const StencilWeights& sw);

} // namespace wlnn
