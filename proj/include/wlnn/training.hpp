#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "wlnn/dataset.hpp"
#include "wlnn/model.hpp"

namespace wlnn {

struct TrainConfig {
    int epochs = 1000;
    double stop_loss = std::numeric_limits<double>::infinity();  // non-finite: never stop early
    int batch_size = 10;  // mini-batch size S, counted in lambda groups
    std::uint64_t seed = 1;
    double lr0 = 1e-3;
    double lr_decay = 0.99;
};

struct TrainResult {
    MlpModel model;
    std::vector<double> loss_history;  // mean squared residual mismatch per epoch
    std::vector<double> lr_history;
    int epochs_run = 0;
    bool stopped_by_loss = false;
    bool diverged = false;  // NaN loss; model holds the last good checkpoint
};

/// Mean squared difference between the network-predicted residual and the
/// stored target over the given samples (all cells, components, samples).
/// The prediction replays the solver's assembly: LLF splitting with the
/// per-interface stencil alpha, one network query per interface and
/// orientation, conservative flux difference, plus the stored forcing.
/// When `grads` is non-null the exact parameter gradient is accumulated.
double residual_loss(const MlpModel& model, const ConstraintBasis& basis, const Dataset& ds,
                     std::span<const int> sample_indices, ParamGrads* grads);

/// Full-dataset loss.
double dataset_loss(const MlpModel& model, const ConstraintBasis& basis, const Dataset& ds);

/// Shuffles lambda groups into mini-batches each epoch, accumulates exact
/// gradients, applies Adam with the decaying learning rate. Stops at the
/// epoch limit or when the epoch loss reaches stop_loss. A NaN loss aborts
/// with the last good checkpoint and diverged = true.
TrainResult train(const TrainConfig& cfg, const Dataset& ds, MlpModel model,
                  const ConstraintBasis& basis);

/// "epoch,loss,lr" CSV.
void write_loss_csv(const TrainResult& result, const std::string& path);

} // namespace wlnn
