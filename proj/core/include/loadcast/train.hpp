#pragma once

#include <filesystem>
#include <span>

#include "loadcast/adam.hpp"
#include "loadcast/bptt.hpp"
#include "loadcast/grad_model.hpp"

namespace loadcast {

struct WindowSet;

/// One entry per completed epoch: mean training loss over all samples.
struct LossHistory {
    Vec epoch_mean_loss;
};

/// Raised when the training loss leaves the finite range; carries the epoch.
class TrainingDiverged : public std::runtime_error {
public:
    TrainingDiverged(std::size_t epoch, const std::string& what)
        : std::runtime_error(what), epoch(epoch) {}
    std::size_t epoch;
};

/// The training loop: per epoch, shuffle the samples with the seeded
/// generator, walk mini-batches of cfg.batch_size (final partial batch
/// included), apply analytic gradients + global-norm clipping + Adam.
/// Fully deterministic given (seed, data, config).
LossHistory train(GradModel& model, std::span<const Sample> samples, const TrainConfig& cfg);

LossHistory train(Network& net, const WindowSet& windows, const TrainConfig& cfg);

/// Writes "epoch,mean_loss" rows.
void write_loss_csv(const LossHistory& history, const std::filesystem::path& path);

}  // namespace loadcast
