#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "loadcast/matrix.hpp"

namespace loadcast {

/// Training hyperparameters. Defaults follow the experiment setup: 300
/// epochs, batch size 20, Adam at the standard (0.001, 0.9, 0.999, 1e-8).
/// learning_rate 0 is the documented degenerate "no update" configuration.
struct TrainConfig {
    std::size_t epochs = 300;
    std::size_t batch_size = 20;
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::optional<double> grad_clip = 1.0;  // global-norm cap; nullopt disables
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// First/second-moment accumulators, one slot per flattened parameter.
struct AdamState {
    Vec m;
    Vec v;
    std::uint64_t t = 0;

    explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
};

/// If the global L2 norm of grads exceeds max_norm, rescales grads to that
/// norm. Returns the pre-clip norm.
double clip_by_global_norm(std::span<double> grads, double max_norm);

/// Standard Adam with bias correction. Mutates params and state; clipping is
/// the caller's step (see train()). Throws on shape mismatch or non-finite
/// gradient entries.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               const TrainConfig& cfg);

}  // namespace loadcast
