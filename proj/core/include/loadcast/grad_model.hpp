#pragma once

#include <span>
#include <string>

#include "loadcast/sample.hpp"

namespace loadcast {

/// What the optimizer needs from a trainable model: a flat view of the
/// parameters, a prediction, and the analytic batch gradient in the same
/// flat order. Both the recurrent networks and the feed-forward baselines
/// implement it, so one training loop serves every model.
class GradModel {
public:
    virtual ~GradModel() = default;

    virtual std::size_t param_count() const = 0;
    virtual void get_params(std::span<double> out) const = 0;
    virtual void set_params(std::span<const double> in) = 0;

    virtual Vec predict(std::span<const double> input) const = 0;

    /// Mean batch MSE; writes the gradient of that mean into grad_out
    /// (length param_count()). Throws on an empty batch or non-finite loss.
    virtual double batch_gradients(std::span<const Sample> batch,
                                   std::span<double> grad_out) const = 0;

    virtual std::string describe() const = 0;
};

}  // namespace loadcast
