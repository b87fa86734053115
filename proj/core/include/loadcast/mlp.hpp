#pragma once

#include <span>
#include <vector>

#include "loadcast/grad_model.hpp"
#include "loadcast/matrix.hpp"
#include "loadcast/rng.hpp"
#include "loadcast/sample.hpp"

namespace loadcast {

/// Feed-forward net over the flattened input window: tanh hidden layers,
/// linear output. The ANN baseline has one hidden layer, the DNN three.
struct Mlp {
    std::vector<Matrix> weights;  // layer l: out x in
    std::vector<Vec> biases;

    std::size_t input_len() const { return weights.front().cols(); }
    std::size_t horizon() const { return weights.back().rows(); }
    std::size_t layer_count() const { return weights.size(); }

    /// layer_sizes includes input and output widths, e.g. {4, 3, 2}.
    /// Weights uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.
    static Mlp make(std::span<const std::size_t> layer_sizes, Rng& rng);
};

Vec mlp_forward(const Mlp& mlp, std::span<const double> input);

struct MlpGrads {
    std::vector<Matrix> weights;
    std::vector<Vec> biases;
};

/// Reverse accumulation of the mean batch MSE, shapes mirroring the params.
MlpGrads mlp_gradients(const Mlp& mlp, std::span<const Sample> batch,
                       double* mean_loss = nullptr);

enum class MlpKind { Ann, Dnn };

inline constexpr std::size_t kMlpHiddenWidth = 64;

/// ANN: input -> 64 -> horizon. DNN: input -> 64 -> 64 -> 64 -> horizon.
Mlp make_mlp_baseline(MlpKind kind, std::size_t input_len, std::size_t horizon, Rng& rng);

// Flat order: for each layer, weights (row-major) then bias.
std::size_t param_count(const Mlp& mlp);
void get_params(const Mlp& mlp, std::span<double> out);
void set_params(Mlp& mlp, std::span<const double> in);

class MlpGradModel final : public GradModel {
public:
    explicit MlpGradModel(Mlp& mlp) : mlp_(mlp) {}

    std::size_t param_count() const override { return loadcast::param_count(mlp_); }
    void get_params(std::span<double> out) const override { loadcast::get_params(mlp_, out); }
    void set_params(std::span<const double> in) override { loadcast::set_params(mlp_, in); }
    Vec predict(std::span<const double> input) const override {
        return mlp_forward(mlp_, input);
    }
    double batch_gradients(std::span<const Sample> batch,
                           std::span<double> grad_out) const override;
    std::string describe() const override;

private:
    Mlp& mlp_;
};

}  // namespace loadcast
