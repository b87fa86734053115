#pragma once

#include <span>

#include "loadcast/grad_model.hpp"
#include "loadcast/network.hpp"
#include "loadcast/sample.hpp"

namespace loadcast {

/// Gradients with the exact shapes of the corresponding Network parameters.
struct NetworkGrads {
    RnnParams rnn;
    LstmParams lstm;
    DenseParams head;
};

NetworkGrads zero_grads(const Network& net);

/// Exact reverse accumulation over the cached SequenceTrace of each sample:
/// the gradient of the mean batch MSE with respect to every cell and head
/// parameter. Returns the mean loss through *mean_loss when non-null.
/// Validated coordinate-by-coordinate against finite_diff_grad.
NetworkGrads bptt_gradients(const Network& net, std::span<const Sample> batch,
                            double* mean_loss = nullptr);

// Canonical flat parameter order (also the checkpoint body order):
//   rnn:  w_in, w_rec, head.w, head.b
//   lstm: for each gate in (forget, input, output, candidate):
//           w_x[g], w_h[g], b[g]
//         then head.w, head.b
// all matrices row-major.
std::size_t param_count(const Network& net);
void get_params(const Network& net, std::span<double> out);
void set_params(Network& net, std::span<const double> in);
void flatten_grads(const Network& net, const NetworkGrads& grads, std::span<double> out);

/// GradModel adapter over a Network owned elsewhere.
class NetworkGradModel final : public GradModel {
public:
    explicit NetworkGradModel(Network& net) : net_(net) {}

    std::size_t param_count() const override { return loadcast::param_count(net_); }
    void get_params(std::span<double> out) const override { loadcast::get_params(net_, out); }
    void set_params(std::span<const double> in) override { loadcast::set_params(net_, in); }
    Vec predict(std::span<const double> input) const override {
        return predict_window(net_, input);
    }
    double batch_gradients(std::span<const Sample> batch,
                           std::span<double> grad_out) const override;
    std::string describe() const override { return cell_kind_name(net_.cell); }

private:
    Network& net_;
};

}  // namespace loadcast
