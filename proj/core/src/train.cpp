#include "loadcast/train.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "loadcast/rng.hpp"
#include "loadcast/windowing.hpp"

namespace loadcast {

LossHistory train(GradModel& model, std::span<const Sample> samples, const TrainConfig& cfg) {
    cfg.validate();
    if (samples.empty()) throw std::invalid_argument("train: no samples");

    const std::size_t n_params = model.param_count();
    Vec params(n_params), grads(n_params);
    model.get_params(params);
    AdamState state(n_params);
    Rng rng(cfg.seed);

    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), 0);

    std::vector<Sample> batch;
    LossHistory history;
    history.epoch_mean_loss.reserve(cfg.epochs);

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle(order, rng);
        double loss_sum = 0.0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(start + cfg.batch_size, order.size());
            batch.clear();
            for (std::size_t k = start; k < end; ++k) batch.push_back(samples[order[k]]);

            const double loss = model.batch_gradients(batch, grads);
            if (!std::isfinite(loss)) {
                std::ostringstream os;
                os << "training diverged at epoch " << epoch;
                throw TrainingDiverged(epoch, os.str());
            }
            loss_sum += loss * static_cast<double>(batch.size());

            if (cfg.grad_clip) clip_by_global_norm(grads, *cfg.grad_clip);
            adam_step(params, grads, state, cfg);
            model.set_params(params);
        }
        history.epoch_mean_loss.push_back(loss_sum / static_cast<double>(order.size()));
    }
    return history;
}

LossHistory train(Network& net, const WindowSet& windows, const TrainConfig& cfg) {
    NetworkGradModel model(net);
    return train(model, windows.samples, cfg);
}

void write_loss_csv(const LossHistory& history, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_loss_csv: cannot open " + path.string());
    out << "epoch,mean_loss\n";
    out.precision(17);
    for (std::size_t i = 0; i < history.epoch_mean_loss.size(); ++i) {
        out << (i + 1) << "," << history.epoch_mean_loss[i] << "\n";
    }
}

}  // namespace loadcast
