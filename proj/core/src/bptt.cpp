#include "loadcast/bptt.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "loadcast/loss.hpp"

namespace loadcast {

namespace {

void zero_like(Matrix& g, const Matrix& p) { g = Matrix(p.rows(), p.cols()); }

void check_batch(const Network& net, std::span<const Sample> batch) {
    if (batch.empty()) throw std::invalid_argument("bptt_gradients: empty batch");
    const std::size_t seq_len = batch.front().input.size();
    for (const Sample& s : batch) {
        if (s.input.size() != seq_len || s.target.size() != net.horizon) {
            std::ostringstream os;
            os << "bptt_gradients: non-uniform batch (expected input " << seq_len
               << ", target " << net.horizon << "; got input " << s.input.size()
               << ", target " << s.target.size() << ")";
            throw std::invalid_argument(os.str());
        }
        if (s.input.empty()) throw std::invalid_argument("bptt_gradients: empty input");
    }
}

void backward_rnn(const Network& net, const SequenceTrace& trace, const Vec& dpred,
                  NetworkGrads& grads) {
    const std::size_t steps = trace.length();
    const Vec& y_final = trace.hidden.back();

    add_outer(grads.head.w, dpred, y_final);
    axpy(grads.head.b, dpred, 1.0);

    Vec dy = matvec_transposed(net.head.w, dpred);
    Vec da(net.hidden);
    for (std::size_t t = steps; t-- > 0;) {
        const Vec& y_t = trace.hidden[t];
        for (std::size_t i = 0; i < net.hidden; ++i) da[i] = dy[i] * (1.0 - y_t[i] * y_t[i]);
        add_outer(grads.rnn.w_in, da, trace.inputs[t]);
        if (t > 0) add_outer(grads.rnn.w_rec, da, trace.hidden[t - 1]);
        dy = matvec_transposed(net.rnn.w_rec, da);
    }
}

void backward_lstm(const Network& net, const SequenceTrace& trace, const Vec& dpred,
                   NetworkGrads& grads) {
    const std::size_t steps = trace.length();
    const std::size_t hidden = net.hidden;
    const Vec& h_final = trace.hidden.back();

    add_outer(grads.head.w, dpred, h_final);
    axpy(grads.head.b, dpred, 1.0);

    Vec dh = matvec_transposed(net.head.w, dpred);
    Vec dc(hidden, 0.0);
    std::array<Vec, kGateCount> dz;
    for (auto& v : dz) v.resize(hidden);

    const Vec zeros(hidden, 0.0);
    for (std::size_t t = steps; t-- > 0;) {
        const auto& gates = trace.gates[t];
        const Vec& f = gates[kForget];
        const Vec& in = gates[kInput];
        const Vec& o = gates[kOutput];
        const Vec& g = gates[kCandidate];
        const Vec& tc = trace.tanh_cell[t];
        const Vec& c_prev = t > 0 ? trace.cell[t - 1] : zeros;
        const Vec& h_prev = t > 0 ? trace.hidden[t - 1] : zeros;

        for (std::size_t i = 0; i < hidden; ++i) {
            const double dc_total = dc[i] + dh[i] * o[i] * (1.0 - tc[i] * tc[i]);
            dz[kOutput][i] = dh[i] * tc[i] * o[i] * (1.0 - o[i]);
            dz[kForget][i] = dc_total * c_prev[i] * f[i] * (1.0 - f[i]);
            dz[kInput][i] = dc_total * g[i] * in[i] * (1.0 - in[i]);
            dz[kCandidate][i] = dc_total * in[i] * (1.0 - g[i] * g[i]);
            dc[i] = dc_total * f[i];
        }

        std::fill(dh.begin(), dh.end(), 0.0);
        for (std::size_t gate = 0; gate < kGateCount; ++gate) {
            add_outer(grads.lstm.w_x[gate], dz[gate], trace.inputs[t]);
            if (t > 0) add_outer(grads.lstm.w_h[gate], dz[gate], h_prev);
            axpy(grads.lstm.b[gate], dz[gate], 1.0);
            axpy(dh, matvec_transposed(net.lstm.w_h[gate], dz[gate]), 1.0);
        }
    }
}

}  // namespace

NetworkGrads zero_grads(const Network& net) {
    NetworkGrads g;
    if (net.cell == CellKind::Rnn) {
        zero_like(g.rnn.w_in, net.rnn.w_in);
        zero_like(g.rnn.w_rec, net.rnn.w_rec);
    } else {
        for (std::size_t gate = 0; gate < kGateCount; ++gate) {
            zero_like(g.lstm.w_x[gate], net.lstm.w_x[gate]);
            zero_like(g.lstm.w_h[gate], net.lstm.w_h[gate]);
            g.lstm.b[gate] = Vec(net.hidden, 0.0);
        }
    }
    zero_like(g.head.w, net.head.w);
    g.head.b = Vec(net.horizon, 0.0);
    return g;
}

NetworkGrads bptt_gradients(const Network& net, std::span<const Sample> batch,
                            double* mean_loss) {
    check_batch(net, batch);
    NetworkGrads grads = zero_grads(net);
    const double inv_batch = 1.0 / static_cast<double>(batch.size());
    double loss_sum = 0.0;

    std::vector<Vec> xs;
    for (const Sample& sample : batch) {
        xs.clear();
        xs.reserve(sample.input.size());
        for (double v : sample.input) xs.push_back(Vec{v});

        ForwardResult fwd = forward_sequence(net, xs);
        loss_sum += mse_loss(fwd.prediction, sample.target);

        Vec dpred = mse_loss_grad(fwd.prediction, sample.target);
        for (double& v : dpred) v *= inv_batch;

        if (net.cell == CellKind::Rnn) {
            backward_rnn(net, fwd.trace, dpred, grads);
        } else {
            backward_lstm(net, fwd.trace, dpred, grads);
        }
    }

    const double loss = loss_sum * inv_batch;
    if (!std::isfinite(loss)) throw std::runtime_error("bptt_gradients: non-finite loss");
    if (mean_loss) *mean_loss = loss;
    return grads;
}

namespace {

std::size_t cell_param_count(const Network& net) {
    if (net.cell == CellKind::Rnn) return net.rnn.w_in.size() + net.rnn.w_rec.size();
    std::size_t n = 0;
    for (std::size_t g = 0; g < kGateCount; ++g) {
        n += net.lstm.w_x[g].size() + net.lstm.w_h[g].size() + net.lstm.b[g].size();
    }
    return n;
}

// Walks every tensor in the canonical order, calling fn on each.
template <typename Net, typename Fn>
void for_each_tensor(Net& net, CellKind cell, Fn&& fn) {
    if (cell == CellKind::Rnn) {
        fn(net.rnn.w_in.values());
        fn(net.rnn.w_rec.values());
    } else {
        for (std::size_t g = 0; g < kGateCount; ++g) {
            fn(net.lstm.w_x[g].values());
            fn(net.lstm.w_h[g].values());
            fn(net.lstm.b[g]);
        }
    }
    fn(net.head.w.values());
    fn(net.head.b);
}

}  // namespace

std::size_t param_count(const Network& net) {
    return cell_param_count(net) + net.head.w.size() + net.head.b.size();
}

void get_params(const Network& net, std::span<double> out) {
    if (out.size() != param_count(net))
        throw std::invalid_argument("get_params: wrong buffer length");
    std::size_t pos = 0;
    for_each_tensor(net, net.cell, [&](const std::vector<double>& t) {
        std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(pos));
        pos += t.size();
    });
}

void set_params(Network& net, std::span<const double> in) {
    if (in.size() != param_count(net))
        throw std::invalid_argument("set_params: wrong buffer length");
    ensure_finite(in, "set_params");
    std::size_t pos = 0;
    for_each_tensor(net, net.cell, [&](std::vector<double>& t) {
        std::copy(in.begin() + static_cast<std::ptrdiff_t>(pos),
                  in.begin() + static_cast<std::ptrdiff_t>(pos + t.size()), t.begin());
        pos += t.size();
    });
}

void flatten_grads(const Network& net, const NetworkGrads& grads, std::span<double> out) {
    if (out.size() != param_count(net))
        throw std::invalid_argument("flatten_grads: wrong buffer length");
    std::size_t pos = 0;
    for_each_tensor(grads, net.cell, [&](const std::vector<double>& t) {
        std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(pos));
        pos += t.size();
    });
}

double NetworkGradModel::batch_gradients(std::span<const Sample> batch,
                                         std::span<double> grad_out) const {
    double loss = 0.0;
    NetworkGrads grads = bptt_gradients(net_, batch, &loss);
    flatten_grads(net_, grads, grad_out);
    return loss;
}

}  // namespace loadcast
