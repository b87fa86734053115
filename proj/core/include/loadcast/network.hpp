#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "loadcast/cells.hpp"

namespace loadcast {

enum class CellKind { Rnn, Lstm };

std::string cell_kind_name(CellKind kind);
CellKind parse_cell_kind(const std::string& name);

/// A recurrent forecaster: one cell (RNN or LSTM) unrolled over the input
/// sequence plus a linear head on the final hidden state. Sequence-to-vector:
/// the whole horizon is emitted at once.
struct Network {
    CellKind cell = CellKind::Rnn;
    std::size_t hidden = 100;
    std::size_t input_dim = 1;
    std::size_t horizon = 1;
    RnnParams rnn;    // used when cell == Rnn
    LstmParams lstm;  // used when cell == Lstm
    DenseParams head;

    static Network make(CellKind cell, std::size_t hidden, std::size_t input_dim,
                        std::size_t horizon, Rng& rng);
};

/// Everything the backward pass needs, recorded step by step.
/// inputs[t], hidden[t] (y_t or h_t), and for the LSTM: cell[t] = c_t,
/// tanh_cell[t], gates[t]. Index t runs over the sequence; initial states are
/// implicit zeros.
struct SequenceTrace {
    std::vector<Vec> inputs;
    std::vector<Vec> hidden;
    std::vector<Vec> cell;
    std::vector<Vec> tanh_cell;
    std::vector<std::array<Vec, kGateCount>> gates;

    std::size_t length() const { return inputs.size(); }
};

struct ForwardResult {
    Vec prediction;
    SequenceTrace trace;
};

struct CellState {
    Vec h;
    Vec c;  // empty for RNN
};

CellState zero_state(const Network& net);

/// Runs the cell over the whole sequence from the given state (zero state by
/// default) and applies the head to the final hidden state.
/// Throws on an empty sequence or input width mismatch.
ForwardResult forward_sequence(const Network& net, std::span<const Vec> xs);
ForwardResult forward_sequence_from(const Network& net, const CellState& initial,
                                    std::span<const Vec> xs);

/// Final cell state recorded in a trace (for continuation checks).
CellState trace_final_state(const Network& net, const SequenceTrace& trace);

/// Convenience for input_dim == 1: each scalar of `window` is one time step.
Vec predict_window(const Network& net, std::span<const double> window);

}  // namespace loadcast
