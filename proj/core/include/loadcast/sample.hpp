#pragma once

#include "loadcast/matrix.hpp"

namespace loadcast {

/// One supervised pair: `input` is the observed window (one value per day),
/// `target` the horizon to predict.
struct Sample {
    Vec input;
    Vec target;

    bool operator==(const Sample&) const = default;
};

}  // namespace loadcast
