#pragma once

#include <cstddef>

#include "ggm/model.hpp"

namespace ggm {

/// Confusion counts over the p(p-1)/2 unordered node pairs.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + tn + fp + fn; }
    bool operator==(const ConfusionCounts&) const = default;
};

/// Throws std::invalid_argument when the node counts differ.
ConfusionCounts confusion(const EdgeSet& truth, const EdgeSet& estimate);

/// (TP + TN) / (TP + TN + FP + FN). Throws on an empty count.
double accuracy(const ConfusionCounts& c);

/// TP / (TP + FP); 0 when nothing was selected.
double precision(const ConfusionCounts& c);

/// TP / (TP + FN); 0 when the truth has no edges.
double recall(const ConfusionCounts& c);

} // namespace ggm
