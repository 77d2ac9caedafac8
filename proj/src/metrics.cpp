#include "ggm/metrics.hpp"

#include <stdexcept>

namespace ggm {

ConfusionCounts confusion(const EdgeSet& truth, const EdgeSet& estimate) {
    if (truth.nodes() != estimate.nodes()) {
        throw std::invalid_argument("confusion: edge sets have different node counts");
    }
    ConfusionCounts c;
    for (const auto& e : estimate.edges()) {
        if (truth.contains(e.i, e.j)) ++c.tp;
        else ++c.fp;
    }
    c.fn = truth.size() - c.tp;
    c.tn = truth.pair_count() - c.tp - c.fp - c.fn;
    return c;
}

double accuracy(const ConfusionCounts& c) {
    if (c.total() == 0) throw std::invalid_argument("accuracy: no pairs to score");
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

double precision(const ConfusionCounts& c) {
    const auto selected = c.tp + c.fp;
    return selected == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(selected);
}

double recall(const ConfusionCounts& c) {
    const auto positives = c.tp + c.fn;
    return positives == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(positives);
}

} // namespace ggm
