#pragma once

#include <vector>

#include "matchbook/errors.hpp"

namespace matchbook {

using Vertex = int;

// A printing cycle: the vertex sequence along the spine, read top to below.
// The vertex set is arbitrary (block-induced orders keep their original
// labels), so positions are tracked per label rather than assuming 0..n-1.
class SpineOrder {
public:
    SpineOrder() = default;

    explicit SpineOrder(std::vector<Vertex> sequence);

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<Vertex>& sequence() const { return seq_; }

    bool contains(Vertex v) const {
        return v >= 0 && v < static_cast<Vertex>(pos_.size()) && pos_[v] >= 0;
    }

    // Position of v on the spine, 0 = top. Throws domain_mismatch if absent.
    int position(Vertex v) const {
        if (!contains(v))
            throw Error(errc::domain_mismatch, "vertex " + std::to_string(v) + " is not on the spine");
        return pos_[v];
    }

    // Cyclic left shift: element i of the result is element (i + steps) here.
    SpineOrder rotated(int steps) const;
    SpineOrder reversed() const;

    bool operator==(const SpineOrder& other) const { return seq_ == other.seq_; }

private:
    std::vector<Vertex> seq_;
    std::vector<int> pos_;  // indexed by vertex label, -1 when absent
};

}  // namespace matchbook
