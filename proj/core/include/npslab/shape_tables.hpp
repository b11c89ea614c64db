#pragma once

#include "npslab/partition.hpp"
#include "npslab/tableau.hpp"

#include <vector>

namespace npslab {

// Flat per-shape lookup tables over the canonical column cell order.
// Everything the inner loops need: neighbour indices, heights, hooks.
class ShapeTables {
public:
    explicit ShapeTables(Partition shape);

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(cells_.size()); }

    Cell cell(int index) const { return cells_[index]; }
    const std::vector<Cell>& cells() const { return cells_; }
    int index_of(Cell x) const; // -1 outside the shape

    // Neighbour cell indices, -1 where the neighbour is outside the shape.
    int down(int index) const { return down_[index]; }
    int right(int index) const { return right_[index]; }
    int up(int index) const { return up_[index]; }
    int left(int index) const { return left_[index]; }

    int height(int index) const { return height_[index]; }
    int hook(int index) const { return hook_[index]; }

private:
    Partition shape_;
    std::vector<Cell> cells_;
    std::vector<int> col_offsets_;
    std::vector<int> down_, right_, up_, left_;
    std::vector<int> height_, hook_;
};

} // namespace npslab
