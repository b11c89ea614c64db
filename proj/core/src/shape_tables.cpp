#include "npslab/shape_tables.hpp"

namespace npslab {

ShapeTables::ShapeTables(Partition shape) : shape_(std::move(shape)) {
    cells_ = shape_.cells_column_order();
    const int n = static_cast<int>(cells_.size());

    col_offsets_.reserve(shape_.cols());
    int running = 0;
    for (int j = 1; j <= shape_.cols(); ++j) {
        col_offsets_.push_back(running);
        running += shape_.col_length(j);
    }

    down_.assign(n, -1);
    right_.assign(n, -1);
    up_.assign(n, -1);
    left_.assign(n, -1);
    height_.assign(n, 0);
    hook_.assign(n, 0);
    for (int idx = 0; idx < n; ++idx) {
        const Cell x = cells_[idx];
        down_[idx] = index_of({x.row + 1, x.col});
        right_[idx] = index_of({x.row, x.col + 1});
        up_[idx] = index_of({x.row - 1, x.col});
        left_[idx] = index_of({x.row, x.col - 1});
        const CellStats s = cell_stats(shape_, x);
        height_[idx] = s.height;
        hook_[idx] = s.hook;
    }
}

int ShapeTables::index_of(Cell x) const {
    if (!shape_.contains(x))
        return -1;
    return col_offsets_[x.col - 1] + x.row - 1;
}

} // namespace npslab
