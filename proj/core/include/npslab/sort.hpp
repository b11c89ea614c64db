#pragma once

#include "npslab/shape_tables.hpp"
#include "npslab/tableau.hpp"

#include <optional>
#include <span>
#include <vector>

namespace npslab {

// One exchange: the larger entry moves from `from` to `to`, the smaller one
// the other way. `to` is always a bottom or right neighbour of `from`.
struct Transposition {
    int index = 0; // 1-based position in the sort
    int small = 0;
    int large = 0;
    Cell from; // where the larger entry sat before the step
    Cell to;   // where it lands

    friend bool operator==(const Transposition&, const Transposition&) = default;
};

// Full record of one sort: the order U, the input T, every transposition,
// the sorted result W, and the watermark indices mu. mu has n+1 values,
// mu[s-1] for s = 1..n+1: the first step index at which the tableau is
// ordered on the cells of U-rank s and above. mu[0] is the step count,
// mu[n] is 0 by convention.
struct SortTrace {
    Tableau order;
    Tableau initial;
    Tableau result;
    std::vector<Transposition> steps;
    std::vector<int> mu;

    int step_count() const { return static_cast<int>(steps.size()); }
    int mu_at(int s) const { return mu[static_cast<std::size_t>(s) - 1]; }
};

// The consecutive exchanges that carry one entry away from the corner.
struct DropRecord {
    int entry = 0;
    Cell start;
    std::vector<Cell> path; // positions of the entry, starting cell included
    int max_height = 0;
};

// The U-maximal cell whose entry exceeds the smallest bottom/right
// neighbour entry; empty when t is standard.
std::optional<Cell> find_active_cell(const Tableau& t, const Tableau& u);

// One exchange at the active cell. Throws std::logic_error if t is already
// standard, std::invalid_argument on shape mismatch or non-standard u.
std::pair<Tableau, Transposition> step(const Tableau& t, const Tableau& u);

// Runs the sorting algorithm for the order u on t and records everything.
SortTrace sort(const Tableau& t, const Tableau& u);

std::vector<DropRecord> drop_records(const SortTrace& trace);

// Maximal height the entry b reaches during the sort.
int beta(const SortTrace& trace, int b);

// Reusable engine for one (shape, order) pair. run() sorts entries given in
// the canonical column cell order without allocating; the returned views
// stay valid until the next run() call.
class Sorter {
public:
    struct Step {
        int small, large;
        int from, to; // cell indices
    };

    Sorter(const Partition& shape, const Tableau& order);

    const ShapeTables& tables() const { return tables_; }
    const Tableau& order() const { return order_; }
    // cell index of U-rank s (1-based): the s-th cell in the sorting order
    int cell_of_rank(int s) const { return rank_cells_[static_cast<std::size_t>(s) - 1]; }

    void run(std::span<const int> entries_in_column_order);

    std::span<const int> result() const { return work_; }
    std::span<const Step> steps() const { return steps_; }
    std::span<const int> mu() const { return mu_; } // size n+1, as in SortTrace
    // cell index where entry b peaked (position right after its drop)
    int drop_cell(int b) const { return drop_cells_[static_cast<std::size_t>(b) - 1]; }

private:
    ShapeTables tables_;
    Tableau order_;
    std::vector<int> rank_cells_;
    std::vector<int> work_;
    std::vector<Step> steps_;
    std::vector<int> mu_;
    std::vector<int> drop_cells_;
};

} // namespace npslab
