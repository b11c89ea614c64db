#pragma once

#include "npslab/partition.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace npslab {

// A bijection from the cells of a shape onto {1..n}. Entries are stored in
// the canonical column cell order of the shape. A standard tableau doubles
// as a sorting order: cell x precedes cell y iff U(x) < U(y).
class Tableau {
public:
    struct Unchecked {}; // tag for callers that already guarantee a bijection

    Tableau(Partition shape, std::vector<int> entries_in_column_order);
    Tableau(Partition shape, std::vector<int> entries, Unchecked);

    // Ragged row-major input; validated as a bijection onto {1..n}.
    static Tableau from_rows(Partition shape, const std::vector<std::vector<int>>& rows);
    static Tableau from_rows(const std::vector<std::vector<int>>& rows); // shape inferred

    const Partition& shape() const { return shape_; }
    int n() const { return static_cast<int>(entries_.size()); }

    int at(Cell x) const;         // throws std::domain_error outside the shape
    int at_index(int cell_index) const { return entries_[cell_index]; }
    int index_of(Cell x) const;   // canonical cell index
    Cell cell_of(int entry) const; // throws std::domain_error for entries outside 1..n

    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;

    bool is_standard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<int> entries_;
    std::vector<int> col_offsets_; // start index of each column in entries_
};

// True iff T(x) <= min over bottom/right neighbours for every listed cell
// that has such neighbours.
bool is_ordered_on(const Tableau& t, std::span<const Cell> cells);

// The unique standard tableau increasing by 1 down each column (the order
// used by the classical algorithm), respectively along each row.
Tableau column_order(const Partition& p);
Tableau row_order(const Partition& p);

// Greedy strip filling: each choice takes the top row (or leftmost column)
// that still has empty cells and fills it with the least unused entries.
// choices is a string over {R, C}; trailing choices beyond completion are
// ignored, too few choices is an error. Always yields a standard tableau.
Tableau strip_order(const Partition& p, std::string_view choices);

// Every tableau obtainable by strip filling, deduplicated, in a fixed order.
// Includes the row and column orders.
std::vector<Tableau> all_strip_orders(const Partition& p);

// U'(j, i) = U(i, j); maps tableaux of shape p to shape conjugate(p).
Tableau conjugate_tableau(const Tableau& u);

} // namespace npslab
