#pragma once

#include "npslab/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace npslab {

// 1-based matrix coordinates: (row, col). (1,1) is the top-left corner.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// An integer partition identified with its Young diagram, English convention:
// row i is a left-justified strip of part(i) cells.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // throws on non-decreasing or nonpositive parts

    // Comma-separated part list, e.g. "5,4,2,1,1,1". Empty string is the
    // empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    int n() const { return n_; }             // number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_.front(); }
    int part(int i) const;                   // lambda_i, 1-based, 0 past the last row
    int col_length(int j) const;             // lambda'_j, 1-based, 0 past the last column
    const std::vector<int>& parts() const { return parts_; }

    bool contains(Cell x) const;
    Partition conjugate() const;

    // Cells listed column by column, top to bottom within a column. This is
    // the canonical cell order used for tableau storage and enumeration.
    std::vector<Cell> cells_column_order() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct CellStats {
    int arm = 0;    // cells strictly right of x in its row
    int leg = 0;    // cells strictly below x in its column
    int coarm = 0;  // cells strictly left
    int coleg = 0;  // cells strictly above
    int hook = 0;   // arm + leg + 1
    int height = 0; // coarm + coleg, taxicab distance from the corner
};

struct Neighbors {
    std::vector<Cell> minus; // left and top neighbours inside the shape
    std::vector<Cell> plus;  // bottom and right neighbours inside the shape
};

CellStats cell_stats(const Partition& p, Cell x); // throws std::domain_error outside the shape
Neighbors neighbors(const Partition& p, Cell x);

// J(x): every cell weakly below and weakly right of x.
std::vector<Cell> dropping_zone(const Partition& p, Cell x);

// Number of standard Young tableaux, n! / prod of hook lengths. Exact.
BigInt syt_count(const Partition& p);

// Number of maps H with -leg(x) <= H(x) <= arm(x) per cell: prod of hooks.
BigInt count_hook_functions(const Partition& p);

// Total initial height alpha: (n-1)! * sum of cell heights. Evaluated three
// ways (height sum, hook sum, per-row binomials) and cross-checked; a
// mismatch throws InvariantError. Empty shape throws std::domain_error.
BigInt total_initial_height(const Partition& p);

// A map H : cells -> Z with -leg(x) <= H(x) <= arm(x); values in canonical
// column cell order. Construction validates the bounds.
struct HookFunction {
    HookFunction(Partition shape, std::vector<int> values);

    Partition shape;
    std::vector<int> values;
};

// All partitions of n, in descending lexicographic order of the part lists.
std::vector<Partition> all_partitions(int n);

} // namespace npslab
