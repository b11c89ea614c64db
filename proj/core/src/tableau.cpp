#include "npslab/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace npslab {

namespace {

std::vector<int> column_offsets(const Partition& shape) {
    std::vector<int> offsets;
    offsets.reserve(shape.cols());
    int running = 0;
    for (int j = 1; j <= shape.cols(); ++j) {
        offsets.push_back(running);
        running += shape.col_length(j);
    }
    return offsets;
}

void validate_bijection(const std::vector<int>& entries) {
    std::vector<char> seen(entries.size(), 0);
    for (int e : entries) {
        if (e < 1 || e > static_cast<int>(entries.size()) || seen[e - 1])
            throw std::invalid_argument("tableau entries are not a bijection onto 1..n");
        seen[e - 1] = 1;
    }
}

} // namespace

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)), col_offsets_(column_offsets(shape_)) {
    if (static_cast<int>(entries_.size()) != shape_.n())
        throw std::invalid_argument("tableau entry count does not match shape");
    validate_bijection(entries_);
}

Tableau::Tableau(Partition shape, std::vector<int> entries, Unchecked)
    : shape_(std::move(shape)), entries_(std::move(entries)), col_offsets_(column_offsets(shape_)) {}

Tableau Tableau::from_rows(Partition shape, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != shape.rows())
        throw std::invalid_argument("row count does not match shape");
    std::vector<int> entries(shape.n());
    const auto offsets = column_offsets(shape);
    for (int i = 1; i <= shape.rows(); ++i) {
        if (static_cast<int>(rows[i - 1].size()) != shape.part(i))
            throw std::invalid_argument("row length does not match shape");
        for (int j = 1; j <= shape.part(i); ++j)
            entries[offsets[j - 1] + i - 1] = rows[i - 1][j - 1];
    }
    return Tableau(std::move(shape), std::move(entries));
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return from_rows(Partition(std::move(parts)), rows);
}

int Tableau::at(Cell x) const {
    if (!shape_.contains(x))
        throw std::domain_error("cell outside shape");
    return entries_[index_of(x)];
}

int Tableau::index_of(Cell x) const {
    return col_offsets_[x.col - 1] + x.row - 1;
}

Cell Tableau::cell_of(int entry) const {
    if (entry < 1 || entry > n())
        throw std::domain_error("entry outside 1..n");
    const auto cells = shape_.cells_column_order();
    for (int i = 0; i < n(); ++i)
        if (entries_[i] == entry)
            return cells[i];
    throw std::domain_error("entry not present"); // unreachable for a bijection
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(shape_.rows());
    for (int i = 1; i <= shape_.rows(); ++i) {
        out[i - 1].resize(shape_.part(i));
        for (int j = 1; j <= shape_.part(i); ++j)
            out[i - 1][j - 1] = entries_[index_of({i, j})];
    }
    return out;
}

bool Tableau::is_standard() const {
    for (int i = 1; i <= shape_.rows(); ++i) {
        for (int j = 1; j <= shape_.part(i); ++j) {
            const int e = entries_[index_of({i, j})];
            if (shape_.contains({i + 1, j}) && e > entries_[index_of({i + 1, j})])
                return false;
            if (shape_.contains({i, j + 1}) && e > entries_[index_of({i, j + 1})])
                return false;
        }
    }
    return true;
}

bool is_ordered_on(const Tableau& t, std::span<const Cell> cells) {
    const Partition& shape = t.shape();
    for (Cell x : cells) {
        if (!shape.contains(x))
            throw std::domain_error("cell outside shape");
        int smallest_below = 0;
        if (Cell down{x.row + 1, x.col}; shape.contains(down))
            smallest_below = t.at(down);
        if (Cell right{x.row, x.col + 1}; shape.contains(right)) {
            const int e = t.at(right);
            if (smallest_below == 0 || e < smallest_below)
                smallest_below = e;
        }
        if (smallest_below != 0 && t.at(x) > smallest_below)
            return false;
    }
    return true;
}

Tableau column_order(const Partition& p) {
    std::vector<int> entries(p.n());
    for (int i = 0; i < p.n(); ++i)
        entries[i] = i + 1; // canonical storage is already column by column
    return Tableau(p, std::move(entries), Tableau::Unchecked{});
}

Tableau row_order(const Partition& p) {
    std::vector<int> entries(p.n());
    Tableau t(p, std::vector<int>(p.n(), 0), Tableau::Unchecked{});
    int next = 1;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            entries[t.index_of({i, j})] = next++;
    return Tableau(p, std::move(entries), Tableau::Unchecked{});
}

Tableau strip_order(const Partition& p, std::string_view choices) {
    std::vector<int> entries(p.n(), 0);
    Tableau layout(p, std::vector<int>(p.n(), 0), Tableau::Unchecked{});
    int filled_rows = 0;
    int filled_cols = 0;
    int next = 1;
    std::size_t pos = 0;
    while (next <= p.n()) {
        if (pos >= choices.size())
            throw std::invalid_argument("strip choices exhausted before the shape was filled");
        const char c = choices[pos++];
        if (c == 'R' || c == 'r') {
            const int i = filled_rows + 1;
            for (int j = filled_cols + 1; j <= p.part(i); ++j)
                entries[layout.index_of({i, j})] = next++;
            ++filled_rows;
        } else if (c == 'C' || c == 'c') {
            const int j = filled_cols + 1;
            for (int i = filled_rows + 1; i <= p.col_length(j); ++i)
                entries[layout.index_of({i, j})] = next++;
            ++filled_cols;
        } else {
            throw std::invalid_argument("strip choices may contain only R and C");
        }
    }
    return Tableau(p, std::move(entries), Tableau::Unchecked{});
}

namespace {

void strip_orders_rec(const Partition& p, std::string& choices, int filled, int rows, int cols,
                      std::set<std::vector<int>>& seen, std::vector<Tableau>& out) {
    if (filled == p.n()) {
        Tableau t = strip_order(p, choices);
        if (seen.insert(t.entries()).second)
            out.push_back(std::move(t));
        return;
    }
    int row_cells = 0;
    if (p.part(rows + 1) > cols)
        row_cells = p.part(rows + 1) - cols;
    int col_cells = 0;
    if (p.col_length(cols + 1) > rows)
        col_cells = p.col_length(cols + 1) - rows;

    choices.push_back('R');
    strip_orders_rec(p, choices, filled + row_cells, rows + 1, cols, seen, out);
    choices.back() = 'C';
    strip_orders_rec(p, choices, filled + col_cells, rows, cols + 1, seen, out);
    choices.pop_back();
}

} // namespace

std::vector<Tableau> all_strip_orders(const Partition& p) {
    std::vector<Tableau> out;
    if (p.n() == 0) {
        out.push_back(Tableau(p, {}, Tableau::Unchecked{}));
        return out;
    }
    std::set<std::vector<int>> seen;
    std::string choices;
    strip_orders_rec(p, choices, 0, 0, 0, seen, out);
    return out;
}

Tableau conjugate_tableau(const Tableau& u) {
    const Partition conj = u.shape().conjugate();
    std::vector<int> entries(conj.n());
    Tableau layout(conj, std::vector<int>(conj.n(), 0), Tableau::Unchecked{});
    for (int i = 1; i <= u.shape().rows(); ++i)
        for (int j = 1; j <= u.shape().part(i); ++j)
            entries[layout.index_of({j, i})] = u.at({i, j});
    return Tableau(conj, std::move(entries), Tableau::Unchecked{});
}

} // namespace npslab
