#include "npslab/partition.hpp"

#include "npslab/errors.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace npslab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad partition part: '" + std::string(token) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
}

int Partition::col_length(int j) const {
    if (j < 1)
        return 0;
    int count = 0;
    for (int p : parts_) {
        if (p >= j)
            ++count;
        else
            break;
    }
    return count;
}

bool Partition::contains(Cell x) const {
    return x.row >= 1 && x.col >= 1 && x.col <= part(x.row);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(cols());
    for (int j = 1; j <= cols(); ++j)
        conj.push_back(col_length(j));
    return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells_column_order() const {
    std::vector<Cell> cells;
    cells.reserve(n_);
    for (int j = 1; j <= cols(); ++j)
        for (int i = 1; i <= col_length(j); ++i)
            cells.push_back({i, j});
    return cells;
}

namespace {

void require_cell(const Partition& p, Cell x) {
    if (!p.contains(x))
        throw std::domain_error("cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                                ") lies outside shape " + p.to_string());
}

} // namespace

CellStats cell_stats(const Partition& p, Cell x) {
    require_cell(p, x);
    CellStats s;
    s.arm = p.part(x.row) - x.col;
    s.leg = p.col_length(x.col) - x.row;
    s.coarm = x.col - 1;
    s.coleg = x.row - 1;
    s.hook = s.arm + s.leg + 1;
    s.height = s.coarm + s.coleg;
    return s;
}

Neighbors neighbors(const Partition& p, Cell x) {
    require_cell(p, x);
    Neighbors n;
    if (Cell up{x.row - 1, x.col}; p.contains(up))
        n.minus.push_back(up);
    if (Cell left{x.row, x.col - 1}; p.contains(left))
        n.minus.push_back(left);
    if (Cell down{x.row + 1, x.col}; p.contains(down))
        n.plus.push_back(down);
    if (Cell right{x.row, x.col + 1}; p.contains(right))
        n.plus.push_back(right);
    return n;
}

std::vector<Cell> dropping_zone(const Partition& p, Cell x) {
    require_cell(p, x);
    std::vector<Cell> zone;
    for (Cell c : p.cells_column_order())
        if (c.row >= x.row && c.col >= x.col)
            zone.push_back(c);
    return zone;
}

BigInt syt_count(const Partition& p) {
    const BigInt hooks = count_hook_functions(p);
    const BigInt fact = big_factorial(p.n());
    if (fact % hooks != 0)
        throw InvariantError("hook product does not divide n!");
    return fact / hooks;
}

BigInt count_hook_functions(const Partition& p) {
    BigInt product = 1;
    for (Cell x : p.cells_column_order())
        product *= cell_stats(p, x).hook;
    return product;
}

BigInt total_initial_height(const Partition& p) {
    if (p.n() == 0)
        throw std::domain_error("total initial height of the empty shape");
    long long height_sum = 0;
    long long hook_sum = 0;
    for (Cell x : p.cells_column_order()) {
        const CellStats s = cell_stats(p, x);
        height_sum += s.height;
        hook_sum += s.hook;
    }
    BigInt per_row = 0;
    for (int i = 1; i <= p.rows(); ++i)
        per_row += big_binomial(p.part(i), 2) + BigInt(i - 1) * p.part(i);

    const BigInt base = big_factorial(p.n() - 1);
    const BigInt by_heights = base * height_sum;
    const BigInt by_hooks = base * (hook_sum - p.n());
    const BigInt by_parts = base * per_row;
    if (by_heights != by_hooks || by_heights != by_parts)
        throw InvariantError("total initial height formulas disagree");
    return by_heights;
}

HookFunction::HookFunction(Partition shape_in, std::vector<int> values_in)
    : shape(std::move(shape_in)), values(std::move(values_in)) {
    const auto cells = shape.cells_column_order();
    if (values.size() != cells.size())
        throw std::invalid_argument("hook function has wrong number of values");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const CellStats s = cell_stats(shape, cells[i]);
        if (values[i] < -s.leg || values[i] > s.arm)
            throw std::invalid_argument("hook function value out of [-leg, arm]");
    }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        acc.push_back(next);
        partitions_rec(remaining - next, next, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
    if (n < 0)
        throw std::domain_error("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

} // namespace npslab
