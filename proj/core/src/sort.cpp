#include "npslab/sort.hpp"

#include "npslab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace npslab {

namespace {

void require_sortable(const Tableau& t, const Tableau& u) {
    if (t.shape() != u.shape())
        throw std::invalid_argument("tableau and order have different shapes");
    if (!u.is_standard())
        throw std::invalid_argument("sorting order must be a standard tableau");
}

} // namespace

std::optional<Cell> find_active_cell(const Tableau& t, const Tableau& u) {
    require_sortable(t, u);
    const ShapeTables tables(t.shape());
    const int n = tables.size();

    // scan cells by descending U-value
    std::vector<int> by_rank(n);
    for (int idx = 0; idx < n; ++idx)
        by_rank[u.at_index(idx) - 1] = idx;

    for (int s = n; s >= 1; --s) {
        const int idx = by_rank[s - 1];
        const int dn = tables.down(idx);
        const int rt = tables.right(idx);
        if (dn < 0 && rt < 0)
            continue;
        int smallest = 0;
        if (dn >= 0)
            smallest = t.at_index(dn);
        if (rt >= 0 && (smallest == 0 || t.at_index(rt) < smallest))
            smallest = t.at_index(rt);
        if (t.at_index(idx) > smallest)
            return tables.cell(idx);
    }
    return std::nullopt;
}

std::pair<Tableau, Transposition> step(const Tableau& t, const Tableau& u) {
    const auto active = find_active_cell(t, u);
    if (!active)
        throw std::logic_error("tableau is already standard");

    const Partition& shape = t.shape();
    const Neighbors nb = neighbors(shape, *active);
    Cell target = nb.plus.front();
    for (Cell y : nb.plus)
        if (t.at(y) < t.at(target))
            target = y;

    std::vector<int> entries = t.entries();
    const int large = t.at(*active);
    const int small = t.at(target);
    entries[t.index_of(*active)] = small;
    entries[t.index_of(target)] = large;

    Transposition step_record{1, small, large, *active, target};
    return {Tableau(shape, std::move(entries), Tableau::Unchecked{}), step_record};
}

Sorter::Sorter(const Partition& shape, const Tableau& order)
    : tables_(shape), order_(order) {
    require_sortable(order, order);
    if (order.shape() != shape)
        throw std::invalid_argument("order shape mismatch");
    const int n = tables_.size();
    rank_cells_.resize(n);
    for (int idx = 0; idx < n; ++idx)
        rank_cells_[order_.at_index(idx) - 1] = idx;
    work_.resize(n);
    mu_.resize(n + 1);
    drop_cells_.resize(n);
    steps_.reserve(n * (n - 1) / 2); // each pair is exchanged at most once
}

void Sorter::run(std::span<const int> entries) {
    const int n = tables_.size();
    std::copy(entries.begin(), entries.end(), work_.begin());
    steps_.clear();
    mu_[n] = 0;

    // Cells are handled in decreasing order of U. When rank s is reached the
    // tableau is already ordered on every later cell, so the entry sitting
    // at that cell sinks along minimal bottom/right neighbours until it no
    // longer exceeds them. Each exchange is one recorded step.
    const int budget = n * (n * (n - 1) / 2);
    for (int s = n; s >= 1; --s) {
        int pos = rank_cells_[s - 1];
        const int moving = work_[pos];
        while (true) {
            const int dn = tables_.down(pos);
            const int rt = tables_.right(pos);
            int next = -1;
            if (dn >= 0)
                next = dn;
            if (rt >= 0 && (next < 0 || work_[rt] < work_[next]))
                next = rt;
            if (next < 0 || moving < work_[next])
                break;
            const int small = work_[next];
            work_[pos] = small;
            work_[next] = moving;
            steps_.push_back({small, moving, pos, next});
            if (static_cast<int>(steps_.size()) > budget)
                throw InvariantError("sort exceeded its step budget");
            pos = next;
        }
        mu_[s - 1] = static_cast<int>(steps_.size());
        drop_cells_[moving - 1] = pos;
    }
}

SortTrace sort(const Tableau& t, const Tableau& u) {
    require_sortable(t, u);
    Sorter sorter(t.shape(), u);
    sorter.run(t.entries());

    SortTrace trace{u, t,
                    Tableau(t.shape(), std::vector<int>(sorter.result().begin(), sorter.result().end()),
                            Tableau::Unchecked{}),
                    {},
                    std::vector<int>(sorter.mu().begin(), sorter.mu().end())};
    trace.steps.reserve(sorter.steps().size());
    int index = 1;
    for (const Sorter::Step& s : sorter.steps())
        trace.steps.push_back({index++, s.small, s.large, sorter.tables().cell(s.from),
                               sorter.tables().cell(s.to)});
    return trace;
}

std::vector<DropRecord> drop_records(const SortTrace& trace) {
    const int n = trace.initial.n();
    std::vector<DropRecord> records;
    // ranks are handled from n downwards, so this emits records in step order
    for (int s = n; s >= 1; --s) {
        const int first = trace.mu_at(s + 1);
        const int last = trace.mu_at(s);
        if (first == last)
            continue;
        DropRecord rec;
        rec.entry = trace.steps[static_cast<std::size_t>(first)].large;
        rec.start = trace.steps[static_cast<std::size_t>(first)].from;
        rec.path.push_back(rec.start);
        for (int i = first; i < last; ++i)
            rec.path.push_back(trace.steps[static_cast<std::size_t>(i)].to);
        rec.max_height = cell_stats(trace.initial.shape(), rec.path.back()).height;
        records.push_back(std::move(rec));
    }
    return records;
}

int beta(const SortTrace& trace, int b) {
    const int n = trace.initial.n();
    if (b < 1 || b > n)
        throw std::domain_error("entry outside 1..n");
    const Cell start = trace.initial.cell_of(b);
    const int s = trace.order.at(start);
    const int first = trace.mu_at(s + 1);
    const int last = trace.mu_at(s);
    Cell peak = start;
    if (first != last)
        peak = trace.steps[static_cast<std::size_t>(last) - 1].to;
    return cell_stats(trace.initial.shape(), peak).height;
}

} // namespace npslab
