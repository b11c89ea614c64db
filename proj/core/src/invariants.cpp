#include "npslab/invariants.hpp"

#include "npslab/shape_tables.hpp"

#include <algorithm>
#include <map>

namespace npslab {

namespace {

// Largest U-rank of a cell violating the order condition, 0 if none.
int worst_violating_rank(const ShapeTables& tables, const std::vector<int>& entries,
                         const std::vector<int>& rank_of_cell) {
    int worst = 0;
    for (int idx = 0; idx < tables.size(); ++idx) {
        const int dn = tables.down(idx);
        const int rt = tables.right(idx);
        int smallest = 0;
        if (dn >= 0)
            smallest = entries[dn];
        if (rt >= 0 && (smallest == 0 || entries[rt] < smallest))
            smallest = entries[rt];
        if (smallest != 0 && entries[idx] > smallest)
            worst = std::max(worst, rank_of_cell[idx]);
    }
    return worst;
}

} // namespace

TraceCheckResult check_trace_invariants(const SortTrace& trace) {
    TraceCheckResult out;
    const Partition& shape = trace.initial.shape();
    const ShapeTables tables(shape);
    const int n = tables.size();
    const int r = trace.step_count();

    auto fail = [&](std::string what) {
        if (out.detail.empty())
            out.detail = std::move(what);
    };

    std::vector<int> rank_of_cell(n);
    for (int idx = 0; idx < n; ++idx)
        rank_of_cell[idx] = trace.order.at_index(idx);

    // Replay the recorded transpositions as permutations composed onto the
    // initial tableau, tracking entry positions.
    std::vector<int> entries = trace.initial.entries();
    std::vector<int> pos(n + 1);
    for (int idx = 0; idx < n; ++idx)
        pos[entries[idx]] = idx;

    std::vector<int> worst(r + 1);
    worst[0] = worst_violating_rank(tables, entries, rank_of_cell);

    out.composition_ok = true;
    out.heights_ok = true;
    for (int k = 1; k <= r; ++k) {
        const Transposition& st = trace.steps[static_cast<std::size_t>(k) - 1];
        if (st.index != k || st.small >= st.large || st.small < 1 || st.large > n) {
            out.composition_ok = false;
            fail("malformed step " + std::to_string(k));
            break;
        }
        const int small_at = pos[st.small];
        const int large_at = pos[st.large];
        if (tables.cell(large_at) != st.from || tables.cell(small_at) != st.to) {
            out.composition_ok = false;
            fail("step " + std::to_string(k) + " cells do not match the entry positions");
            break;
        }
        const bool adjacent = tables.down(large_at) == small_at || tables.right(large_at) == small_at;
        const bool one_closer = tables.height(large_at) + 1 == tables.height(small_at);
        if (!adjacent || !one_closer) {
            out.heights_ok = false;
            fail("step " + std::to_string(k) + " does not move one cell away from the corner");
        }
        std::swap(entries[small_at], entries[large_at]);
        std::swap(pos[st.small], pos[st.large]);
        worst[k] = worst_violating_rank(tables, entries, rank_of_cell);
    }
    if (out.composition_ok && entries != trace.result.entries()) {
        out.composition_ok = false;
        fail("composed transpositions do not reproduce the result");
    }

    out.result_standard = trace.result.is_standard();
    if (!out.result_standard)
        fail("result is not standard");

    // Exchanges that carry a fixed entry outwards must form one run of
    // consecutive steps with strictly increasing partners.
    out.drops_consecutive = true;
    std::vector<int> last_step(n + 1, 0), last_small(n + 1, 0);
    for (const Transposition& st : trace.steps) {
        if (last_step[st.large] != 0 &&
            (st.index != last_step[st.large] + 1 || st.small <= last_small[st.large])) {
            out.drops_consecutive = false;
            fail("drop of entry " + std::to_string(st.large) + " is not one increasing run");
            break;
        }
        last_step[st.large] = st.index;
        last_small[st.large] = st.small;
    }

    out.pairs_unique = true;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(trace.steps.size());
    for (const Transposition& st : trace.steps)
        pairs.emplace_back(st.small, st.large);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
        out.pairs_unique = false;
        fail("a pair of entries was exchanged twice");
    }

    // mu recomputed from its definition: the first step index from which the
    // tableau is ordered on all cells of rank >= s.
    out.mu_ok = out.composition_ok && static_cast<int>(trace.mu.size()) == n + 1;
    if (out.mu_ok) {
        for (int s = 1; s <= n + 1 && out.mu_ok; ++s) {
            int expect = -1;
            for (int k = 0; k <= r; ++k) {
                if (worst[k] < s) {
                    expect = k;
                    break;
                }
            }
            if (trace.mu_at(s) != expect) {
                out.mu_ok = false;
                fail("mu[" + std::to_string(s) + "] = " + std::to_string(trace.mu_at(s)) +
                     ", definition gives " + std::to_string(expect));
            }
        }
    } else if (out.detail.empty()) {
        fail("mu skipped: replay failed or wrong length");
    }

    return out;
}

bool check_swap_stability(const Tableau& t, const Tableau& u, int b, std::string* detail) {
    const int n = t.n();
    if (b < 1 || b >= n)
        throw std::domain_error("need 1 <= b < n");
    auto report = [&](const std::string& what) {
        if (detail)
            *detail = what;
        return false;
    };

    std::vector<int> swapped = t.entries();
    for (int& e : swapped) {
        if (e == b)
            e = b + 1;
        else if (e == b + 1)
            e = b;
    }
    const Tableau t_star(t.shape(), std::move(swapped), Tableau::Unchecked{});

    const SortTrace trace = sort(t, u);
    const SortTrace trace_star = sort(t_star, u);

    const int rank_b = u.at(t.cell_of(b));
    const int rank_b1 = u.at(t.cell_of(b + 1));
    const int lockstep_until = trace.mu_at(std::min(rank_b, rank_b1));

    // Both runs replayed side by side; they must agree up to the swap of b
    // and b+1 for every prefix up to the watermark of the earlier cell.
    if (trace_star.step_count() < lockstep_until)
        return report("second trace is shorter than the lockstep window");
    std::vector<int> a = t.entries();
    std::vector<int> c = t_star.entries();
    auto equal_mod_swap = [&]() {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int e = c[i];
            if (e == b)
                e = b + 1;
            else if (e == b + 1)
                e = b;
            if (a[i] != e)
                return false;
        }
        return true;
    };
    auto apply = [&](std::vector<int>& v, const Transposition& st) {
        int* p = nullptr;
        int* q = nullptr;
        for (int& e : v) {
            if (e == st.small)
                p = &e;
            else if (e == st.large)
                q = &e;
        }
        std::swap(*p, *q);
    };
    if (!equal_mod_swap())
        return report("inputs do not differ by the swap"); // cannot happen
    for (int k = 1; k <= lockstep_until; ++k) {
        apply(a, trace.steps[static_cast<std::size_t>(k) - 1]);
        apply(c, trace_star.steps[static_cast<std::size_t>(k) - 1]);
        if (!equal_mod_swap())
            return report("traces diverge at step " + std::to_string(k));
    }

    // The drop of b in one run must be the drop of b+1 in the other, with
    // identical partners and cells.
    auto drop_of = [](const SortTrace& tr, int entry) {
        std::vector<std::tuple<int, Cell, Cell>> d;
        for (const Transposition& st : tr.steps)
            if (st.large == entry)
                d.emplace_back(st.small, st.from, st.to);
        return d;
    };
    if (drop_of(trace, b) != drop_of(trace_star, b + 1))
        return report("drop of " + std::to_string(b) + " differs from drop of " +
                      std::to_string(b + 1) + " in the swapped run");
    if (drop_of(trace, b + 1) != drop_of(trace_star, b))
        return report("drop of " + std::to_string(b + 1) + " differs from drop of " +
                      std::to_string(b) + " in the swapped run");
    return true;
}

} // namespace npslab
