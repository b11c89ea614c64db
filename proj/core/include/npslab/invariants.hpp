#pragma once

#include "npslab/sort.hpp"

#include <string>

namespace npslab {

// Structural checks on a single trace. Each check replays or inspects the
// recorded steps; none of them reuses the engine's internal bookkeeping.
struct TraceCheckResult {
    bool composition_ok = false;    // applying the steps to T yields the result
    bool heights_ok = false;        // every step moves the smaller entry one closer to the corner
    bool drops_consecutive = false; // per entry: exchanges with smaller entries are one run, increasing
    bool pairs_unique = false;      // no pair of entries is exchanged twice
    bool mu_ok = false;             // mu matches its definition, recomputed from scratch
    bool result_standard = false;
    std::string detail;             // first failure, empty when everything holds

    bool all() const {
        return composition_ok && heights_ok && drops_consecutive && pairs_unique && mu_ok &&
               result_standard;
    }
};

TraceCheckResult check_trace_invariants(const SortTrace& trace);

// Exchanging the entries b and b+1 in t must leave the two traces in
// lockstep (up to that swap) until both entries have dropped, and must give
// the same multiset of exchanges with smaller entries at the same cells.
bool check_swap_stability(const Tableau& t, const Tableau& u, int b, std::string* detail = nullptr);

} // namespace npslab
