#pragma once

#include "npslab/bigint.hpp"
#include "npslab/enumerate.hpp"
#include "npslab/partition.hpp"
#include "npslab/sort.hpp"
#include "npslab/tableau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace npslab {

// Exchange counts aggregated over a set of fillings. Indexing convention
// for the local tables follows the flow of the smaller entry: it moves
// from the outer cell x to the inner cell y of the pair, y being the left
// (dir 0) or upper (dir 1) neighbour of x.
struct ExchangeTables {
    int n = 0;

    // m(a,b): fillings in which a and b are exchanged; 0 for a >= b.
    // Row-major n x n; this is also the exchange matrix.
    std::vector<std::int64_t> pair;

    // m(a,b,x,y) keyed as ((a-1)*n + (b-1)) * (2n) + 2*outer + dir.
    std::vector<std::int64_t> local_pair;

    // Common values m(a) and m(a,x,y), independent of the larger partner.
    // Populated for exhaustive aggregation only (the independence is an
    // aggregate identity, not a per-sample one).
    bool common_valid = false;
    std::vector<std::int64_t> common;       // size n, last value 0 (no partner exists)
    std::vector<std::int64_t> local_common; // (a-1)*(2n) + 2*outer + dir

    std::int64_t pair_count(int a, int b) const { return pair[(a - 1) * n + (b - 1)]; }
    std::int64_t local_pair_count(int a, int b, int outer, int dir) const {
        return local_pair[(static_cast<std::size_t>(a - 1) * n + (b - 1)) * (2 * n) + 2 * outer + dir];
    }
};

// z(W): how many fillings sort to W. Keys are the entries of W in the
// canonical column cell order.
struct DistributionVector {
    std::map<std::vector<int>, std::int64_t> counts;
};

struct HeightTotals {
    BigInt alpha = 0;                        // (n-1)! * sum of heights, 0 for the empty shape
    std::vector<std::int64_t> omega_entry;   // total terminal height per entry
    std::vector<std::int64_t> omega_cell;    // (b-1)*n + cell: terminal position counts
    std::vector<std::int64_t> beta_entry;    // total maximal height per entry
};

struct DropTable {
    int n = 0;
    std::vector<std::int64_t> counts; // (b-1)*n + cell
    std::int64_t at(int b, int cell) const { return counts[static_cast<std::size_t>(b - 1) * n + cell]; }
};

struct SignedExitTable {
    int n = 0;
    bool valid = false;               // derived tables exist for exhaustive runs only
    std::vector<std::int64_t> values; // (b-1)*n + cell, may be negative
    std::int64_t at(int b, int cell) const { return values[static_cast<std::size_t>(b - 1) * n + cell]; }
};

enum class AggregateMode { exhaustive, sampled };

struct AggregateResult {
    Partition shape;
    Tableau order;
    AggregateMode mode = AggregateMode::exhaustive;
    std::uint64_t sorts = 0;
    std::uint64_t seed = 0; // sampled mode only

    std::int64_t total_steps = 0;
    std::int64_t total_steps_squared = 0;

    ExchangeTables exchange;
    DistributionVector dist;
    HeightTotals heights;
    DropTable drop;
    SignedExitTable exits;

    // Sampled-mode estimate of the mean step count and its standard error.
    double mean_steps() const;
    double stderr_of_mean() const;
};

// A partitionable source of fillings of one shape.
class FillingSource {
public:
    virtual ~FillingSource() = default;
    virtual const Partition& shape() const = 0;
    virtual std::uint64_t count() const = 0;
    virtual bool exhaustive() const = 0;
    virtual void visit(std::uint64_t begin, std::uint64_t end,
                       const std::function<void(std::span<const int>)>& fn) const = 0;
};

class ExhaustiveFillings final : public FillingSource {
public:
    explicit ExhaustiveFillings(Partition p);
    const Partition& shape() const override { return shape_; }
    std::uint64_t count() const override { return count_; }
    bool exhaustive() const override { return true; }
    void visit(std::uint64_t begin, std::uint64_t end,
               const std::function<void(std::span<const int>)>& fn) const override;

private:
    Partition shape_;
    std::uint64_t count_;
};

class SampledFillings final : public FillingSource {
public:
    SampledFillings(Partition p, std::uint64_t samples, std::uint64_t seed);
    const Partition& shape() const override { return shape_; }
    std::uint64_t count() const override { return samples_; }
    bool exhaustive() const override { return false; }
    std::uint64_t seed() const { return seed_; }
    void visit(std::uint64_t begin, std::uint64_t end,
               const std::function<void(std::span<const int>)>& fn) const override;

private:
    Partition shape_;
    std::uint64_t samples_;
    std::uint64_t seed_;
};

// One pass over the source: sorts every filling and tallies every table.
// Data-parallel over disjoint rank ranges; per-worker tables are merged by
// addition, so the result does not depend on the worker count.
AggregateResult aggregate(const Tableau& order, const FillingSource& source, int workers = 0);

AggregateResult aggregate_exhaustive(const Partition& p, const Tableau& order, int workers = 0);
AggregateResult aggregate_sampled(const Partition& p, const Tableau& order, std::uint64_t samples,
                                  std::uint64_t seed, int workers = 0);

// Distribution vector only (cheaper; used for symmetry checks).
DistributionVector distribution_vector(const Partition& p, const Tableau& order, int workers = 0);

// Mean number of steps over all n! fillings, exact.
BigRat complexity(std::int64_t total_steps, int n);

// Same number from the exchange counts: sum (n-a) m(a) / n!. Verifies the
// partner-independence of the pair counts and throws InvariantError when it
// fails.
BigRat complexity_from_exchange(const ExchangeTables& tables);

// Same number from the height totals: sum_b (beta(b) - alpha) / n!.
BigRat complexity_from_beta(const HeightTotals& totals, int n);

// True iff every standard tableau is produced exactly n!/f times.
bool is_uniform(const DistributionVector& dist, const Partition& p);

} // namespace npslab
