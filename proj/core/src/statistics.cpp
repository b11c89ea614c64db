#include "npslab/statistics.hpp"

#include "npslab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace npslab {

double AggregateResult::mean_steps() const {
    return sorts == 0 ? 0.0 : static_cast<double>(total_steps) / static_cast<double>(sorts);
}

double AggregateResult::stderr_of_mean() const {
    if (sorts < 2)
        return 0.0;
    const double n = static_cast<double>(sorts);
    const double mean = mean_steps();
    const double variance =
        (static_cast<double>(total_steps_squared) - n * mean * mean) / (n - 1.0);
    return std::sqrt(std::max(0.0, variance) / n);
}

ExhaustiveFillings::ExhaustiveFillings(Partition p)
    : shape_(std::move(p)), count_(filling_count(shape_.n())) {}

void ExhaustiveFillings::visit(std::uint64_t begin, std::uint64_t end,
                               const std::function<void(std::span<const int>)>& fn) const {
    for_each_filling(shape_, begin, end, fn);
}

SampledFillings::SampledFillings(Partition p, std::uint64_t samples, std::uint64_t seed)
    : shape_(std::move(p)), samples_(samples), seed_(seed) {}

void SampledFillings::visit(std::uint64_t begin, std::uint64_t end,
                            const std::function<void(std::span<const int>)>& fn) const {
    std::vector<int> entries;
    for (std::uint64_t k = begin; k != end; ++k) {
        std::mt19937_64 rng = sample_rng(seed_, k);
        random_filling_entries(shape_.n(), rng, entries);
        fn(entries);
    }
}

namespace {

// Per-worker tallies; plain 64-bit sums merged by addition.
struct Tallies {
    std::int64_t total_steps = 0;
    std::int64_t total_steps_squared = 0;
    std::vector<std::int64_t> pair;       // n*n
    std::vector<std::int64_t> local_pair; // n*n*2n
    std::vector<std::int64_t> omega_cell; // n*n
    std::vector<std::int64_t> beta_entry; // n
    std::vector<std::int64_t> drop;       // n*n
    std::map<std::vector<int>, std::int64_t> dist;

    explicit Tallies(int n)
        : pair(static_cast<std::size_t>(n) * n, 0),
          local_pair(static_cast<std::size_t>(n) * n * 2 * n, 0),
          omega_cell(static_cast<std::size_t>(n) * n, 0), beta_entry(n, 0),
          drop(static_cast<std::size_t>(n) * n, 0) {}

    void merge(const Tallies& other) {
        total_steps += other.total_steps;
        total_steps_squared += other.total_steps_squared;
        auto add = [](std::vector<std::int64_t>& into, const std::vector<std::int64_t>& from) {
            for (std::size_t i = 0; i < into.size(); ++i)
                into[i] += from[i];
        };
        add(pair, other.pair);
        add(local_pair, other.local_pair);
        add(omega_cell, other.omega_cell);
        add(beta_entry, other.beta_entry);
        add(drop, other.drop);
        for (const auto& [key, count] : other.dist)
            dist[key] += count;
    }
};

void tally_one(Tallies& t, const Sorter& sorter, std::vector<int>& key_scratch) {
    const ShapeTables& tables = sorter.tables();
    const int n = tables.size();
    const auto r = static_cast<std::int64_t>(sorter.steps().size());
    t.total_steps += r;
    t.total_steps_squared += r * r;

    const std::size_t stride = static_cast<std::size_t>(2) * n;
    for (const Sorter::Step& st : sorter.steps()) {
        t.pair[static_cast<std::size_t>(st.small - 1) * n + (st.large - 1)] += 1;
        // the smaller entry moved from the outer cell st.to to the inner st.from
        const int dir = tables.left(st.to) == st.from ? 0 : 1;
        t.local_pair[(static_cast<std::size_t>(st.small - 1) * n + (st.large - 1)) * stride +
                     2 * static_cast<std::size_t>(st.to) + dir] += 1;
    }
    for (int b = 1; b <= n; ++b) {
        const int cell = sorter.drop_cell(b);
        t.drop[static_cast<std::size_t>(b - 1) * n + cell] += 1;
        t.beta_entry[b - 1] += tables.height(cell);
    }
    const auto result = sorter.result();
    for (int idx = 0; idx < n; ++idx)
        t.omega_cell[static_cast<std::size_t>(result[idx] - 1) * n + idx] += 1;
    key_scratch.assign(result.begin(), result.end());
    t.dist[key_scratch] += 1;
}

int resolve_workers(int workers) {
    if (workers > 0)
        return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Tallies run_tallies(const Tableau& order, const FillingSource& source, int workers) {
    const Partition& shape = source.shape();
    if (order.shape() != shape)
        throw std::invalid_argument("order shape does not match the source shape");
    if (!order.is_standard())
        throw std::invalid_argument("sorting order must be a standard tableau");

    const int n = shape.n();
    const std::uint64_t total = source.count();
    if (n > 1 &&
        total > static_cast<std::uint64_t>(INT64_MAX) / (static_cast<std::uint64_t>(n) * (n - 1) / 2))
        throw CapacityError("tallies would overflow 64-bit accumulators");

    const int worker_count = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_workers(workers)), std::max<std::uint64_t>(1, total)));
    std::vector<Tallies> partials;
    partials.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w)
        partials.emplace_back(n);

    auto work = [&](int w) {
        const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / worker_count;
        const std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / worker_count;
        Sorter sorter(shape, order);
        Tallies& mine = partials[static_cast<std::size_t>(w)];
        std::vector<int> key_scratch;
        source.visit(begin, end, [&](std::span<const int> entries) {
            sorter.run(entries);
            tally_one(mine, sorter, key_scratch);
        });
    };

    if (worker_count == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w)
            threads.emplace_back(work, w);
        for (auto& th : threads)
            th.join();
    }

    Tallies merged = std::move(partials.front());
    for (std::size_t w = 1; w < partials.size(); ++w)
        merged.merge(partials[w]);
    return merged;
}

// Reduce the partner-indexed tables to the common values, verifying that
// every larger partner gives the same count.
void derive_common(ExchangeTables& ex) {
    const int n = ex.n;
    const std::size_t stride = static_cast<std::size_t>(2) * n;
    ex.common.assign(n, 0);
    ex.local_common.assign(static_cast<std::size_t>(n) * stride, 0);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (ex.pair_count(a, b) != ex.pair_count(a, a + 1))
                throw InvariantError("exchange count m(" + std::to_string(a) + "," +
                                     std::to_string(b) + ") depends on the partner");
            for (std::size_t k = 0; k < stride; ++k) {
                const auto at = [&](int bb) {
                    return ex.local_pair[(static_cast<std::size_t>(a - 1) * n + (bb - 1)) * stride + k];
                };
                if (at(b) != at(a + 1))
                    throw InvariantError("local exchange count at entry " + std::to_string(a) +
                                         " depends on the partner");
            }
        }
        if (a < n) {
            ex.common[a - 1] = ex.pair_count(a, a + 1);
            for (std::size_t k = 0; k < stride; ++k)
                ex.local_common[static_cast<std::size_t>(a - 1) * stride + k] =
                    ex.local_pair[(static_cast<std::size_t>(a - 1) * n + a) * stride + k];
        }
    }
    ex.common_valid = true;
}

SignedExitTable derive_exits(const ExchangeTables& ex, const ShapeTables& tables) {
    const int n = ex.n;
    SignedExitTable exits;
    exits.n = n;
    exits.valid = true;
    exits.values.assign(static_cast<std::size_t>(n) * n, 0);
    const std::size_t stride = static_cast<std::size_t>(2) * n;
    for (int b = 1; b <= n; ++b) {
        const std::int64_t* local = ex.local_common.data() + static_cast<std::size_t>(b - 1) * stride;
        for (int x = 0; x < n; ++x) {
            std::int64_t v = local[2 * x + 0] + local[2 * x + 1]; // b leaves x inwards
            if (const int dn = tables.down(x); dn >= 0)
                v -= local[2 * dn + 1]; // b enters x from below
            if (const int rt = tables.right(x); rt >= 0)
                v -= local[2 * rt + 0]; // b enters x from the right
            exits.values[static_cast<std::size_t>(b - 1) * n + x] = v;
        }
    }
    return exits;
}

} // namespace

AggregateResult aggregate(const Tableau& order, const FillingSource& source, int workers) {
    const Partition& shape = source.shape();
    const int n = shape.n();
    Tallies t = run_tallies(order, source, workers);

    AggregateResult out{shape, order};
    out.mode = source.exhaustive() ? AggregateMode::exhaustive : AggregateMode::sampled;
    if (const auto* sampled = dynamic_cast<const SampledFillings*>(&source))
        out.seed = sampled->seed();
    out.sorts = source.count();
    out.total_steps = t.total_steps;
    out.total_steps_squared = t.total_steps_squared;

    out.exchange.n = n;
    out.exchange.pair = std::move(t.pair);
    out.exchange.local_pair = std::move(t.local_pair);
    out.dist.counts = std::move(t.dist);
    out.heights.alpha = n == 0 ? BigInt(0) : total_initial_height(shape);
    out.heights.omega_cell = std::move(t.omega_cell);
    out.heights.beta_entry = std::move(t.beta_entry);
    out.drop.n = n;
    out.drop.counts = std::move(t.drop);

    const ShapeTables tables(shape);
    out.heights.omega_entry.assign(n, 0);
    for (int b = 1; b <= n; ++b) {
        std::int64_t total = 0;
        for (int x = 0; x < n; ++x)
            total += out.heights.omega_cell[static_cast<std::size_t>(b - 1) * n + x] *
                     tables.height(x);
        out.heights.omega_entry[b - 1] = total;
    }

    if (out.mode == AggregateMode::exhaustive) {
        derive_common(out.exchange);
        out.exits = derive_exits(out.exchange, tables);
    } else {
        out.exits.n = n;
        out.exits.valid = false;
    }
    return out;
}

AggregateResult aggregate_exhaustive(const Partition& p, const Tableau& order, int workers) {
    return aggregate(order, ExhaustiveFillings(p), workers);
}

AggregateResult aggregate_sampled(const Partition& p, const Tableau& order, std::uint64_t samples,
                                  std::uint64_t seed, int workers) {
    return aggregate(order, SampledFillings(p, samples, seed), workers);
}

DistributionVector distribution_vector(const Partition& p, const Tableau& order, int workers) {
    if (order.shape() != p)
        throw std::invalid_argument("order shape mismatch");
    if (!order.is_standard())
        throw std::invalid_argument("sorting order must be a standard tableau");
    const std::uint64_t total = filling_count(p.n());
    const int worker_count =
        std::min<std::uint64_t>(std::max(1, resolve_workers(workers)), std::max<std::uint64_t>(1, total));

    std::vector<std::map<std::vector<int>, std::int64_t>> partials(
        static_cast<std::size_t>(worker_count));
    auto work = [&](int w) {
        const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / worker_count;
        const std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / worker_count;
        Sorter sorter(p, order);
        std::vector<int> key;
        auto& mine = partials[static_cast<std::size_t>(w)];
        for_each_filling(p, begin, end, [&](std::span<const int> entries) {
            sorter.run(entries);
            key.assign(sorter.result().begin(), sorter.result().end());
            mine[key] += 1;
        });
    };
    if (worker_count == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < worker_count; ++w)
            threads.emplace_back(work, w);
        for (auto& th : threads)
            th.join();
    }
    DistributionVector out;
    out.counts = std::move(partials.front());
    for (std::size_t w = 1; w < partials.size(); ++w)
        for (const auto& [key, count] : partials[w])
            out.counts[key] += count;
    return out;
}

BigRat complexity(std::int64_t total_steps, int n) {
    return BigRat(BigInt(total_steps), big_factorial(n));
}

BigRat complexity_from_exchange(const ExchangeTables& tables) {
    const int n = tables.n;
    // re-verify partner independence even if common values were derived
    for (int a = 1; a < n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (tables.pair_count(a, b) != tables.pair_count(a, a + 1))
                throw InvariantError("exchange counts are not partner-independent");
    BigInt weighted = 0;
    for (int a = 1; a < n; ++a)
        weighted += BigInt(n - a) * tables.pair_count(a, a + 1);
    return BigRat(weighted, big_factorial(n));
}

BigRat complexity_from_beta(const HeightTotals& totals, int n) {
    BigInt sum = 0;
    for (int b = 1; b <= n; ++b)
        sum += BigInt(totals.beta_entry[b - 1]) - totals.alpha;
    return BigRat(sum, big_factorial(n));
}

bool is_uniform(const DistributionVector& dist, const Partition& p) {
    const BigInt f = syt_count(p);
    const BigInt expected = big_factorial(p.n()) / f;
    if (BigInt(static_cast<long long>(dist.counts.size())) != f)
        return false;
    for (const auto& [key, count] : dist.counts)
        if (BigInt(count) != expected)
            return false;
    return true;
}

} // namespace npslab
