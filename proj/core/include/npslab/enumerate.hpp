#pragma once

#include "npslab/partition.hpp"
#include "npslab/tableau.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace npslab {

// n! as a machine word; throws CapacityError for n > 20.
std::uint64_t filling_count(int n);

// Lexicographic rank <-> permutation of {1..n} via the factorial number
// system. Rank 0 is the identity.
std::vector<int> unrank_permutation(int n, std::uint64_t rank);
std::uint64_t rank_permutation(std::span<const int> perm);

// Visits the fillings with ranks [begin, end). The entry sequence handed to
// the callback is the filling read in the canonical column cell order;
// consecutive ranks are consecutive in lexicographic order of that
// sequence, so disjoint rank ranges partition the n! fillings and can be
// consumed in parallel.
void for_each_filling(const Partition& p, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::span<const int>)>& fn);

// Streaming interface over the same order.
class FillingStream {
public:
    explicit FillingStream(Partition p);
    FillingStream(Partition p, std::uint64_t begin_rank, std::uint64_t end_rank);

    std::optional<Tableau> next();
    std::uint64_t total() const { return end_ - begin_; }

private:
    Partition shape_;
    std::vector<int> current_;
    std::uint64_t begin_, end_, at_;
};

// Standard Young tableaux, generated by placing 1..n one at a time into the
// first admissible cell positions (candidate cells tried in the canonical
// column cell order). Deterministic; count equals syt_count.
void for_each_syt(const Partition& p, const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> enumerate_syt(const Partition& p);

// Uniform random filling: Fisher-Yates over the canonical cell order with
// an unbiased bounded draw, so results depend only on the generator's
// output sequence (reproducible across platforms for mt19937_64).
void random_filling_entries(int n, std::mt19937_64& rng, std::vector<int>& out);
Tableau random_filling(const Partition& p, std::mt19937_64& rng);

// Generator for the index-th sample of a seeded run. Each sample gets its
// own generator (seed mixed with the index through splitmix64), which makes
// sampled aggregation independent of how samples are split across workers.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

} // namespace npslab
