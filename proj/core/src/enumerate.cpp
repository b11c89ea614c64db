#include "npslab/enumerate.hpp"

#include "npslab/errors.hpp"
#include "npslab/shape_tables.hpp"

#include <algorithm>
#include <limits>

namespace npslab {

std::uint64_t filling_count(int n) {
    if (n < 0)
        throw std::domain_error("negative n");
    if (n > 20)
        throw CapacityError("n! does not fit 64 bits for n > 20");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<std::uint64_t> factorials(n, 1);
    for (int i = 1; i < n; ++i)
        factorials[i] = factorials[i - 1] * static_cast<std::uint64_t>(i);

    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i)
        pool[i] = i + 1;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorials[n - 1 - i];
        const auto digit = static_cast<std::size_t>(rank / f);
        rank %= f;
        if (digit >= pool.size())
            throw std::domain_error("permutation rank out of range");
        perm[i] = pool[digit];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return perm;
}

std::uint64_t rank_permutation(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::uint64_t rank = 0;
    std::uint64_t f = filling_count(n);
    for (int i = 0; i < n; ++i) {
        f /= static_cast<std::uint64_t>(n - i);
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i])
                ++smaller_later;
        rank += f * static_cast<std::uint64_t>(smaller_later);
    }
    return rank;
}

void for_each_filling(const Partition& p, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::span<const int>)>& fn) {
    const std::uint64_t total = filling_count(p.n());
    if (begin > end || end > total)
        throw std::domain_error("filling rank range out of bounds");
    if (begin == end)
        return;
    std::vector<int> current = unrank_permutation(p.n(), begin);
    for (std::uint64_t r = begin; r != end; ++r) {
        fn(current);
        std::next_permutation(current.begin(), current.end());
    }
}

FillingStream::FillingStream(Partition p) : FillingStream(std::move(p), 0, 0) {
    end_ = filling_count(shape_.n());
}

FillingStream::FillingStream(Partition p, std::uint64_t begin_rank, std::uint64_t end_rank)
    : shape_(std::move(p)), begin_(begin_rank), end_(end_rank), at_(begin_rank) {
    const std::uint64_t total = filling_count(shape_.n());
    if (begin_ > end_ || end_ > total)
        throw std::domain_error("filling rank range out of bounds");
    if (begin_ < total)
        current_ = unrank_permutation(shape_.n(), begin_);
}

std::optional<Tableau> FillingStream::next() {
    if (at_ >= end_)
        return std::nullopt;
    Tableau t(shape_, current_, Tableau::Unchecked{});
    ++at_;
    if (at_ < end_)
        std::next_permutation(current_.begin(), current_.end());
    return t;
}

namespace {

// Entry k may be placed on a cell whose up and left neighbours are already
// filled; placing 1..n in increasing order then yields exactly the standard
// tableaux.
void syt_rec(const ShapeTables& tables, std::vector<int>& entries, int next,
             const std::function<void(const Tableau&)>& fn) {
    const int n = tables.size();
    if (next > n) {
        fn(Tableau(tables.shape(), entries, Tableau::Unchecked{}));
        return;
    }
    for (int idx = 0; idx < n; ++idx) {
        if (entries[idx] != 0)
            continue;
        const int up = tables.up(idx);
        const int left = tables.left(idx);
        if ((up >= 0 && entries[up] == 0) || (left >= 0 && entries[left] == 0))
            continue;
        entries[idx] = next;
        syt_rec(tables, entries, next + 1, fn);
        entries[idx] = 0;
    }
}

} // namespace

void for_each_syt(const Partition& p, const std::function<void(const Tableau&)>& fn) {
    const ShapeTables tables(p);
    std::vector<int> entries(p.n(), 0);
    syt_rec(tables, entries, 1, fn);
}

std::vector<Tableau> enumerate_syt(const Partition& p) {
    std::vector<Tableau> out;
    for_each_syt(p, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

namespace {

// Unbiased draw from [0, bound) by rejecting the wrap-around remainder.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t v = rng();
    while (v < threshold)
        v = rng();
    return v % bound;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

void random_filling_entries(int n, std::mt19937_64& rng, std::vector<int>& out) {
    out.resize(n);
    for (int i = 0; i < n; ++i)
        out[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(out[i], out[j]);
    }
}

Tableau random_filling(const Partition& p, std::mt19937_64& rng) {
    std::vector<int> entries;
    random_filling_entries(p.n(), rng, entries);
    return Tableau(p, std::move(entries), Tableau::Unchecked{});
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    const std::uint64_t mixed = splitmix64(state) ^ splitmix64(state);
    return std::mt19937_64(mixed);
}

} // namespace npslab
