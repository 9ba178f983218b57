#pragma once

// Index sets I of {1, ..., n-2} and r-admissibility: the signed sum
// s = sum_i eps_i r_i (eps_i = +1 on I, -1 off I) must close a nondegenerate
// triangle with the distinguished pair r_{n-1}, r_n, i.e.
//
//     s + r_{n-1} - r_n > 0,   s - r_{n-1} + r_n > 0,   -s + r_{n-1} + r_n > 0.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "polycob/lengths.hpp"

namespace polycob {

/// Subset of {1, ..., n-2} stored as a bitmask; bit i set means i is in the set.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}

    static IndexSet of(std::initializer_list<int> indices) {
        return of(std::span<const int>(indices.begin(), indices.size()));
    }
    static IndexSet of(std::span<const int> indices) {
        std::uint64_t m = 0;
        for (int i : indices) {
            if (i < 1 || i > 62) throw InputError("index " + std::to_string(i) + " out of range");
            m |= std::uint64_t{1} << i;
        }
        return IndexSet(m);
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool contains(int i) const noexcept {
        return i >= 0 && i < 64 && ((mask_ >> i) & 1U);
    }

    /// Complement within {1, ..., n-2}.
    constexpr IndexSet complement(int n) const noexcept { return IndexSet(valid_bits(n) & ~mask_); }

    /// Sorted 1-based members.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    /// Mask of the positions an index set over an n-gon may use.
    static constexpr std::uint64_t valid_bits(int n) noexcept {
        if (n < 3) return 0;
        return ((std::uint64_t{1} << (n - 2)) - 1) << 1;
    }

    friend constexpr auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Every r-admissible index set, sorted by mask, with a per-cardinality count.
struct AdmissibleFamily {
    int n = 0;
    std::vector<IndexSet> sets;
    std::vector<std::uint64_t> histogram;  ///< histogram[l] = #admissible sets of size l, l = 0..n-2
};

struct EnumerationOptions {
    unsigned threads = 1;
};

/// Direct exact evaluation of the three strict triangle inequalities.
inline bool is_admissible(const LengthVector& r, IndexSet set) {
    const int n = r.size();
    if ((set.mask() & ~IndexSet::valid_bits(n)) != 0)
        throw InputError("index set has members outside {1, ..., n-2}");
    Rational s = 0;
    for (int i = 1; i <= n - 2; ++i) {
        if (set.contains(i))
            s += r.at(i);
        else
            s -= r.at(i);
    }
    const Rational& a = r.at(n - 1);
    const Rational& b = r.at(n);
    return s + a - b > 0 && s - a + b > 0 && -s + a + b > 0;
}

namespace detail {

/// Gray-code sweep over the low `free_bits` bits with the higher bits fixed
/// to `prefix`. Internal masks use bit j for index j+1. The running signed
/// sum changes by +-2 w_j per step; `hit(mask, popcount)` is called for every
/// admissible mask.
template <class Int, class Hit>
void gray_sweep(std::span<const Int> w, const Int& lo, const Int& hi, int free_bits,
                std::uint64_t prefix, Hit&& hit) {
    std::vector<Int> twice(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) twice[j] = 2 * w[j];

    Int s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if ((prefix >> j) & 1U)
            s += w[j];
        else
            s -= w[j];
    }
    std::uint64_t mask = prefix;
    int pop = std::popcount(prefix);
    if (lo < s && s < hi) hit(mask, pop);

    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
        const int j = std::countr_zero(g);
        const std::uint64_t bit = std::uint64_t{1} << j;
        mask ^= bit;
        if (mask & bit) {
            s += twice[static_cast<std::size_t>(j)];
            ++pop;
        } else {
            s -= twice[static_cast<std::size_t>(j)];
            --pop;
        }
        if (lo < s && s < hi) hit(mask, pop);
    }
}

/// Number of top bits fixed per block: ceil(log2 threads), capped at `bits`.
inline int fixed_bits(int bits, unsigned threads) {
    int fixed = 0;
    while ((1U << fixed) < threads && fixed < bits) ++fixed;
    return fixed;
}

/// Splits the subset space into 2^b blocks by fixing the top b bits and runs
/// `per_block(block_index, free_bits, prefix)` for each, distributing blocks
/// round-robin over the worker threads.
template <class PerBlock>
void for_each_block(int bits, unsigned threads, PerBlock&& per_block) {
    const int fixed = fixed_bits(bits, threads);
    const int free_bits = bits - fixed;
    const std::size_t blocks = std::size_t{1} << fixed;
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, blocks);

    auto worker = [&](std::size_t t) {
        for (std::size_t blk = t; blk < blocks; blk += workers)
            per_block(blk, free_bits, static_cast<std::uint64_t>(blk) << free_bits);
    };
    if (workers == 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
}

template <class Int>
struct PivotBounds {
    std::vector<Int> body;  ///< w_1 .. w_{n-2}
    Int lo;                 ///< |w_{n-1} - w_n|
    Int hi;                 ///< w_{n-1} + w_n
};

template <class Int>
PivotBounds<Int> pivot_bounds(const std::vector<Int>& w) {
    PivotBounds<Int> p;
    const std::size_t n = w.size();
    p.body.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n - 2));
    const Int& a = w[n - 2];
    const Int& b = w[n - 1];
    p.lo = a > b ? Int(a - b) : Int(b - a);
    p.hi = a + b;
    return p;
}

template <class Int>
AdmissibleFamily enumerate_impl(const std::vector<Int>& w, unsigned threads) {
    const int n = static_cast<int>(w.size());
    const int bits = n - 2;
    const auto pb = pivot_bounds(w);
    const std::span<const Int> body(pb.body);

    std::vector<std::vector<std::uint64_t>> per_block_masks;
    const std::size_t blocks = std::size_t{1} << fixed_bits(bits, threads);
    per_block_masks.resize(blocks);
    for_each_block(bits, threads, [&](std::size_t blk, int free_bits, std::uint64_t prefix) {
        auto& out = per_block_masks[blk];
        gray_sweep<Int>(body, pb.lo, pb.hi, free_bits, prefix,
                        [&](std::uint64_t mask, int) { out.push_back(mask); });
    });

    AdmissibleFamily fam;
    fam.n = n;
    fam.histogram.assign(static_cast<std::size_t>(n - 1), 0);
    std::vector<std::uint64_t> all;
    for (auto& v : per_block_masks) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    fam.sets.reserve(all.size());
    for (std::uint64_t m : all) {
        fam.sets.emplace_back(m << 1);
        ++fam.histogram[static_cast<std::size_t>(std::popcount(m))];
    }
    return fam;
}

template <class Int>
std::vector<std::uint64_t> histogram_impl(const std::vector<Int>& w, unsigned threads) {
    const int n = static_cast<int>(w.size());
    const int bits = n - 2;
    const auto pb = pivot_bounds(w);
    const std::span<const Int> body(pb.body);

    const std::size_t blocks = std::size_t{1} << fixed_bits(bits, threads);
    std::vector<std::vector<std::uint64_t>> partial(blocks,
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(n - 1), 0));
    for_each_block(bits, threads, [&](std::size_t blk, int free_bits, std::uint64_t prefix) {
        auto& h = partial[blk];
        gray_sweep<Int>(body, pb.lo, pb.hi, free_bits, prefix,
                        [&h](std::uint64_t, int pop) { ++h[static_cast<std::size_t>(pop)]; });
    });
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n - 1), 0);
    for (const auto& h : partial)
        for (std::size_t l = 0; l < h.size(); ++l) hist[l] += h[l];
    return hist;
}

}  // namespace detail

/// All r-admissible index sets, with r_{n-1}, r_n as the distinguished pair.
inline AdmissibleFamily enumerate_admissible(const LengthVector& r, EnumerationOptions opt = {}) {
    const auto w = integer_weights(r);
    if (detail::fits_int64(w)) return detail::enumerate_impl(detail::narrow(w), opt.threads);
    return detail::enumerate_impl(w, opt.threads);
}

/// Per-cardinality counts of admissible sets, without materializing them.
inline std::vector<std::uint64_t> admissible_histogram(const LengthVector& r, EnumerationOptions opt = {}) {
    const auto w = integer_weights(r);
    if (detail::fits_int64(w)) return detail::histogram_impl(detail::narrow(w), opt.threads);
    return detail::histogram_impl(w, opt.threads);
}

}  // namespace polycob
