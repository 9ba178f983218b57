#pragma once

// Length vectors r = (r_1, ..., r_n) with exact rational entries, and the
// predicates that depend only on r: closability, smoothness (walls) and the
// chamber signature.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycob/errors.hpp"
#include "polycob/rational.hpp"

namespace polycob {

/// Ordered positive side lengths. Indices in the public API are 1-based,
/// matching the usual r_1..r_n labelling.
class LengthVector {
public:
    explicit LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.size() < 3)
            throw InputError("a length vector needs at least 3 entries, got " +
                             std::to_string(entries_.size()));
        if (entries_.size() > 64)
            throw InputError("at most 64 sides are supported");
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] <= 0)
                throw InputError("length r_" + std::to_string(i + 1) + " = " +
                                 to_string(entries_[i]) + " is not positive");
    }

    LengthVector(std::initializer_list<Rational> entries)
        : LengthVector(std::vector<Rational>(entries)) {}

    static LengthVector parse(std::span<const std::string> literals) {
        std::vector<Rational> v;
        v.reserve(literals.size());
        for (const auto& s : literals) v.push_back(parse_rational(s));
        return LengthVector(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }

    /// r_i, 1-based.
    const Rational& at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational sum() const {
        Rational s = 0;
        for (const auto& x : entries_) s += x;
        return s;
    }

    bool is_equilateral() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [&](const Rational& x) { return x == entries_.front(); });
    }

    LengthVector scaled(const Rational& lambda) const {
        std::vector<Rational> v = entries_;
        for (auto& x : v) x *= lambda;
        return LengthVector(std::move(v));
    }

    /// Entry i of the result is r_{order[i]}; `order` holds 1-based indices.
    LengthVector permuted(std::span<const int> order) const {
        if (static_cast<int>(order.size()) != size())
            throw InputError("permutation size does not match the length vector");
        std::vector<bool> seen(entries_.size(), false);
        std::vector<Rational> v;
        v.reserve(entries_.size());
        for (int i : order) {
            if (i < 1 || i > size() || seen[static_cast<std::size_t>(i - 1)])
                throw InputError("not a permutation of 1..n");
            seen[static_cast<std::size_t>(i - 1)] = true;
            v.push_back(at(i));
        }
        return LengthVector(std::move(v));
    }

    std::vector<double> to_doubles() const {
        std::vector<double> v;
        v.reserve(entries_.size());
        for (const auto& x : entries_) v.push_back(to_double(x));
        return v;
    }

    friend bool operator==(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Integer multiples w_i = c * r_i with the smallest positive c making every
/// entry integral and the w_i coprime as a family. Every sign question about
/// signed sums of r is answered identically by w.
inline std::vector<BigInt> integer_weights(const LengthVector& r) {
    BigInt l = 1;
    for (const auto& x : r.entries()) l = lcm_of(l, denominator_of(x));
    std::vector<BigInt> w;
    w.reserve(r.entries().size());
    BigInt g = 0;
    for (const auto& x : r.entries()) {
        w.push_back(numerator_of(x) * (l / denominator_of(x)));
        g = boost::multiprecision::gcd(g, w.back());
    }
    for (auto& x : w) x /= g;
    return w;
}

namespace detail {

/// True when every partial signed sum of w (including doubled terms) fits in int64.
inline bool fits_int64(const std::vector<BigInt>& w) {
    BigInt total = 0;
    for (const auto& x : w) total += x;
    return 4 * total < BigInt(std::numeric_limits<std::int64_t>::max());
}

inline std::vector<std::int64_t> narrow(const std::vector<BigInt>& w) {
    std::vector<std::int64_t> out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(x.convert_to<std::int64_t>());
    return out;
}

/// sums[mask] = sum of w[i] over the bits i of mask, for all 2^|w| masks.
template <class Int>
std::vector<Int> subset_sums(std::span<const Int> w) {
    std::vector<Int> sums(std::size_t{1} << w.size());
    sums[0] = 0;
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        sums[mask] = sums[mask & (mask - 1)] + w[low];
    }
    return sums;
}

/// Meet in the middle: a mask of +1 signs with sum_i eps_i w_i = 0, if any.
template <class Int>
std::optional<std::uint64_t> zero_signed_sum(std::span<const Int> w) {
    const std::size_t n = w.size();
    const std::size_t ha = (n + 1) / 2;
    const auto wa = w.first(ha);
    const auto wb = w.subspan(ha);
    Int total_a = 0, total_b = 0;
    for (const auto& x : wa) total_a += x;
    for (const auto& x : wb) total_b += x;

    // signed sum of a half = 2 * (subset sum of the + indices) - half total
    const auto sums_a = subset_sums<Int>(wa);
    std::vector<std::pair<Int, std::uint64_t>> table;
    table.reserve(sums_a.size());
    for (std::size_t mask = 0; mask < sums_a.size(); ++mask)
        table.emplace_back(Int(2 * sums_a[mask] - total_a), mask);
    std::sort(table.begin(), table.end());

    const auto sums_b = subset_sums<Int>(wb);
    for (std::size_t mask = 0; mask < sums_b.size(); ++mask) {
        const Int target = -(2 * sums_b[mask] - total_b);
        auto it = std::lower_bound(table.begin(), table.end(), target,
                                   [](const auto& entry, const Int& t) { return entry.first < t; });
        if (it != table.end() && it->first == target)
            return it->second | (static_cast<std::uint64_t>(mask) << ha);
    }
    return std::nullopt;
}

}  // namespace detail

/// Rescales so that the entries sum to 2 (the hypersimplex convention).
inline LengthVector normalize(const LengthVector& r) { return r.scaled(Rational(2) / r.sum()); }

/// Some closed polygon with these side lengths exists: max side <= sum of the others.
inline bool is_nonempty(const LengthVector& r) {
    const Rational total = r.sum();
    for (const auto& x : r.entries())
        if (2 * x > total) return false;
    return true;
}

/// Signs eps in {+1,-1}^n with sum eps_i r_i = 0.
struct WallWitness {
    std::vector<int> signs;  ///< signs[i-1] is eps_i

    std::vector<int> plus() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] > 0) out.push_back(static_cast<int>(i) + 1);
        return out;
    }
    std::vector<int> minus() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] < 0) out.push_back(static_cast<int>(i) + 1);
        return out;
    }
};

/// A partition certifying that r lies on a wall, or nullopt when r is smooth.
inline std::optional<WallWitness> wall_witness(const LengthVector& r) {
    const auto w = integer_weights(r);
    std::optional<std::uint64_t> plus;
    if (detail::fits_int64(w)) {
        const auto w64 = detail::narrow(w);
        plus = detail::zero_signed_sum<std::int64_t>(w64);
    } else {
        plus = detail::zero_signed_sum<BigInt>(w);
    }
    if (!plus) return std::nullopt;
    WallWitness witness;
    witness.signs.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        witness.signs[i] = ((*plus >> i) & 1U) ? 1 : -1;
    return witness;
}

/// No degenerate (collinear) polygon has these side lengths.
inline bool is_smooth(const LengthVector& r) { return !wall_witness(r).has_value(); }

/// Sign of sum_{i in S} r_i - sum_{i not in S} r_i for every canonical
/// partition S: 1 in S and 2 <= |S| <= n-2. Partitions are listed in
/// increasing order of their bitmask (bit i-1 stands for index i).
struct ChamberSignature {
    int n = 0;
    std::vector<std::uint64_t> partitions;
    std::vector<std::int8_t> signs;

    bool has_zero() const {
        return std::find(signs.begin(), signs.end(), std::int8_t{0}) != signs.end();
    }

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

namespace detail {

template <class Int>
ChamberSignature chamber_signature_impl(std::span<const Int> w) {
    const int n = static_cast<int>(w.size());
    ChamberSignature sig;
    sig.n = n;
    Int total = 0;
    for (const auto& x : w) total += x;

    // index 1 is always in S; the other n-1 indices are split into two
    // halves so that each subset sum is a pair of table lookups
    const auto rest = w.subspan(1);
    const std::size_t lo_bits = rest.size() / 2;
    const auto lo = subset_sums<Int>(rest.first(lo_bits));
    const auto hi = subset_sums<Int>(rest.subspan(lo_bits));
    const std::uint64_t lo_mask = (std::uint64_t{1} << lo_bits) - 1;
    const std::uint64_t count = std::uint64_t{1} << rest.size();

    for (std::uint64_t m = 1; m < count; ++m) {
        const int k = std::popcount(m);
        if (k < 1 || k > n - 3) continue;
        const Int s = w[0] + lo[m & lo_mask] + hi[m >> lo_bits];
        const Int diff = 2 * s - total;
        sig.partitions.push_back((m << 1) | 1U);
        sig.signs.push_back(static_cast<std::int8_t>(diff > 0 ? 1 : (diff < 0 ? -1 : 0)));
    }
    return sig;
}

}  // namespace detail

inline ChamberSignature chamber_signature(const LengthVector& r) {
    const auto w = integer_weights(r);
    if (detail::fits_int64(w)) {
        const auto w64 = detail::narrow(w);
        return detail::chamber_signature_impl<std::int64_t>(w64);
    }
    return detail::chamber_signature_impl<BigInt>(w);
}

}  // namespace polycob
