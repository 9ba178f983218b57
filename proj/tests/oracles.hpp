#pragma once

// Slow reference implementations used to cross-check the library kernels.
// They share no code with the library beyond the Rational type.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "polycob/rational.hpp"

namespace oracle {

using polycob::Rational;
using Lengths = std::vector<Rational>;

/// Scans every sign vector.
inline bool naive_smooth(const Lengths& r) {
    const std::size_t n = r.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += ((m >> i) & 1U) ? r[i] : Rational(-r[i]);
        if (s == 0) return false;
    }
    return true;
}

/// Same scan on integers; caller guarantees no overflow.
inline bool naive_smooth_int(const std::vector<std::int64_t>& w) {
    const std::size_t n = w.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) s += ((m >> i) & 1U) ? w[i] : -w[i];
        if (s == 0) return false;
    }
    return true;
}

/// Masks (bit i = index i) of subsets of {1..n-2} closing a nondegenerate
/// triangle with the last two sides, by the three strict inequalities.
inline std::vector<std::uint64_t> naive_admissible(const Lengths& r) {
    const std::size_t n = r.size();
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 2)); ++m) {
        Rational s = 0;
        for (std::size_t i = 0; i + 2 < n; ++i) s += ((m >> i) & 1U) ? r[i] : Rational(-r[i]);
        const Rational& a = r[n - 2];
        const Rational& b = r[n - 1];
        if (s + a > b && s + b > a && a + b > s) out.push_back(m << 1);
    }
    return out;
}

/// Signed count sum (-1)^(n-|I|) over the naive family.
inline std::int64_t naive_coefficient(const Lengths& r) {
    std::int64_t c = 0;
    const int n = static_cast<int>(r.size());
    for (auto m : naive_admissible(r)) {
        const int l = __builtin_popcountll(m);
        c += ((n - l) % 2 == 0) ? 1 : -1;
    }
    return c;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

/// Closed form for equilateral n = 2m+1.
inline std::int64_t equilateral_closed_form(int m) {
    const auto c = static_cast<std::int64_t>(choose(2 * m - 1, m));
    return (m + 1) % 2 == 0 ? c : -c;
}

/// cos of the angle between sides b and c opposite side a.
inline Rational law_of_cosines(const Rational& a, const Rational& b, const Rational& c) {
    return (b * b + c * c - a * a) / (2 * b * c);
}

struct Line {
    Rational a, b, c;  // a x + b y <= c
};

/// Vertices of {a x + b y <= c} as the feasible pairwise line intersections,
/// as a sorted set.
inline std::set<std::pair<Rational, Rational>> pairwise_vertices(const std::vector<Line>& lines) {
    std::set<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto& p = lines[i];
            const auto& q = lines[j];
            const Rational det = p.a * q.b - p.b * q.a;
            if (det == 0) continue;
            const Rational x = (p.c * q.b - p.b * q.c) / det;
            const Rational y = (p.a * q.c - p.c * q.a) / det;
            bool ok = true;
            for (const auto& l : lines) ok = ok && l.a * x + l.b * y <= l.c;
            if (ok) out.insert({x, y});
        }
    // drop points lying strictly inside a segment between two others
    std::set<std::pair<Rational, Rational>> corners;
    for (const auto& v : out) {
        bool interior = false;
        for (const auto& p : out)
            for (const auto& q : out) {
                if (p == v || q == v || p == q) continue;
                const Rational cr = (p.first - v.first) * (q.second - v.second) - (p.second - v.second) * (q.first - v.first);
                const Rational dot = (p.first - v.first) * (q.first - v.first) + (p.second - v.second) * (q.second - v.second);
                if (cr == 0 && dot < 0) interior = true;
            }
        if (!interior) corners.insert(v);
    }
    return corners;
}

/// Seven constraints of the pentagon bending polytope written out directly.
inline std::vector<Line> pentagon_lines(const Lengths& r) {
    auto ad = [](const Rational& p, const Rational& q) { return p > q ? Rational(p - q) : Rational(q - p); };
    return {
        {-1, 0, -ad(r[0], r[1])}, {1, 0, r[0] + r[1]}, {0, -1, -ad(r[3], r[4])}, {0, 1, r[3] + r[4]},
        {-1, -1, -r[2]},          {1, -1, r[2]},       {-1, 1, r[2]},
    };
}

/// Random positive rationals p/q with p in [1, max_num], q in [1, max_den].
template <class Rng>
Lengths random_lengths(Rng& rng, int n, int max_num = 40, int max_den = 7) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    Lengths r;
    for (int i = 0; i < n; ++i) r.emplace_back(num(rng), den(rng));
    return r;
}

/// Random vector that is smooth and closable, by rejection.
template <class Rng>
Lengths random_smooth_nonempty(Rng& rng, int n, int max_num = 40, int max_den = 7) {
    for (;;) {
        auto r = random_lengths(rng, n, max_num, max_den);
        Rational total = 0;
        for (const auto& x : r) total += x;
        bool nonempty = std::all_of(r.begin(), r.end(), [&](const Rational& x) { return 2 * x <= total; });
        bool distinct = std::any_of(r.begin(), r.end(), [&](const Rational& x) { return x != r.front(); });
        if (nonempty && distinct && naive_smooth(r)) return r;
    }
}

}  // namespace oracle
