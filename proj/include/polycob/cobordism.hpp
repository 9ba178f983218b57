#pragma once

// Oriented S^1-cobordism class of the polygon space M_r under the bending
// action along the last proper diagonal. Every admissible index set I is an
// isolated fixed point contributing (-1)^(n-|I|) CP^(n-3); the fixed
// submanifolds (e_{n-1}, e_n collinear) bound and contribute nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycob/admissible.hpp"
#include "polycob/lengths.hpp"

namespace polycob {

/// The pair of sides moved to positions n-1, n before enumeration.
struct Pivot {
    int i = 0;
    int j = 0;

    friend bool operator==(const Pivot&, const Pivot&) = default;
};

/// Checks 1 <= i, j <= n, i != j, r_i != r_j and returns the pivot with i < j.
inline Pivot make_pivot(const LengthVector& r, int i, int j) {
    const int n = r.size();
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw InputError("pivot (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") must be two distinct indices in 1.." + std::to_string(n));
    if (i > j) std::swap(i, j);
    if (r.at(i) == r.at(j))
        throw InputError("pivot sides r_" + std::to_string(i) + " and r_" + std::to_string(j) +
                         " are equal; the bending diagonal could vanish");
    return Pivot{i, j};
}

/// (n-1, n) when r_{n-1} != r_n, so the admissible family is the one of r
/// as given; otherwise the lexicographically first (i, j) with r_i != r_j.
inline std::optional<Pivot> default_pivot(const LengthVector& r) {
    const int n = r.size();
    if (r.at(n - 1) != r.at(n)) return Pivot{n - 1, n};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (r.at(i) != r.at(j)) return Pivot{i, j};
    return std::nullopt;
}

/// 1-based order putting every other index first (in order), then p.i, then p.j.
inline std::vector<int> pivot_order(int n, Pivot p) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        if (k != p.i && k != p.j) order.push_back(k);
    order.push_back(p.i);
    order.push_back(p.j);
    return order;
}

inline LengthVector apply_pivot(const LengthVector& r, Pivot p) { return r.permuted(pivot_order(r.size(), p)); }

struct CobordismClass {
    int n = 0;
    int complex_dimension = 0;
    std::int64_t coefficient = 0;          ///< signed number of CP^(n-3) summands
    std::vector<std::uint64_t> histogram;  ///< admissible sets per cardinality l = 0..n-2
    bool is_null = false;                  ///< coefficient == 0 or n even
    std::optional<Pivot> pivot;            ///< absent for the closed-form equilateral class

    std::uint64_t fixed_point_count() const {
        std::uint64_t total = 0;
        for (auto c : histogram) total += c;
        return total;
    }
};

inline CobordismClass class_from_histogram(int n, std::vector<std::uint64_t> histogram,
                                           std::optional<Pivot> pivot) {
    CobordismClass c;
    c.n = n;
    c.complex_dimension = n - 3;
    for (std::size_t l = 0; l < histogram.size(); ++l) {
        const auto count = static_cast<std::int64_t>(histogram[l]);
        c.coefficient += ((n - static_cast<int>(l)) % 2 == 0) ? count : -count;
    }
    c.histogram = std::move(histogram);
    c.is_null = c.coefficient == 0 || n % 2 == 0;
    c.pivot = pivot;
    return c;
}

/// Throws WallError naming a vanishing signed sum when r is not smooth.
inline void require_smooth(const LengthVector& r) {
    if (auto witness = wall_witness(r)) {
        std::string msg = "length vector lies on a wall: ";
        for (std::size_t i = 0; i < witness->signs.size(); ++i) {
            msg += witness->signs[i] > 0 ? (i == 0 ? "" : " + ") : (i == 0 ? "-" : " - ");
            msg += "r_" + std::to_string(i + 1);
        }
        msg += " = 0";
        throw WallError(msg);
    }
}

inline CobordismClass cobordism_class(const LengthVector& r, std::optional<Pivot> pivot = std::nullopt,
                                      EnumerationOptions opt = {}) {
    require_smooth(r);
    if (!is_nonempty(r)) throw EmptyError("no closed polygon has these side lengths");
    if (r.is_equilateral())
        throw NoPivotError("equilateral length vector: bending is not globally defined; "
                           "use the closed form or perturb one side");
    const Pivot p = pivot ? make_pivot(r, pivot->i, pivot->j) : *default_pivot(r);
    auto hist = admissible_histogram(apply_pivot(r, p), opt);
    return class_from_histogram(r.size(), std::move(hist), p);
}

namespace detail {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(c);
}

}  // namespace detail

/// Closed form for equilateral polygons, n = 2m+1: (-1)^(m+1) C(2m-1, m) CP^(2m-2).
inline CobordismClass equilateral_class(int n) {
    if (n < 3 || n % 2 == 0)
        throw InputError("equilateral class needs odd n >= 3 (even equilateral vectors lie on a wall)");
    if (n > 64) throw InputError("at most 64 sides are supported");
    const int m = (n - 1) / 2;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n - 1), 0);
    hist[static_cast<std::size_t>(m)] = detail::binomial(2 * m - 1, m);
    return class_from_histogram(n, std::move(hist), std::nullopt);
}

/// Class of (1, ..., 1, 1 + eps); agrees with equilateral_class(n) for small eps.
inline CobordismClass perturbed_equilateral_check(int n, const Rational& eps, EnumerationOptions opt = {}) {
    if (n < 3 || n % 2 == 0) throw InputError("perturbed equilateral check needs odd n >= 3");
    if (eps <= 0) throw InputError("perturbation must be positive");
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(1));
    v.back() += eps;
    return cobordism_class(LengthVector(std::move(v)), std::nullopt, opt);
}

/// A component of the fixed submanifold: polygons with n-1 sides whose last
/// side merges e_{n-1} and e_n.
struct ReducedVector {
    LengthVector lengths;
    bool aligned;  ///< true: last side r_{n-1} + r_n; false: |r_{n-1} - r_n|
};

/// Nonempty reduced spaces M_{rbar}, rbar = (r_1, ..., r_{n-2}, r_{n-1} +- r_n),
/// after moving the pivot to the end. They bound, so they do not change the class.
inline std::vector<ReducedVector> type2_submanifolds(const LengthVector& r, Pivot pivot) {
    const Pivot p = make_pivot(r, pivot.i, pivot.j);
    const LengthVector moved = apply_pivot(r, p);
    const int n = moved.size();
    if (n < 4) return {};
    std::vector<Rational> head(moved.entries().begin(), moved.entries().end() - 2);
    const Rational& a = moved.at(n - 1);
    const Rational& b = moved.at(n);

    std::vector<ReducedVector> out;
    for (bool aligned : {true, false}) {
        std::vector<Rational> v = head;
        v.push_back(aligned ? Rational(a + b) : Rational(a > b ? a - b : b - a));
        LengthVector rbar(std::move(v));
        if (is_nonempty(rbar)) out.push_back({std::move(rbar), aligned});
    }
    return out;
}

}  // namespace polycob
