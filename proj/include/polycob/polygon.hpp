#pragma once

// Closed polygons in R^3 as lists of edge vectors, the bending flows along
// the diagonals mu_k = e_1 + ... + e_{k+1}, action-angle coordinates, bending
// fixed points and the metric/symplectic/complex structure on tangent vectors.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "polycob/admissible.hpp"
#include "polycob/errors.hpp"
#include "polycob/lengths.hpp"

namespace polycob {

using Vec3 = Eigen::Vector3d;
using TangentVector = std::vector<Vec3>;

inline constexpr double kDefaultClosureTol = 1e-9;

class Polygon {
public:
    /// Side lengths are taken from the edges.
    explicit Polygon(std::vector<Vec3> edges, double closure_tol = kDefaultClosureTol)
        : edges_(std::move(edges)), closure_tol_(closure_tol) {
        if (edges_.size() < 3) throw InputError("a polygon needs at least 3 edges");
        if (closure_tol_ < 0) throw InputError("closure tolerance must be nonnegative");
        lengths_.reserve(edges_.size());
        for (const auto& e : edges_) lengths_.push_back(e.norm());
        if (closure_residual() > closure_tol_)
            throw InputError("polygon does not close: residual " + std::to_string(closure_residual()));
    }

    /// Also checks every |e_i| against the prescribed side length.
    Polygon(std::vector<Vec3> edges, std::span<const double> side_lengths,
            double closure_tol = kDefaultClosureTol)
        : Polygon(std::move(edges), closure_tol) {
        if (side_lengths.size() != edges_.size())
            throw InputError("edge count does not match the number of side lengths");
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (std::abs(lengths_[i] - side_lengths[i]) > closure_tol_)
                throw InputError("edge " + std::to_string(i + 1) + " has the wrong length");
        lengths_.assign(side_lengths.begin(), side_lengths.end());
    }

    int size() const noexcept { return static_cast<int>(edges_.size()); }

    /// e_i, 1-based.
    const Vec3& edge(int i) const { return edges_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Vec3>& edges() const noexcept { return edges_; }

    /// r_i, 1-based.
    double side_length(int i) const { return lengths_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<double>& side_lengths() const noexcept { return lengths_; }

    double closure_tol() const noexcept { return closure_tol_; }

    double closure_residual() const {
        Vec3 s = Vec3::Zero();
        for (const auto& e : edges_) s += e;
        return s.norm();
    }

    /// Same side lengths and tolerance, new edges.
    Polygon with_edges(std::vector<Vec3> edges) const { return Polygon(std::move(edges), lengths_, closure_tol_); }

    /// Largest coordinate difference between corresponding edges.
    double max_edge_difference(const Polygon& other) const {
        if (other.size() != size()) throw InputError("polygons have different edge counts");
        double d = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            d = std::max(d, (edges_[i] - other.edges_[i]).cwiseAbs().maxCoeff());
        return d;
    }

private:
    std::vector<Vec3> edges_;
    std::vector<double> lengths_;
    double closure_tol_;
};

struct Diagonal {
    Vec3 vector;
    double length;
};

/// mu_k = e_1 + ... + e_{k+1}, for 0 <= k <= n-1 (mu_0 = e_1).
inline Vec3 diagonal_vector(const Polygon& p, int k) {
    Vec3 mu = Vec3::Zero();
    for (int i = 1; i <= k + 1; ++i) mu += p.edge(i);
    return mu;
}

/// The proper diagonals mu_1, ..., mu_{n-3} with their lengths l_k.
inline std::vector<Diagonal> diagonals(const Polygon& p) {
    std::vector<Diagonal> out;
    Vec3 mu = p.edge(1);
    for (int k = 1; k <= p.size() - 3; ++k) {
        mu += p.edge(k + 1);
        out.push_back({mu, mu.norm()});
    }
    return out;
}

/// Rotation of v by `angle` about the unit vector `axis` (right-handed).
inline Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

namespace detail {

inline void check_diagonal_index(const Polygon& p, int k) {
    if (k < 1 || k > p.size() - 3)
        throw InputError("diagonal index " + std::to_string(k) + " outside 1.." + std::to_string(p.size() - 3));
}

inline Polygon rotate_prefix(const Polygon& p, int k, const Vec3& axis, double angle) {
    std::vector<Vec3> edges = p.edges();
    for (int i = 0; i <= k; ++i) edges[static_cast<std::size_t>(i)] = rotate(edges[static_cast<std::size_t>(i)], axis, angle);
    return p.with_edges(std::move(edges));
}

}  // namespace detail

/// Hamiltonian flow of l_k^2 / 2 for time t: e_1..e_{k+1} turn about mu_k with
/// angular speed l_k. A zero diagonal is a fixed point.
inline Polygon bend_flow(const Polygon& p, int k, double t) {
    detail::check_diagonal_index(p, k);
    const Vec3 mu = diagonal_vector(p, k);
    const double len = mu.norm();
    if (len == 0.0) return p;
    return detail::rotate_prefix(p, k, mu / len, t * len);
}

/// Normalized bending: e_1..e_{k+1} turn by theta about mu_k.
inline Polygon bend_action(const Polygon& p, int k, double theta) {
    detail::check_diagonal_index(p, k);
    const Vec3 mu = diagonal_vector(p, k);
    const double len = mu.norm();
    if (len <= p.closure_tol())
        throw UndefinedActionError("diagonal " + std::to_string(k) + " has zero length; the circle action is undefined");
    return detail::rotate_prefix(p, k, mu / len, theta);
}

/// bend_action at theta = 2 pi j / steps, j = 0..steps-1.
inline std::vector<Polygon> bend_orbit(const Polygon& p, int k, int steps) {
    if (steps < 1) throw InputError("orbit needs at least one step");
    std::vector<Polygon> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int j = 0; j < steps; ++j) out.push_back(bend_action(p, k, 2.0 * std::numbers::pi * j / steps));
    return out;
}

struct ActionAngle {
    std::vector<double> ell;    ///< l_1..l_{n-3}
    std::vector<double> theta;  ///< theta_i = pi - (dihedral angle), in [0, 2 pi)
};

namespace detail {

inline double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    if (a >= two_pi) a -= two_pi;
    return a;
}

inline Vec3 perpendicular_part(const Vec3& v, const Vec3& axis) { return v - axis * axis.dot(v); }

}  // namespace detail

/// The dihedral angle at mu_i runs from the half-plane of triangle
/// (0, mu_{i-1}, mu_i) to that of (0, mu_i, mu_{i+1}), counterclockwise about
/// mu_i / l_i. With this orientation bend_action(P, k, t) adds t to theta_k.
inline ActionAngle action_angle(const Polygon& p) {
    const int n = p.size();
    ActionAngle aa;
    std::vector<Vec3> mu(static_cast<std::size_t>(n - 1));
    mu[0] = p.edge(1);
    for (int k = 1; k <= n - 2; ++k) mu[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(k - 1)] + p.edge(k + 1);

    const double tol = p.closure_tol();
    for (int i = 1; i <= n - 3; ++i) {
        const Vec3& axis_vec = mu[static_cast<std::size_t>(i)];
        const double len = axis_vec.norm();
        aa.ell.push_back(len);
        if (len <= tol)
            throw AngleUndefinedError(i, "diagonal " + std::to_string(i) + " vanishes; angle undefined");
        const Vec3 axis = axis_vec / len;
        const Vec3 a = detail::perpendicular_part(mu[static_cast<std::size_t>(i - 1)], axis);
        const Vec3 b = detail::perpendicular_part(mu[static_cast<std::size_t>(i + 1)], axis);
        if (a.norm() <= tol)
            throw AngleUndefinedError(i, "triangle " + std::to_string(i) + " is degenerate; angle " +
                                             std::to_string(i) + " undefined");
        if (b.norm() <= tol)
            throw AngleUndefinedError(i, "triangle " + std::to_string(i + 1) + " is degenerate; angle " +
                                             std::to_string(i) + " undefined");
        const double dihedral = std::atan2(axis.dot(a.cross(b)), a.dot(b));
        aa.theta.push_back(detail::wrap_angle(std::numbers::pi - dihedral));
    }
    return aa;
}

/// Inverse of action_angle: rebuilds a polygon (up to rotation) from side
/// lengths, diagonal lengths and angles. The diagonals must satisfy the
/// triangle inequalities with the sides and be nonzero.
inline Polygon polygon_from_action_angle(std::span<const double> sides, std::span<const double> ell,
                                         std::span<const double> theta,
                                         double closure_tol = kDefaultClosureTol) {
    const int n = static_cast<int>(sides.size());
    if (n < 3) throw InputError("a polygon needs at least 3 edges");
    if (static_cast<int>(ell.size()) != n - 3 || static_cast<int>(theta.size()) != n - 3)
        throw InputError("need n-3 diagonal lengths and n-3 angles");

    // L[0] = r_1, L[1..n-3] = ell, L[n-2] = r_n; triangle i has sides L[i-1], r_{i+1}, L[i]
    std::vector<double> L;
    L.push_back(sides[0]);
    L.insert(L.end(), ell.begin(), ell.end());
    L.push_back(sides[static_cast<std::size_t>(n - 1)]);
    for (std::size_t i = 1; i + 1 < L.size(); ++i)
        if (!(L[i] > 0)) throw InputError("diagonal lengths must be positive");

    auto apex = [](double base, double side_from_origin, double side_from_end) {
        const double s = (base * base + side_from_origin * side_from_origin - side_from_end * side_from_end) /
                         (2.0 * base);
        const double h = std::sqrt(std::max(0.0, side_from_origin * side_from_origin - s * s));
        return std::pair{s, h};
    };

    std::vector<Vec3> M(static_cast<std::size_t>(n - 1));
    M[1] = Vec3(L[1], 0, 0);
    {
        auto [s, h] = apex(L[1], L[0], sides[1]);
        M[0] = Vec3(s, h, 0);
    }
    for (int i = 1; i <= n - 3; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Vec3 axis = M[ui].normalized();
        Vec3 a = detail::perpendicular_part(M[ui - 1], axis);
        if (a.norm() < 1e-300) {
            a = axis.cross(Vec3::UnitZ());
            if (a.norm() < 0.5) a = axis.cross(Vec3::UnitY());
        }
        const Vec3 dir = rotate(a.normalized(), axis, std::numbers::pi - theta[ui - 1]);
        auto [s, h] = apex(L[ui], L[ui + 1], sides[ui + 1]);
        M[ui + 1] = axis * s + dir * h;
    }

    std::vector<Vec3> edges;
    edges.reserve(static_cast<std::size_t>(n));
    edges.push_back(M[0]);
    for (int k = 1; k <= n - 2; ++k)
        edges.push_back(M[static_cast<std::size_t>(k)] - M[static_cast<std::size_t>(k - 1)]);
    edges.push_back(-M[static_cast<std::size_t>(n - 2)]);
    return Polygon(std::move(edges), sides, closure_tol);
}

/// Nonstrict triangle inequalities for every triangle of the diagonal fan:
/// (r_1, r_2, l_1), (l_i, l_{i+1}, r_{i+2}), (l_{n-3}, r_{n-1}, r_n).
inline bool check_gc(const Polygon& p) {
    const int n = p.size();
    const double tol = p.closure_tol();
    std::vector<double> L;
    L.push_back(p.side_length(1));
    for (const auto& d : diagonals(p)) L.push_back(d.length);
    L.push_back(p.side_length(n));
    auto triangle = [tol](double a, double b, double c) {
        return a <= b + c + tol && b <= a + c + tol && c <= a + b + tol;
    };
    for (int i = 1; i <= n - 2; ++i)
        if (!triangle(L[static_cast<std::size_t>(i - 1)], L[static_cast<std::size_t>(i)], p.side_length(i + 1)))
            return false;
    return true;
}

/// Interval of admissible values for each diagonal length, given the sides.
struct DiagonalRange {
    double lo;
    double hi;
};

namespace detail {

/// back[k] = values of l_{k+1} from which the remaining fan can still close.
inline std::vector<DiagonalRange> backward_ranges(std::span<const double> r) {
    const int n = static_cast<int>(r.size());
    std::vector<DiagonalRange> back(static_cast<std::size_t>(std::max(0, n - 3)));
    if (n < 4) return back;
    back[static_cast<std::size_t>(n - 4)] = {std::abs(r[static_cast<std::size_t>(n - 2)] - r[static_cast<std::size_t>(n - 1)]),
                                             r[static_cast<std::size_t>(n - 2)] + r[static_cast<std::size_t>(n - 1)]};
    for (int k = n - 5; k >= 0; --k) {
        const auto& next = back[static_cast<std::size_t>(k + 1)];
        const double side = r[static_cast<std::size_t>(k + 2)];
        back[static_cast<std::size_t>(k)] = {std::max({0.0, side - next.hi, next.lo - side}), next.hi + side};
    }
    return back;
}

/// Picks l_1..l_{n-3} one at a time inside the feasible range; `pick(lo, hi)`
/// chooses the value.
template <class Pick>
std::vector<double> choose_diagonals(std::span<const double> r, Pick&& pick) {
    const int n = static_cast<int>(r.size());
    const auto back = backward_ranges(r);
    std::vector<double> ell;
    double prev_lo = std::abs(r[0] - r[1]);
    double prev_hi = r[0] + r[1];
    for (int k = 0; k < n - 3; ++k) {
        const auto& b = back[static_cast<std::size_t>(k)];
        const double lo = std::max(prev_lo, b.lo);
        const double hi = std::min(prev_hi, b.hi);
        if (lo > hi + 1e-12) throw EmptyError("no closed polygon has these side lengths");
        const double v = pick(lo, std::max(lo, hi));
        ell.push_back(v);
        const double side = r[static_cast<std::size_t>(k + 2)];
        prev_lo = std::abs(v - side);
        prev_hi = v + side;
    }
    if (n == 3) {
        const double c = r[2];
        if (c < prev_lo - 1e-12 || c > prev_hi + 1e-12) throw EmptyError("no closed triangle has these side lengths");
    }
    return ell;
}

}  // namespace detail

/// Deterministic nonplanar polygon with the given sides: every diagonal at
/// the middle of its feasible range, every angle pi/2.
inline Polygon canonical_polygon(const LengthVector& r, double closure_tol = kDefaultClosureTol) {
    const auto sides = r.to_doubles();
    const auto ell = detail::choose_diagonals(sides, [](double lo, double hi) { return 0.5 * (lo + hi); });
    const std::vector<double> theta(ell.size(), 0.5 * std::numbers::pi);
    return polygon_from_action_angle(sides, ell, theta, closure_tol);
}

/// Random polygon with the given sides: diagonals and angles drawn uniformly
/// coordinate by coordinate (not the Liouville measure).
template <class Rng>
Polygon random_polygon(std::span<const double> sides, Rng& rng, double closure_tol = kDefaultClosureTol) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto ell = detail::choose_diagonals(sides, [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); });
    std::vector<double> theta;
    for (std::size_t i = 0; i < ell.size(); ++i) theta.push_back(2.0 * std::numbers::pi * unit(rng));
    return polygon_from_action_angle(sides, ell, theta, closure_tol);
}

/// Planar type-I fixed point: e_i = (eps_i r_i, 0, 0) for i <= n-2 and the
/// last two edges closing the triangle with the diagonal (m, 0, 0), m = sum eps_i r_i.
inline Polygon build_type1(const LengthVector& r, IndexSet set, double closure_tol = kDefaultClosureTol) {
    if (!is_admissible(r, set)) throw AdmissibilityError("index set is not admissible for these lengths");
    const int n = r.size();
    Rational m = 0;
    std::vector<Vec3> edges;
    for (int i = 1; i <= n - 2; ++i) {
        const Rational signed_len = set.contains(i) ? r.at(i) : Rational(-r.at(i));
        m += signed_len;
        edges.emplace_back(to_double(signed_len), 0.0, 0.0);
    }
    const Rational& a = r.at(n - 1);
    const Rational& b = r.at(n);
    // law of cosines in the triangle (m, r_{n-1}, r_n); both cosines are rational
    const Rational cos_theta = (m * m + b * b - a * a) / (2 * m * b);
    const Rational cos_alpha = (m - b * cos_theta) / a;
    const double ct = to_double(cos_theta);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double ad = to_double(a);
    const double bd = to_double(b);
    const double sa = bd / ad * st;
    edges.emplace_back(-ad * to_double(cos_alpha), ad * sa, 0.0);
    edges.emplace_back(-bd * ct, -bd * st, 0.0);
    const auto sides = r.to_doubles();
    return Polygon(std::move(edges), sides, closure_tol);
}

/// Type-II fixed point: a canonical polygon of the reduced (n-1)-gon whose
/// last side is split into collinear e_{n-1}, e_n. `aligned` selects
/// r_{n-1} + r_n (parallel) versus |r_{n-1} - r_n| (antiparallel).
inline Polygon build_type2(const LengthVector& r, bool aligned, double closure_tol = kDefaultClosureTol) {
    const int n = r.size();
    if (n < 4) throw InputError("type-II fixed points need at least 4 sides");
    const Rational& a = r.at(n - 1);
    const Rational& b = r.at(n);
    if (a == b && !aligned) throw InputError("r_{n-1} = r_n: the antiparallel merge has zero length");
    std::vector<Rational> reduced(r.entries().begin(), r.entries().end() - 2);
    reduced.push_back(aligned ? Rational(a + b) : Rational(a > b ? a - b : b - a));
    const LengthVector rbar(std::move(reduced));
    if (!is_nonempty(rbar)) throw EmptyError("the reduced polygon space is empty");
    const Polygon q = canonical_polygon(rbar, closure_tol);

    const Vec3 last = q.edge(n - 1);
    const double d = last.norm();
    const double ad = to_double(a), bd = to_double(b);
    std::vector<Vec3> edges(q.edges().begin(), q.edges().end() - 1);
    if (aligned) {
        edges.push_back(last * (ad / d));
        edges.push_back(last * (bd / d));
    } else if (a > b) {
        edges.push_back(last * (ad / d));
        edges.push_back(last * (-bd / d));
    } else {
        edges.push_back(last * (-ad / d));
        edges.push_back(last * (bd / d));
    }
    const auto sides = r.to_doubles();
    return Polygon(std::move(edges), sides, closure_tol);
}

enum class FixedPointKind { TypeI, TypeII, NotFixed };

inline const char* to_string(FixedPointKind k) {
    switch (k) {
        case FixedPointKind::TypeI: return "TypeI";
        case FixedPointKind::TypeII: return "TypeII";
        case FixedPointKind::NotFixed: return "NotFixed";
    }
    return "?";
}

struct FixedPointClass {
    FixedPointKind kind = FixedPointKind::NotFixed;
    std::optional<IndexSet> index_set;  ///< forward tracks {j : e_j . mu > 0}, for TypeI
};

namespace detail {

inline bool collinear(const Vec3& u, const Vec3& v, double tol) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return true;
    return u.cross(v).norm() / (nu * nv) <= tol;
}

}  // namespace detail

/// Fixed points of bending along mu_{n-3}: type I when e_1..e_{n-2} are
/// collinear, type II when e_{n-1}, e_n are.
inline FixedPointClass classify_fixed(const Polygon& p, double tol) {
    const int n = p.size();
    bool first_collinear = true;
    for (int i = 2; i <= n - 2 && first_collinear; ++i)
        first_collinear = detail::collinear(p.edge(1), p.edge(i), tol);
    if (first_collinear) {
        const Vec3 mu = diagonal_vector(p, n - 3);
        std::uint64_t mask = 0;
        for (int j = 1; j <= n - 2; ++j)
            if (p.edge(j).dot(mu) > 0) mask |= std::uint64_t{1} << j;
        return {FixedPointKind::TypeI, IndexSet(mask)};
    }
    if (detail::collinear(p.edge(n - 1), p.edge(n), tol)) return {FixedPointKind::TypeII, std::nullopt};
    return {FixedPointKind::NotFixed, std::nullopt};
}

/// Equality in the quotient by rotations: equal Gram matrices and equal
/// orientation of the best-conditioned triple of edges.
inline bool so3_equivalent(const Polygon& p, const Polygon& q, double tol) {
    if (p.size() != q.size()) throw InputError("polygons have different edge counts");
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (std::abs(p.edge(i).dot(p.edge(j)) - q.edge(i).dot(q.edge(j))) > tol) return false;

    double best = 0;
    int bi = 0, bj = 0, bk = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const double d = std::abs(p.edge(i).dot(p.edge(j).cross(p.edge(k))));
                if (d > best) {
                    best = d;
                    bi = i, bj = j, bk = k;
                }
            }
    // a planar configuration is its own mirror image up to a rotation
    if (best <= tol) return true;
    const double dp = p.edge(bi).dot(p.edge(bj).cross(p.edge(bk)));
    const double dq = q.edge(bi).dot(q.edge(bj).cross(q.edge(bk)));
    return std::abs(dp - dq) <= tol;
}

/// v is tangent to the level set and orthogonal to the rotation orbit:
/// sum v_i = 0, e_i . v_i = 0, sum (1/r_i) e_i x v_i = 0.
inline bool tangent_check(const Polygon& p, const TangentVector& v, double tol) {
    if (static_cast<int>(v.size()) != p.size()) throw InputError("tangent vector has the wrong number of components");
    Vec3 sum = Vec3::Zero();
    Vec3 moment = Vec3::Zero();
    for (int i = 1; i <= p.size(); ++i) {
        const Vec3& vi = v[static_cast<std::size_t>(i - 1)];
        if (std::abs(p.edge(i).dot(vi)) > tol) return false;
        sum += vi;
        moment += p.edge(i).cross(vi) / p.side_length(i);
    }
    return sum.norm() <= tol && moment.norm() <= tol;
}

/// Orthogonal (Euclidean) projection of v onto the solution space of the
/// three tangent conditions.
inline TangentVector project_to_tangent(const Polygon& p, const TangentVector& v) {
    const int n = p.size();
    if (static_cast<int>(v.size()) != n) throw InputError("tangent vector has the wrong number of components");
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n + 6, 3 * n);
    for (int i = 0; i < n; ++i) {
        const Vec3& e = p.edge(i + 1);
        const double r = p.side_length(i + 1);
        c.block<3, 3>(0, 3 * i) = Eigen::Matrix3d::Identity();
        c.block<1, 3>(3 + i, 3 * i) = e.transpose();
        Eigen::Matrix3d cross;
        cross << 0, -e.z(), e.y(), e.z(), 0, -e.x(), -e.y(), e.x(), 0;
        c.block<3, 3>(3 + n, 3 * i) = cross / r;
    }
    Eigen::VectorXd x(3 * n);
    for (int i = 0; i < n; ++i) x.segment<3>(3 * i) = v[static_cast<std::size_t>(i)];

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(c.transpose());
    const Eigen::Index rank = qr.rank();
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(3 * n, rank);
    x -= q * (q.transpose() * x);

    TangentVector out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = x.segment<3>(3 * i);
    return out;
}

template <class Rng>
TangentVector random_tangent(const Polygon& p, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    TangentVector v(static_cast<std::size_t>(p.size()));
    for (auto& vi : v) vi = Vec3(gauss(rng), gauss(rng), gauss(rng));
    return project_to_tangent(p, v);
}

/// Metric g(u, v) = sum (1/r_j) <u_j, v_j>, complex structure
/// J(u)_j = (e_j / r_j) x u_j and symplectic form omega(u, v) = g(u, J v),
/// i.e. omega(u, v) = sum <e_j / r_j^2, v_j x u_j>.
class SymplecticToolkit {
public:
    explicit SymplecticToolkit(Polygon p) : p_(std::move(p)) {}

    double inner(const TangentVector& u, const TangentVector& v) const {
        check(u), check(v);
        double s = 0;
        for (int j = 0; j < p_.size(); ++j)
            s += u[static_cast<std::size_t>(j)].dot(v[static_cast<std::size_t>(j)]) / p_.side_length(j + 1);
        return s;
    }

    double omega(const TangentVector& u, const TangentVector& v) const {
        check(u), check(v);
        double s = 0;
        for (int j = 0; j < p_.size(); ++j) {
            const double r = p_.side_length(j + 1);
            s += p_.edge(j + 1).dot(v[static_cast<std::size_t>(j)].cross(u[static_cast<std::size_t>(j)])) / (r * r);
        }
        return s;
    }

    TangentVector J(const TangentVector& u) const {
        check(u);
        TangentVector out(u.size());
        for (int j = 0; j < p_.size(); ++j)
            out[static_cast<std::size_t>(j)] = (p_.edge(j + 1) / p_.side_length(j + 1)).cross(u[static_cast<std::size_t>(j)]);
        return out;
    }

    const Polygon& polygon() const noexcept { return p_; }

private:
    void check(const TangentVector& u) const {
        if (static_cast<int>(u.size()) != p_.size()) throw InputError("tangent vector has the wrong number of components");
    }

    Polygon p_;
};

}  // namespace polycob
