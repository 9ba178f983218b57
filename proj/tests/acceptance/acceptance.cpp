// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "helpers.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "polycob/polycob.hpp"

using namespace polycob;
using testing_support::lv;
using testing_support::masks;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

nlohmann::json run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    if (code != 0) return {};
    return nlohmann::json::parse(out.str());
}

std::vector<std::string> split(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> parts;
    for (std::string s; in >> s;) parts.push_back(s);
    return parts;
}

std::vector<double> random_sides(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.5, 3.0);
    for (;;) {
        std::vector<double> r;
        for (int i = 0; i < n; ++i) r.push_back(u(rng));
        const double total = std::accumulate(r.begin(), r.end(), 0.0);
        const double top = *std::max_element(r.begin(), r.end());
        if (2 * top < total - 0.2) return r;
    }
}

double tangent_residual(const TangentVector& a, const TangentVector& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
    return d;
}

Outcome worked_examples() {
    Outcome o;
    const std::vector<std::int64_t> coefficient = {1, 0, -1, -2, -3, 0, 0};
    const auto t0 = Clock::now();
    const auto& ex = testing_support::worked_examples();
    for (std::size_t i = 0; i < ex.size(); ++i) {
        auto args = split(ex[i]);
        args.insert(args.begin(), "class");
        args.push_back("--json");
        int code = 0;
        const auto j = run_cli(args, code);
        o.require(code == 0, "exit code " + std::to_string(code) + " for " + ex[i]);
        if (code != 0) continue;
        o.require(j["coefficient"] == coefficient[i], "coefficient for " + ex[i]);
    }
    int code = 0;
    const auto empty = run_cli({"admissible", "5", "1", "4", "5", "1", "--json"}, code);
    o.require(code == 0 && empty["count"] == 0, "family of 5 1 4 5 1 is not empty");
    const auto mixed = run_cli({"class", "1", "1.5", "3.5", "3", "3.5", "--json"}, code);
    o.require(code == 0 && mixed["histogram"] == nlohmann::json({{"1", 1}, {"2", 2}, {"3", 1}}), "histogram of 1 3/2 7/2 3 7/2");
    const double t = seconds_since(t0);
    o.require(t < 1.0, "took " + std::to_string(t) + " s");
    return o;
}

Outcome equilateral_limit() {
    Outcome o;
    double t21 = 0;
    for (int m = 1; m <= 10; ++m) {
        const int n = 2 * m + 1;
        const auto t0 = Clock::now();
        const auto c = perturbed_equilateral_check(n, Rational(1, 1000));
        if (n == 21) t21 = seconds_since(t0);
        o.require(c.coefficient == oracle::equilateral_closed_form(m), "n = " + std::to_string(n));
    }
    o.require(t21 < 5.0, "n = 21 took " + std::to_string(t21) + " s");
    return o;
}

Outcome even_vanishing() {
    Outcome o;
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + 2 * (trial % 3);
        const auto c = cobordism_class(lv(oracle::random_smooth_nonempty(rng, n, 30, 5)));
        o.require(c.is_null, "trial " + std::to_string(trial));
    }
    return o;
}

Outcome permutation_invariance() {
    Outcome o;
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = lv(oracle::random_smooth_nonempty(rng, 5, 30, 5));
        const auto reference = cobordism_class(r).coefficient;
        std::vector<int> order = {1, 2, 3, 4, 5};
        do {
            const auto s = r.permuted(order);
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    if (s.at(i) != s.at(j))
                        o.require(cobordism_class(s, Pivot{i, j}).coefficient == reference, "n = 5 trial " + std::to_string(trial));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    for (int n : {7, 9}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto r = lv(oracle::random_smooth_nonempty(rng, n, 30, 5));
            const auto reference = cobordism_class(r).coefficient;
            std::vector<int> order(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 1);
            for (int k = 0; k < 50; ++k) {
                std::shuffle(order.begin(), order.end(), rng);
                o.require(cobordism_class(r.permuted(order)).coefficient == reference,
                          "n = " + std::to_string(n) + " trial " + std::to_string(trial));
            }
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> small(3, 12), large(3, 18);
    for (int trial = 0; trial < 50; ++trial) {
        const auto v = oracle::random_lengths(rng, small(rng), 20, 6);
        o.require(masks(enumerate_admissible(lv(v))) == oracle::naive_admissible(v), "enumeration trial " + std::to_string(trial));
    }
    int walls = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = large(rng);
        std::uniform_int_distribution<std::int64_t> weight(1, trial % 2 == 0 ? 12 : 100000);
        std::vector<std::int64_t> w;
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) w.push_back(weight(rng)), v.emplace_back(w.back());
        const bool expected = oracle::naive_smooth_int(w);
        walls += !expected;
        o.require(is_smooth(lv(v)) == expected, "smoothness trial " + std::to_string(trial));
    }
    o.require(walls > 0 && walls < 50, "sample did not exercise both outcomes");
    return o;
}

Outcome bending_dynamics() {
    Outcome o;
    std::mt19937_64 rng(104);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + trial % 2;
        const auto sides = random_sides(rng, n);
        const auto p = random_polygon(sides, rng);
        const int k = std::uniform_int_distribution<int>(1, n - 3)(rng);
        const auto before = diagonals(p);
        const double ell = before[static_cast<std::size_t>(k - 1)].length;
        worst = std::max(worst, bend_flow(p, k, 2.0 * std::numbers::pi / ell).max_edge_difference(p));
        for (const auto& q : bend_orbit(p, k, 64)) {
            double d = q.closure_residual();
            for (int i = 1; i <= n; ++i) d = std::max(d, std::abs(q.edge(i).norm() - sides[static_cast<std::size_t>(i - 1)]));
            const auto after = diagonals(q);
            for (std::size_t j = 0; j < after.size(); ++j) d = std::max(d, std::abs(after[j].length - before[j].length));
            worst = std::max(worst, d);
            o.require(check_gc(q), "check_gc trial " + std::to_string(trial));
        }
    }
    o.require(worst <= 1e-9, "residual " + std::to_string(worst));
    return o;
}

Outcome fixed_points() {
    Outcome o;
    for (const auto& text : testing_support::worked_examples()) {
        const auto r = lv(text);
        const int n = r.size();
        for (const auto& set : enumerate_admissible(r).sets) {
            const auto p = build_type1(r, set);
            const auto cls = classify_fixed(p, 1e-12);
            o.require(cls.kind == FixedPointKind::TypeI && cls.index_set == set, "round trip for " + text);
            for (double theta : {std::numbers::pi / 7, 1.0, 3.0})
                o.require(bend_action(p, n - 3, theta).max_edge_difference(p) <= 1e-12, "type-I not fixed for " + text);
        }
        for (const auto& t2 : type2_submanifolds(r, Pivot{n - 1, n})) {
            const auto p = build_type2(r, t2.aligned);
            for (double theta : {std::numbers::pi / 7, 1.0, 3.0})
                o.require(so3_equivalent(p, bend_action(p, n - 3, theta), 1e-9), "type-II moved for " + text);
        }
    }
    return o;
}

Outcome symplectic_identities() {
    Outcome o;
    std::mt19937_64 rng(105);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const SymplecticToolkit kit(random_polygon(random_sides(rng, 5), rng));
        const auto u = random_tangent(kit.polygon(), rng);
        const auto v = random_tangent(kit.polygon(), rng);
        auto minus_u = u;
        for (auto& x : minus_u) x = -x;
        worst = std::max(worst, tangent_residual(kit.J(kit.J(u)), minus_u));
        worst = std::max(worst, std::abs(kit.omega(u, v) + kit.omega(v, u)));
        worst = std::max(worst, std::abs(kit.omega(u, v) - kit.inner(u, kit.J(v))));
    }
    o.require(worst <= 1e-9, "residual " + std::to_string(worst));
    return o;
}

Outcome polytope() {
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<Point2>>> cases = {
        {"1 3/2 4 1 2", {{1, 3}, {Rational(5, 2), Rational(3, 2)}, {Rational(5, 2), 3}}},
        {"2 1/2 4 1/2 5/2",
         {{Rational(3, 2), Rational(5, 2)}, {2, 2}, {Rational(5, 2), 2}, {Rational(5, 2), 3}, {Rational(3, 2), 3}}},
    };
    std::mt19937_64 rng(106);
    std::uniform_int_distribution<int> weight(1, 1000);
    for (const auto& [text, expected] : cases) {
        const auto r = lv(text);
        const auto p = moment_polytope(r);
        o.require(p && p->vertices == expected, "vertices for " + text);
        if (!p) continue;
        std::set<std::pair<Rational, Rational>> got;
        for (const auto& v : p->vertices) got.insert({v.x, v.y});
        o.require(got == oracle::pairwise_vertices(oracle::pentagon_lines(r.entries())), "oracle disagrees for " + text);
        const auto planes = halfplanes(r);
        for (int s = 0; s < 1000; ++s) {
            Rational x = 0, y = 0, total = 0;
            for (const auto& v : p->vertices) {
                const Rational w = weight(rng);
                x += w * v.x, y += w * v.y, total += w;
            }
            x /= total, y /= total;
            for (const auto& h : planes) o.require(h.contains(x, y), "interior point outside for " + text);
        }
    }
    return o;
}

Outcome performance() {
    Outcome o;
    std::mt19937_64 rng(107);
    auto v = oracle::random_lengths(rng, 30, 1000, 9);
    while (!is_smooth(lv(v)) || !is_nonempty(lv(v))) v = oracle::random_lengths(rng, 30, 1000, 9);
    std::vector<std::string> args = {"class"};
    for (const auto& x : v) args.push_back(x.str());
    args.push_back("--json");

    auto timed = [&](unsigned threads, nlohmann::json& j) {
        auto a = args;
        a.insert(a.end(), {"--threads", std::to_string(threads)});
        int code = 0;
        const auto t0 = Clock::now();
        j = run_cli(a, code);
        const double t = seconds_since(t0);
        o.require(code == 0, "exit code " + std::to_string(code));
        return t;
    };
    nlohmann::json one, eight;
    const double t1 = timed(1, one);
    const double t8 = timed(8, eight);
    std::ostringstream d;
    d << "1 thread " << t1 << " s, 8 threads " << t8 << " s, " << std::thread::hardware_concurrency() << " cpu";
    o.require(one == eight, "outputs differ; " + d.str());
    o.require(t1 < 10.0, "single-threaded too slow; " + d.str());
    o.require(t8 < 3.0, "parallel too slow; " + d.str());
    if (o.pass) o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"worked examples", worked_examples},
        {"equilateral limit", equilateral_limit},
        {"even n vanishing", even_vanishing},
        {"permutation and pivot invariance", permutation_invariance},
        {"oracle equivalence", oracle_equivalence},
        {"bending dynamics", bending_dynamics},
        {"fixed points", fixed_points},
        {"symplectic identities", symplectic_identities},
        {"moment polytope", polytope},
        {"performance at n = 30", performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::printf("%s %2zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0),
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
