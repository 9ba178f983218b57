#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "polycob/io.hpp"
#include "polycob/polycob.hpp"

namespace polycob::cli {

namespace {

using io::Json;

struct Options {
    std::vector<std::string> lengths;
    std::vector<int> pivot;
    unsigned threads = 1;
    bool json = false;
    std::string epsilon;
    double tol = kDefaultClosureTol;
    std::optional<std::uint64_t> seed;
    int k = 0;
    double theta = 0;
    int steps = 64;
    int n = 0;
    std::string svg;
};

std::string set_text(IndexSet s) {
    std::string t = "{";
    for (int i : s.indices()) t += (t.size() > 1 ? "," : "") + std::to_string(i);
    return t + "}";
}

std::string lengths_text(const LengthVector& r) {
    std::string t = "(";
    for (std::size_t i = 0; i < r.entries().size(); ++i) t += (i ? ", " : "") + to_string(r.entries()[i]);
    return t + ")";
}

std::string class_text(std::int64_t coefficient, int dim, bool is_null) {
    if (is_null) return "0";
    const std::string cp = dim == 0 ? "pt" : "CP^" + std::to_string(dim);
    if (coefficient == 1) return cp;
    if (coefficient == -1) return "-" + cp;
    return std::to_string(coefficient) + " " + cp;
}

std::string number(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

std::string vec_text(const Vec3& v) { return "(" + number(v.x()) + ", " + number(v.y()) + ", " + number(v.z()) + ")"; }

std::optional<Pivot> pivot_of(const LengthVector& r, const Options& o) {
    if (o.pivot.empty()) return std::nullopt;
    return make_pivot(r, o.pivot[0], o.pivot[1]);
}

Rational epsilon_of(const Options& o) {
    const Rational eps = parse_rational(o.epsilon);
    if (eps <= 0) throw InputError("--epsilon must be positive");
    return eps;
}

void print_class(std::ostream& out, const CobordismClass& c) {
    out << "dimension: " << c.complex_dimension << "\n";
    out << "coefficient: " << c.coefficient << "\n";
    out << "null: " << (c.is_null ? "yes" : "no") << "\n";
    out << "histogram:";
    for (std::size_t l = 0; l < c.histogram.size(); ++l)
        if (c.histogram[l]) out << " l=" << l << ":" << c.histogram[l];
    out << "\n";
    out << "class: M_r ~ " << class_text(c.coefficient, c.complex_dimension, c.is_null) << "\n";
}

int cmd_class(const Options& o, std::ostream& out) {
    LengthVector r = LengthVector::parse(o.lengths);
    std::optional<Rational> eps;
    if (!o.epsilon.empty()) {
        if (!r.is_equilateral()) throw InputError("--epsilon applies to equilateral length vectors only");
        eps = epsilon_of(o);
        std::vector<Rational> v = r.entries();
        v.back() *= 1 + *eps;
        r = LengthVector(std::move(v));
    }
    const auto c = cobordism_class(r, pivot_of(r, o), {o.threads});
    if (o.json) {
        Json j = io::to_json(c, r);
        if (eps) j["epsilon"] = to_string(*eps);
        out << j.dump() << "\n";
        return kOk;
    }
    out << "r: " << lengths_text(r) << "\n";
    out << "pivot: (" << c.pivot->i << ", " << c.pivot->j << ")\n";
    print_class(out, c);
    return kOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
    const LengthVector given = LengthVector::parse(o.lengths);
    const auto pivot = pivot_of(given, o);
    const LengthVector r = pivot ? apply_pivot(given, *pivot) : given;
    const auto fam = enumerate_admissible(r, {o.threads});
    if (o.json) {
        Json j;
        j["r"] = io::to_json(r);
        if (pivot) j["order"] = pivot_order(given.size(), *pivot);
        const Json body = io::to_json(fam);
        for (const auto& [key, value] : body.items()) j[key] = value;
        out << j.dump() << "\n";
        return kOk;
    }
    out << "r: " << lengths_text(r) << "\n";
    out << "admissible sets: " << fam.sets.size() << "\n";
    for (const auto& s : fam.sets) out << "  " << set_text(s) << "  l=" << s.size() << "\n";
    return kOk;
}

int cmd_smooth(const Options& o, std::ostream& out) {
    const LengthVector r = LengthVector::parse(o.lengths);
    const auto witness = wall_witness(r);
    if (o.json) {
        Json j;
        j["r"] = io::to_json(r);
        j["smooth"] = !witness;
        j["nonempty"] = is_nonempty(r);
        j["witness"] = witness ? Json{{"plus", witness->plus()}, {"minus", witness->minus()}} : Json(nullptr);
        out << j.dump() << "\n";
        return kOk;
    }
    out << "nonempty: " << (is_nonempty(r) ? "yes" : "no") << "\n";
    if (!witness) {
        out << "smooth: yes\n";
        return kOk;
    }
    out << "smooth: no\nwall:";
    for (std::size_t i = 0; i < witness->signs.size(); ++i)
        out << (i == 0 ? (witness->signs[i] > 0 ? " " : " -") : (witness->signs[i] > 0 ? " + " : " - ")) << "r_"
            << i + 1;
    out << " = 0\n";
    return kOk;
}

int cmd_chamber(const Options& o, std::ostream& out) {
    const LengthVector r = LengthVector::parse(o.lengths);
    const auto sig = chamber_signature(r);
    if (o.json) {
        out << io::to_json(sig).dump() << "\n";
        return kOk;
    }
    out << "partitions: " << sig.partitions.size() << "\n";
    for (std::size_t k = 0; k < sig.partitions.size(); ++k) {
        std::vector<int> members;
        for (int i = 0; i < 64; ++i)
            if ((sig.partitions[k] >> i) & 1U) members.push_back(i + 1);
        std::uint64_t mask = 0;
        for (int i : members) mask |= std::uint64_t{1} << i;
        const int s = sig.signs[k];
        out << "  " << set_text(IndexSet(mask)) << " " << (s > 0 ? "+" : (s < 0 ? "-" : "0")) << "\n";
    }
    out << "smooth: " << (sig.has_zero() ? "no" : "yes") << "\n";
    return kOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
    const LengthVector r = LengthVector::parse(o.lengths);
    const auto poly = moment_polytope(r);
    if (!poly) throw EmptyError("the moment polytope is empty: no closed pentagon has these side lengths");
    const auto shape = classify_shape(*poly);
    if (!o.svg.empty()) {
        std::ofstream f(o.svg, std::ios::binary);
        if (!f) throw InputError("cannot write " + o.svg);
        f << emit_svg(*poly);
    }
    if (o.json) {
        Json j = emit_json(*poly);
        Json pairs = Json::array();
        for (auto [a, b] : shape.parallel_opposite_pairs) pairs.push_back({a, b});
        j["shape"] = Json{{"edges", shape.edge_count}, {"vertices", shape.vertex_count}, {"parallel_pairs", pairs}};
        out << j.dump() << "\n";
        return kOk;
    }
    out << "vertices: " << shape.vertex_count << "\n";
    for (const auto& v : poly->vertices) out << "  (" << to_string(v.x) << ", " << to_string(v.y) << ")\n";
    out << "edges: " << shape.edge_count << "\n";
    for (std::size_t i = 0; i < poly->active.size(); ++i) {
        const int k = poly->active[i];
        out << "  " << i << ": " << (k >= 0 ? poly->planes[static_cast<std::size_t>(k)].describe() : "?") << "\n";
    }
    out << "parallel opposite pairs: " << shape.parallel_opposite_pairs.size() << "\n";
    if (poly->degenerate) out << "degenerate: yes\n";
    return kOk;
}

Polygon start_polygon(const LengthVector& r, const Options& o) {
    if (!is_nonempty(r)) throw EmptyError("no closed polygon has these side lengths");
    if (!o.seed) return canonical_polygon(r, o.tol);
    std::mt19937_64 rng(*o.seed);
    const auto sides = r.to_doubles();
    return random_polygon(sides, rng, o.tol);
}

int cmd_bend(const Options& o, std::ostream& out) {
    if (o.lengths.empty()) throw InputError("bend needs side lengths");
    const LengthVector r = LengthVector::parse(o.lengths);
    const Polygon p = start_polygon(r, o);
    const Polygon q = bend_action(p, o.k, o.theta);
    std::vector<double> ell;
    for (const auto& d : diagonals(q)) ell.push_back(d.length);
    if (o.json) {
        Json j;
        j["r"] = io::to_json(r);
        j["k"] = o.k;
        j["theta"] = o.theta;
        j["initial"] = io::to_json(p);
        j["final"] = io::to_json(q);
        j["diagonals"] = ell;
        j["closure_residual"] = q.closure_residual();
        out << j.dump() << "\n";
        return kOk;
    }
    out << "bend along diagonal " << o.k << " by " << number(o.theta) << "\n";
    for (int i = 1; i <= p.size(); ++i) out << "  e_" << i << ": " << vec_text(p.edge(i)) << " -> " << vec_text(q.edge(i)) << "\n";
    out << "diagonals:";
    for (double l : ell) out << " " << number(l);
    out << "\nclosure residual: " << number(q.closure_residual()) << "\n";
    return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
    const LengthVector r = LengthVector::parse(o.lengths);
    const Polygon p = start_polygon(r, o);
    const auto orbit = bend_orbit(p, o.k, o.steps);
    for (std::size_t j = 0; j < orbit.size(); ++j) {
        Json line;
        line["t"] = 2.0 * std::numbers::pi * static_cast<double>(j) / o.steps;
        line["edges"] = io::to_json(orbit[j]);
        out << line.dump() << "\n";
    }
    return kOk;
}

int cmd_fixed_points(const Options& o, std::ostream& out) {
    const LengthVector r = LengthVector::parse(o.lengths);
    require_smooth(r);
    if (!is_nonempty(r)) throw EmptyError("no closed polygon has these side lengths");
    std::optional<Pivot> pivot = pivot_of(r, o);
    if (!pivot) pivot = default_pivot(r);
    if (!pivot) throw InputError("equilateral length vector: no pivot pair with distinct lengths");
    const auto order = pivot_order(r.size(), *pivot);
    const LengthVector moved = apply_pivot(r, *pivot);
    const int n = r.size();
    const auto fam = enumerate_admissible(moved, {o.threads});

    Json type1 = Json::array();
    for (const auto& s : fam.sets) {
        const Polygon p = build_type1(moved, s, o.tol);
        const auto cls = classify_fixed(p, o.tol);
        std::vector<int> original;
        for (int i : s.indices()) original.push_back(order[static_cast<std::size_t>(i - 1)]);
        Json e;
        e["set"] = io::to_json(s);
        e["sides"] = original;
        e["l"] = s.size();
        e["sign"] = (n - s.size()) % 2 == 0 ? 1 : -1;
        e["kind"] = to_string(cls.kind);
        e["polygon"] = io::to_json(p);
        type1.push_back(std::move(e));
    }
    Json type2 = Json::array();
    for (const auto& red : type2_submanifolds(r, *pivot)) {
        Json e;
        e["aligned"] = red.aligned;
        e["r"] = io::to_json(red.lengths);
        e["polygon"] = io::to_json(build_type2(moved, red.aligned, o.tol));
        type2.push_back(std::move(e));
    }
    if (o.json) {
        Json j;
        j["r"] = io::to_json(moved);
        j["order"] = order;
        j["type1"] = std::move(type1);
        j["type2"] = std::move(type2);
        out << j.dump() << "\n";
        return kOk;
    }
    out << "r (pivot last): " << lengths_text(moved) << "\n";
    out << "type I fixed points: " << type1.size() << "\n";
    for (const auto& e : type1) {
        std::uint64_t mask = 0;
        for (int i : e["set"]) mask |= std::uint64_t{1} << i;
        out << "  " << set_text(IndexSet(mask)) << " l=" << e["l"].get<int>() << " sign "
            << (e["sign"].get<int>() > 0 ? "+" : "-") << "\n";
    }
    out << "type II submanifolds: " << type2.size() << "\n";
    for (const auto& red : type2_submanifolds(r, *pivot))
        out << "  " << lengths_text(red.lengths) << (red.aligned ? " aligned" : " opposed") << "\n";
    return kOk;
}

int cmd_equilateral(const Options& o, std::ostream& out) {
    const auto closed = equilateral_class(o.n);
    std::optional<CobordismClass> pert;
    Rational eps;
    if (!o.epsilon.empty()) {
        eps = epsilon_of(o);
        pert = perturbed_equilateral_check(o.n, eps, {o.threads});
    }
    if (o.json) {
        Json j;
        j["n"] = o.n;
        j["dimension"] = closed.complex_dimension;
        j["coefficient"] = closed.coefficient;
        j["null"] = closed.is_null;
        j["histogram"] = io::histogram_json(closed.histogram);
        if (pert) {
            j["perturbed"] = Json{{"epsilon", to_string(eps)},
                                  {"coefficient", pert->coefficient},
                                  {"histogram", io::histogram_json(pert->histogram)},
                                  {"agrees", pert->coefficient == closed.coefficient}};
        }
        out << j.dump() << "\n";
        return kOk;
    }
    out << "n: " << o.n << "\n";
    print_class(out, closed);
    if (pert) {
        out << "perturbed (epsilon " << to_string(eps) << "): coefficient " << pert->coefficient
            << (pert->coefficient == closed.coefficient ? " (agrees)" : " (differs)") << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Circle-cobordism classes of polygon spaces, bending flows and pentagon moment polytopes", "polycob"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> action;

    auto lengths = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("lengths", o.lengths, "side lengths r_1 .. r_n (integers, p/q or decimals)");
        if (required) opt->required();
    };
    auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
    auto threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "worker threads for enumeration")->check(CLI::Range(1U, 1024U));
    };
    auto pivot = [&](CLI::App* sub) {
        sub->add_option("--pivot", o.pivot, "pair of sides moved to the last two positions")->expected(2);
    };
    auto tol = [&](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "closure and collinearity tolerance")->check(CLI::NonNegativeNumber);
    };
    auto seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random starting polygon"); };

    auto* cls = app.add_subcommand("class", "cobordism class of M_r");
    lengths(cls), pivot(cls), threads(cls), json(cls);
    cls->add_option("--epsilon", o.epsilon, "perturb an equilateral vector to (1, ..., 1, 1 + eps)");
    cls->callback([&] { action = cmd_class; });

    auto* adm = app.add_subcommand("admissible", "admissible index sets");
    lengths(adm), pivot(adm), threads(adm), json(adm);
    adm->callback([&] { action = cmd_admissible; });

    auto* smooth = app.add_subcommand("smooth", "wall test with a witness partition");
    lengths(smooth), json(smooth);
    smooth->callback([&] { action = cmd_smooth; });

    auto* chamber = app.add_subcommand("chamber", "signs of all canonical partitions");
    lengths(chamber), json(chamber);
    chamber->callback([&] { action = cmd_chamber; });

    auto* poly = app.add_subcommand("polytope", "bending moment polytope of a pentagon space");
    lengths(poly), json(poly);
    poly->add_option("--svg", o.svg, "write an SVG drawing to this path");
    poly->callback([&] { action = cmd_polytope; });

    auto* bend = app.add_subcommand("bend", "bend a polygon along a diagonal");
    lengths(bend, false), tol(bend), seed(bend), json(bend);
    bend->add_option("--k", o.k, "diagonal index 1..n-3");
    bend->add_option("--theta", o.theta, "rotation angle");
    bend->callback([&] {
        if (!action) action = cmd_bend;
    });
    auto* orbit = bend->add_subcommand("orbit", "sampled orbit as JSON lines");
    lengths(orbit), tol(orbit), seed(orbit);
    orbit->add_option("--k", o.k, "diagonal index 1..n-3")->required();
    orbit->add_option("--steps", o.steps, "samples per orbit")->check(CLI::PositiveNumber);
    orbit->callback([&] { action = cmd_orbit; });

    auto* fixed = app.add_subcommand("fixed-points", "fixed points of the bending circle action");
    lengths(fixed), pivot(fixed), tol(fixed), threads(fixed), json(fixed);
    fixed->callback([&] { action = cmd_fixed_points; });

    auto* eq = app.add_subcommand("equilateral", "closed form for equilateral polygons");
    eq->add_option("n", o.n, "odd number of sides")->required();
    eq->add_option("--epsilon", o.epsilon, "also compute the class of (1, ..., 1, 1 + eps)");
    threads(eq), json(eq);
    eq->callback([&] { action = cmd_equilateral; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kOk;
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        return action(o, out);
    } catch (const WallError& e) {
        err << "error: " << e.what() << "\n";
        return kWall;
    } catch (const EmptyError& e) {
        err << "error: " << e.what() << "\n";
        return kEmpty;
    } catch (const NoPivotError& e) {
        err << "error: " << e.what() << "\n";
        return kEquilateral;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace polycob::cli
