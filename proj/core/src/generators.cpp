#include "ilab/generators.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "ilab/enumerate.hpp"
#include "ilab/errors.hpp"
#include "linalg.hpp"

namespace ilab {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long long seed) : eng(seed ^ 0x9e3779b97f4a7c15ull) {}

    // Uniform in [lo, hi], rejection-free of modulo bias.
    long long uniform(long long lo, long long hi) {
        unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
        unsigned long long limit = ~0ull - ~0ull % span;
        unsigned long long v;
        do {
            v = eng();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }
};

constexpr int kPointRetries = 20000;
constexpr int kSetRetries = 32;

bool contains(const std::vector<Hypothesis>& hs, Hypothesis h) {
    return std::find(hs.begin(), hs.end(), h) != hs.end();
}

bool any_collinear_with(const std::vector<Point2>& pts, const Point2& c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (detail::collinear(pts[i], pts[j], c)) return true;
    return false;
}

bool any_collinear_with(const std::vector<Point3>& pts, const Point3& c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (detail::collinear(pts[i], pts[j], c)) return true;
    return false;
}

bool makes_concyclic4(const std::vector<Point2>& pts, const Point2& c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (detail::concyclic_safe(pts[i], pts[j], pts[k], c)) return true;
    return false;
}

bool makes_concyclic4(const std::vector<Point3>& pts, const Point3& c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (detail::concyclic_safe(pts[i], pts[j], pts[k], c)) return true;
    return false;
}

bool makes_coplanar4(const std::vector<Point3>& pts, const Point3& c) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (detail::collinear(pts[i], pts[j], pts[k])) continue;
                if (detail::coplanar(pts[i], pts[j], pts[k], c)) return true;
            }
    return false;
}

long long grid_extent(long long n) { return std::max<long long>(24, 2 * n * n); }

/// Generic 2D points under the incremental constraints.
std::vector<Point2> sample_plane_points(Rng& rng, long long count, long long extent,
                                        bool no3col, bool no4cocirc,
                                        std::vector<Point2> pts = {}) {
    const std::size_t want = pts.size() + static_cast<std::size_t>(count);
    while (pts.size() < want) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Point2 c{Rat(rng.uniform(-extent, extent)), Rat(rng.uniform(-extent, extent))};
            if (std::find(pts.begin(), pts.end(), c) != pts.end()) continue;
            if (no3col && any_collinear_with(pts, c)) continue;
            if (no4cocirc && makes_concyclic4(pts, c)) continue;
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("sample_plane_points: retry budget exhausted");
    }
    return pts;
}

std::vector<Point3> sample_space_points(Rng& rng, long long count, long long extent,
                                        bool no3col, bool no4coplanar, bool no4cocirc,
                                        std::vector<Point3> pts = {}) {
    const std::size_t want = pts.size() + static_cast<std::size_t>(count);
    while (pts.size() < want) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Point3 c{Rat(rng.uniform(-extent, extent)), Rat(rng.uniform(-extent, extent)),
                     Rat(rng.uniform(-extent, extent))};
            if (std::find(pts.begin(), pts.end(), c) != pts.end()) continue;
            if (no3col && any_collinear_with(pts, c)) continue;
            if (no4coplanar && makes_coplanar4(pts, c)) continue;
            if (!no4coplanar && no4cocirc && makes_concyclic4(pts, c)) continue;
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("sample_space_points: retry budget exhausted");
    }
    return pts;
}

std::string dec(const Int& v) { return v.get_str(); }
std::string dec(long long v) { return std::to_string(v); }

/// Rational point on the unit circle with tangent-half-angle parameter t;
/// nullopt parameter encodes the point (-1, 0).
Point2 circle_point(const std::optional<Rat>& t) {
    if (!t) return Point2{Rat(-1), Rat(0)};
    Rat t2 = t->squared();
    Rat den = Rat(1) + t2;
    return Point2{(Rat(1) - t2) / den, (Rat(2) * *t) / den};
}

/// Rational point on the unit sphere by inverse stereographic projection.
Point3 sphere_point(const Rat& u, const Rat& v) {
    Rat w = u * u + v * v;
    Rat den = w + 1;
    return Point3{Rat(2) * u / den, Rat(2) * v / den, (w - Rat(1)) / den};
}

Generated make(const GeneratorSpec& spec, PointSet points, GeneratedClaims claims) {
    return Generated{spec, std::move(points), std::move(claims)};
}

Generated gen_near_pencil_line(const GeneratorSpec& spec) {
    const long long n = spec.n, k = spec.k;
    if (n < 2 || k < 0 || n - k < 2)
        throw generation_error("near_pencil_line: need n >= 2 and 2 <= n-k");
    std::vector<Point2> pts;
    for (long long i = 0; i < n - k; ++i) pts.push_back({Rat(i), Rat(0)});
    Rng rng(spec.seed * 3 + 1);
    const long long extent = grid_extent(n);
    while (static_cast<long long>(pts.size()) < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Point2 c{Rat(rng.uniform(-extent, extent)),
                     Rat(rng.uniform(1, extent) * (rng.uniform(0, 1) ? 1 : -1))};
            if (std::find(pts.begin(), pts.end(), c) != pts.end()) continue;
            // Off-line points may not create any collinear triple beyond the
            // base line (triples with two base points are automatically safe).
            if (any_collinear_with(pts, c)) continue;
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("near_pencil_line: retry budget exhausted");
    }
    GeneratedClaims claims;
    if (k >= 1) claims.hypotheses = {Hypothesis::not_all_collinear};
    claims.expected["max_collinear"] = dec(n - k);
    return make(spec, PointSet2(std::move(pts)), std::move(claims));
}

Generated gen_near_pencil_plane(const GeneratorSpec& spec, bool base_no_concyclic) {
    const long long n = spec.n, k = spec.k;
    if (n - k < 3 || k < 1)
        throw generation_error("near_pencil_plane: need k >= 1 and n-k >= 3");
    Rng rng(spec.seed * 3 + 2);
    const long long extent = grid_extent(n);
    auto base2 = sample_plane_points(rng, n - k, extent, true, base_no_concyclic);
    std::vector<Point3> pts;
    for (const auto& p : base2) pts.push_back({p.x, p.y, Rat(0)});
    while (static_cast<long long>(pts.size()) < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Point3 c{Rat(rng.uniform(-extent, extent)), Rat(rng.uniform(-extent, extent)),
                     Rat(rng.uniform(1, extent) * (rng.uniform(0, 1) ? 1 : -1))};
            if (any_collinear_with(pts, c)) continue;
            if (makes_coplanar4(pts, c)) continue; // only the base plane may hold 4+
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("near_pencil_plane: retry budget exhausted");
    }
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::no_3_collinear, Hypothesis::not_all_coplanar};
    if (base_no_concyclic) claims.hypotheses.push_back(Hypothesis::no_4_cocircular);
    claims.expected["max_coplanar"] = dec(n - k);
    // Every plane except the base holds exactly three points, so the total
    // is 1 + (triples not inside the base).
    Int total = Int(1) + binom(n, 3) - binom(n - k, 3);
    claims.expected["planes_total"] = dec(total);
    if (k == 1) claims.expected["planes_3"] = dec(binom(n - 1, 2));
    claims.anchor = n - k; // first off-plane point
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_two_skew_lines(const GeneratorSpec& spec) {
    const long long n = spec.n;
    if (n < 6) throw generation_error("two_skew_lines: need n >= 6 (three per line)");
    const long long b = n / 2, a = n - b;
    std::vector<Point3> pts;
    for (long long i = 0; i < a; ++i) pts.push_back({Rat(i), Rat(0), Rat(0)});
    for (long long j = 0; j < b; ++j) pts.push_back({Rat(0), Rat(1), Rat(j)});
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::not_all_coplanar};
    claims.expected["planes_total"] = dec(n);
    claims.expected["planes_3"] = "0";
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_desargues(const GeneratorSpec& spec) {
    // Two triangles in perspective from the origin; rays scaled by 2, 3, 4.
    // The axis points are the pairwise intersections of corresponding sides.
    std::vector<Point3> pts = {
        {Rat(0), Rat(0), Rat(0)},  // center of perspectivity
        {Rat(1), Rat(0), Rat(0)},  {Rat(0), Rat(1), Rat(0)},  {Rat(0), Rat(0), Rat(1)},
        {Rat(2), Rat(0), Rat(0)},  {Rat(0), Rat(3), Rat(0)},  {Rat(0), Rat(0), Rat(4)},
        {Rat(0), Rat(9), Rat(-8)}, // A2A3 x B2B3
        {Rat(3), Rat(0), Rat(-2)}, // A1A3 x B1B3
        {Rat(4), Rat(-3), Rat(0)}, // A1A2 x B1B2
    };
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::not_all_coplanar};
    claims.expected["planes_3"] = "0";
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_cube(const GeneratorSpec& spec) {
    std::vector<Point3> pts;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) pts.push_back({Rat(x), Rat(y), Rat(z)});
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::no_3_collinear, Hypothesis::not_all_coplanar};
    claims.expected["planes_total"] = "20";
    claims.expected["planes_3"] = "8";
    claims.expected["planes_4"] = "12";
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_cubic_orchard(const GeneratorSpec& spec) {
    const long long n = spec.n;
    if (n < 3) throw generation_error("cubic_orchard: need n >= 3");
    const long long start = -((n - 1) / 2);
    std::vector<long long> vals;
    for (long long i = 0; i < n; ++i) vals.push_back(start + i);
    std::vector<Point2> pts;
    for (long long v : vals) pts.push_back({Rat(v), Rat(v) * Rat(v) * Rat(v)});
    // On the cubic y = x^3, distinct parameters are collinear iff they sum
    // to zero, so three-point lines are exactly the zero-sum triples.
    long long t3 = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            for (std::size_t k = j + 1; k < vals.size(); ++k)
                if (vals[i] + vals[j] + vals[k] == 0) ++t3;
    GeneratedClaims claims;
    if (n >= 4) claims.hypotheses = {Hypothesis::not_all_collinear};
    claims.expected["lines_3"] = dec(t3);
    if (n >= 4) claims.expected["max_collinear"] = dec(t3 > 0 ? 3 : 2);
    return make(spec, PointSet2(std::move(pts)), std::move(claims));
}

Generated gen_circle_rational(const GeneratorSpec& spec) {
    const long long n = spec.n;
    if (n < 1) throw generation_error("circle_rational: need n >= 1");
    std::vector<Point2> pts;
    long long t = 0;
    while (static_cast<long long>(pts.size()) < n) {
        pts.push_back(circle_point(Rat(t)));
        t = t > 0 ? -t : -t + 1;
    }
    GeneratedClaims claims;
    if (n >= 3) {
        claims.hypotheses = {Hypothesis::no_3_collinear};
        claims.expected["max_cocircular"] = dec(n);
    }
    return make(spec, PointSet2(std::move(pts)), std::move(claims));
}

std::vector<Point3> sphere_points(Rng& rng, long long count, std::vector<Point3> pts = {}) {
    const long long extent = 6 + count;
    const std::size_t want = pts.size() + static_cast<std::size_t>(count);
    while (pts.size() < want) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Rat u{rng.uniform(-extent, extent), rng.uniform(1, 6)};
            Rat v{rng.uniform(-extent, extent), rng.uniform(1, 6)};
            Point3 c = sphere_point(u, v);
            if (std::find(pts.begin(), pts.end(), c) != pts.end()) continue;
            // No four coplanar on the sphere = no four concyclic.
            if (makes_coplanar4(pts, c)) continue;
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("sphere_rational: retry budget exhausted");
    }
    return pts;
}

Generated gen_sphere_rational(const GeneratorSpec& spec) {
    if (spec.n < 1) throw generation_error("sphere_rational: need n >= 1");
    Rng rng(spec.seed * 3 + 5);
    auto pts = sphere_points(rng, spec.n);
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::no_3_collinear};
    if (spec.n >= 4) {
        claims.hypotheses.push_back(Hypothesis::no_4_cocircular);
        claims.expected["max_cospherical"] = dec(spec.n);
    }
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_elliott(const GeneratorSpec& spec) {
    const long long n = spec.n;
    if (n < 4) throw generation_error("elliott_counterexample: need n >= 4");
    // Points on the unit circle paired so that each pair's chord passes
    // through (0, 1/2): parameters t and (t-2)/(2t-1) satisfy
    // 1 + t1 t2 = (t1 + t2)/2. The seed list 0, inf, 3, 4, ... never repeats
    // a parameter or its partner.
    const Point2 apex{Rat(0), Rat(1, 2)};
    auto partner = [](const std::optional<Rat>& t) -> std::optional<Rat> {
        if (!t) return Rat(1, 2);                    // partner of the point at t = inf
        if (*t == Rat(1, 2)) return std::nullopt;
        return (*t - Rat(2)) / (Rat(2) * *t - Rat(1));
    };
    std::vector<std::optional<Rat>> seeds = {Rat(0), std::nullopt};
    for (long long s = 3; static_cast<long long>(seeds.size()) < n; ++s) seeds.push_back(Rat(s));

    const long long on_circle = n - 1;
    const long long pairs = on_circle / 2;
    std::vector<Point2> pts;
    std::size_t seed_at = 0;
    for (long long i = 0; i < pairs; ++i, ++seed_at) {
        pts.push_back(circle_point(seeds[seed_at]));
        pts.push_back(circle_point(partner(seeds[seed_at])));
    }
    if (on_circle % 2 == 1) pts.push_back(circle_point(seeds[seed_at]));
    pts.push_back(apex);

    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::not_all_collinear, Hypothesis::not_all_cocircular};
    claims.anchor = n - 1;
    claims.expected["max_cocircular"] = dec(on_circle);
    claims.expected["chords_through_anchor"] = dec(pairs);
    claims.expected["circles_total"] = dec(Int(1) + binom(on_circle, 2) - to_int(pairs));
    return make(spec, PointSet2(std::move(pts)), std::move(claims));
}

Generated gen_cospherical_plus_k(const GeneratorSpec& spec) {
    const long long n = spec.n, k = spec.k;
    if (k < 1 || n - k < 4 || n - k < k + 4)
        throw generation_error("cospherical_plus_k: need k >= 1 and n-k >= max(4, k+4)");
    Rng rng(spec.seed * 3 + 7);
    auto pts = sphere_points(rng, n - k);
    const long long extent = 8 + 2 * n;
    while (static_cast<long long>(pts.size()) < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kPointRetries; ++attempt) {
            Rat den(rng.uniform(1, 5));
            Point3 c{Rat(rng.uniform(-extent, extent)) / den,
                     Rat(rng.uniform(-extent, extent)) / den,
                     Rat(rng.uniform(-extent, extent)) / den};
            if (c.x * c.x + c.y * c.y + c.z * c.z == Rat(1)) continue; // keep off the sphere
            if (std::find(pts.begin(), pts.end(), c) != pts.end()) continue;
            if (any_collinear_with(pts, c)) continue;
            if (makes_concyclic4(pts, c)) continue;
            pts.push_back(c);
            placed = true;
            break;
        }
        if (!placed) throw generation_error("cospherical_plus_k: retry budget exhausted");
    }
    GeneratedClaims claims;
    claims.hypotheses = {Hypothesis::no_3_collinear, Hypothesis::no_4_cocircular,
                         Hypothesis::not_all_cospherical};
    claims.expected["max_cospherical"] = dec(n - k);
    claims.anchor = n - k; // first off-sphere point
    return make(spec, PointSet3(std::move(pts)), std::move(claims));
}

Generated gen_random(const GeneratorSpec& spec) {
    const long long n = spec.n;
    if (n < 1) throw generation_error("random_constrained: need n >= 1");
    if (spec.dim != 2 && spec.dim != 3)
        throw generation_error("random_constrained: dim must be 2 or 3");
    const bool no3col = contains(spec.constraints, Hypothesis::no_3_collinear);
    const bool no4cc = contains(spec.constraints, Hypothesis::no_4_cocircular);
    const long long extent = grid_extent(n);

    for (int round = 0; round < kSetRetries; ++round) {
        Rng rng(spec.seed * 3 + 11 + static_cast<unsigned long long>(round) * 0x51ull);
        PointSet points;
        if (spec.dim == 2) {
            points = PointSet2(sample_plane_points(rng, n, extent, no3col, no4cc));
        } else {
            points = PointSet3(sample_space_points(rng, n, extent, no3col, false, no4cc));
        }
        // The "not all ..." constraints are global; re-sample on the rare
        // violation.
        bool ok = true;
        for (Hypothesis h : spec.constraints) {
            if (h == Hypothesis::no_3_collinear || h == Hypothesis::no_4_cocircular) continue;
            auto rep = validate(points, {h});
            if (!rep.all_satisfied()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            GeneratedClaims claims;
            claims.hypotheses = spec.constraints;
            return make(spec, std::move(points), std::move(claims));
        }
    }
    throw generation_error("random_constrained: could not satisfy global constraints");
}

} // namespace

std::string to_string(GeneratorName g) {
    switch (g) {
        case GeneratorName::near_pencil_line: return "near_pencil_line";
        case GeneratorName::near_pencil_plane: return "near_pencil_plane";
        case GeneratorName::coplanar_plus_k: return "coplanar_plus_k";
        case GeneratorName::two_skew_lines: return "two_skew_lines";
        case GeneratorName::desargues: return "desargues";
        case GeneratorName::cube: return "cube";
        case GeneratorName::cubic_orchard: return "cubic_orchard";
        case GeneratorName::circle_rational: return "circle_rational";
        case GeneratorName::sphere_rational: return "sphere_rational";
        case GeneratorName::elliott_counterexample: return "elliott_counterexample";
        case GeneratorName::cospherical_plus_k: return "cospherical_plus_k";
        case GeneratorName::random_constrained: return "random_constrained";
    }
    return "?";
}

GeneratorName generator_from_string(const std::string& name) {
    for (int g = 0; g <= static_cast<int>(GeneratorName::random_constrained); ++g)
        if (to_string(static_cast<GeneratorName>(g)) == name)
            return static_cast<GeneratorName>(g);
    throw invalid_input("unknown generator '" + name + "'");
}

Generated generate(const GeneratorSpec& spec) {
    switch (spec.name) {
        case GeneratorName::near_pencil_line: return gen_near_pencil_line(spec);
        case GeneratorName::near_pencil_plane: return gen_near_pencil_plane(spec, false);
        case GeneratorName::coplanar_plus_k: return gen_near_pencil_plane(spec, true);
        case GeneratorName::two_skew_lines: return gen_two_skew_lines(spec);
        case GeneratorName::desargues: return gen_desargues(spec);
        case GeneratorName::cube: return gen_cube(spec);
        case GeneratorName::cubic_orchard: return gen_cubic_orchard(spec);
        case GeneratorName::circle_rational: return gen_circle_rational(spec);
        case GeneratorName::sphere_rational: return gen_sphere_rational(spec);
        case GeneratorName::elliott_counterexample: return gen_elliott(spec);
        case GeneratorName::cospherical_plus_k: return gen_cospherical_plus_k(spec);
        case GeneratorName::random_constrained: return gen_random(spec);
    }
    throw invalid_input("generate: unknown generator");
}

} // namespace ilab
