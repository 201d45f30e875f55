#include "ilab/audit.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ilab/errors.hpp"
#include "ilab/predicates.hpp"
#include "linalg.hpp"

namespace ilab {

namespace {

unsigned long long binom_u64(unsigned long long n, int r) {
    if (n < static_cast<unsigned long long>(r)) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

AuditEntry entry(std::string rule, std::string statement, AuditEntry::Direction dir,
                 bool applicable, Rat bound, Rat enumerated, std::string note = {}) {
    AuditEntry e;
    e.rule = std::move(rule);
    e.statement = std::move(statement);
    e.direction = dir;
    e.applicable = applicable;
    e.bound = std::move(bound);
    e.enumerated = std::move(enumerated);
    e.margin = e.direction == AuditEntry::Direction::at_least ? e.enumerated - e.bound
                                                              : e.bound - e.enumerated;
    e.verdict = !e.applicable ? AuditEntry::Verdict::informational
               : e.holds()    ? AuditEntry::Verdict::pass
                              : AuditEntry::Verdict::fail;
    e.note = std::move(note);
    return e;
}

void audit2(const PointSet2& s, AuditReport& rep, const EnumOptions& opts) {
    const long long n = rep.n;
    auto lines = line_index(s, opts);
    auto circles = circle_index(s, opts);
    IncidenceProfile t = lines.profile();
    IncidenceProfile c = circles.profile();
    PointDegreeProfile degrees = point_degrees(s, opts);

    auto& g = rep.summary;
    g.n = n;
    g.dim = 2;
    g.max_collinear = n >= 2 ? std::max<long long>(2, t.max_multiplicity()) : n;
    g.max_cocircular = c.max_multiplicity();
    g.all_collinear = n <= 2 || g.max_collinear == n;
    g.all_cocircular = n <= 2 || g.max_cocircular == n;

    const bool base = !g.all_collinear && n >= 3;

    Rat melchior_rhs = Rat(3);
    for (const auto& [k, cnt] : t.counts)
        if (k >= 3) melchior_rhs += Rat(k - 3) * Rat(cnt);
    rep.entries.push_back(entry("melchior", "t2 >= 3 + sum (k-3) t_k",
                                AuditEntry::Direction::at_least, base, melchior_rhs, Rat(t.at(2))));

    rep.entries.push_back(entry("half_lines_small", "t2 + t3 >= (t+3)/2",
                                AuditEntry::Direction::at_least, base, elliott_t23_lb(t.total()),
                                Rat(t.at(2) + t.at(3))));

    Rat incidences = 0;
    for (const auto& [k, cnt] : t.counts) incidences += Rat(k) * Rat(cnt);
    rep.entries.push_back(entry("incidence_rate", "sum i t_i <= 3t - 3",
                                AuditEntry::Direction::at_most,
                                base, Rat(3) * Rat(t.total()) - Rat(3), incidences));

    rep.entries.push_back(entry("t23_degree_lb", "t2 + t3 >= 2 + (1/6) sum i r_i",
                                AuditEntry::Direction::at_least, base, eq1_lb(degrees),
                                Rat(t.at(2) + t.at(3))));

    {
        long long k = n - g.max_collinear;
        auto b = t23_lb(n, k);
        rep.entries.push_back(entry("t23_collinear_lb",
                                    "t2 + t3 >= k(n-k) - k(k-1) with k = n - max collinear",
                                    AuditEntry::Direction::at_least,
                                    base && b.applicable, b.value, Rat(t.at(2) + t.at(3)),
                                    "k = " + std::to_string(k) + "; " + b.threshold));
    }
    {
        long long k = n - std::max(g.max_collinear, g.max_cocircular);
        auto b = circles_lb(n, k);
        rep.entries.push_back(entry("circles_from_lines_lb",
                                    "circles >= (1/8)(2k-1)(n^2-(2k+1)n), k = n - max on line/circle",
                                    AuditEntry::Direction::at_least,
                                    base && !g.all_cocircular && b.applicable, b.value,
                                    Rat(c.total()),
                                    "k = " + std::to_string(k) + "; " + b.threshold));
    }
    rep.entries.push_back(entry("full_circle_corrected_lb",
                                "circles >= 1 + C(n-1,2) - floor((n-1)/2)",
                                AuditEntry::Direction::at_least,
                                base && !g.all_cocircular && n >= 394, elliott_circles_lb(n),
                                Rat(c.total()), "threshold n >= 394"));

    if (g.max_collinear >= 3 && !g.all_collinear) {
        long long k = n - g.max_collinear;
        auto maxima = collinear_class_maxima(n, k);
        rep.entries.push_back(entry("collinear_class_lines_max",
                                    "lines <= C(k,2) + k(n-k) + 1 with exactly n-k collinear",
                                    AuditEntry::Direction::at_most, true, Rat(maxima.lines_max),
                                    Rat(t.total()), "k = " + std::to_string(k)));
    }
}

void audit3(const PointSet3& s, AuditReport& rep, const EnumOptions& opts) {
    const long long n = rep.n;
    auto lines = line3_index(s, opts);
    auto planes = plane_index(s, opts);
    auto circles3 = circle3_index(s, opts);
    IncidenceProfile t = lines.profile();
    IncidenceProfile m = planes.profile();

    auto& g = rep.summary;
    g.n = n;
    g.dim = 3;
    g.max_collinear = n >= 2 ? std::max<long long>(2, t.max_multiplicity()) : n;
    g.max_coplanar = m.max_multiplicity();
    g.max_cocircular = circles3.profile().max_multiplicity();
    g.all_collinear = n <= 2 || g.max_collinear == n;
    g.all_coplanar = n <= 3 || g.all_collinear || g.max_coplanar == n;

    const bool no3col = g.max_collinear <= 2;
    const bool base = no3col && !g.all_coplanar && n >= 4;

    Rat plane_sum = 0, plane_pairs = 0;
    for (const auto& [k, cnt] : m.counts) {
        plane_sum += Rat(k) * Rat(k - 4) * Rat(cnt);
        plane_pairs += Rat(binom(static_cast<long long>(k), 2)) * Rat(cnt);
    }

    rep.entries.push_back(entry("plane_melchior_sum", "sum k(k-4) m_k <= -3n",
                                AuditEntry::Direction::at_most, base, Rat(-3 * n), plane_sum));

    rep.entries.push_back(entry("three_point_planes_min", "m3 >= n + sum_{k>=4} k(k-4)/3 m_k",
                                AuditEntry::Direction::at_least, base, m3_lb(n, m), Rat(m.at(3))));

    rep.entries.push_back(entry("planes_34_share", "m3 + m4 >= (5m + 3n)/8",
                                AuditEntry::Direction::at_least, base, m34_lb(n, m.total()),
                                Rat(m.at(3) + m.at(4))));

    rep.entries.push_back(entry(
        "three_point_planes_rate", "m3 >= (4/13) C(n,2)", AuditEntry::Direction::at_least,
        base && n != 8, planes3_lb(n), Rat(m.at(3)),
        n == 8 ? "informational at n = 8: a projection of 7 points can have only three "
                 "two-point lines (below the 6n/13 rate), e.g. the cube"
               : ""));

    rep.entries.push_back(entry("plane_pair_sum", "3n + sum C(k,2) m_k <= 6m",
                                AuditEntry::Direction::at_most, base,
                                Rat(6) * Rat(m.total()), Rat(3 * n) + plane_pairs));

    {
        long long k = n - g.max_coplanar;
        auto b = planes_total_lb(n, k);
        rep.entries.push_back(entry("planes_total_exact_k",
                                    "m >= 1 + k C(n-k,2) - C(k,2)(n-k)/2 with exactly n-k coplanar",
                                    AuditEntry::Direction::at_least, base && k >= 1, b.value,
                                    Rat(m.total()), "k = " + std::to_string(k)));
        rep.entries.push_back(entry("planes_total_thm",
                                    "m >= 1 + k C(n-k,2) - C(k,2)(n-k)/2, at most n-k coplanar",
                                    AuditEntry::Direction::at_least,
                                    base && b.applicable, b.value, Rat(m.total()),
                                    "k = " + std::to_string(k) + "; " + b.threshold));
        auto b34 = planes34_lb(n, k);
        rep.entries.push_back(entry("planes_34_lb",
                                    "m3 + m4 >= k C(n-k,2) - (n-k) C(k,2), at most n-k coplanar",
                                    AuditEntry::Direction::at_least,
                                    base && b34.applicable, b34.value, Rat(m.at(3) + m.at(4)),
                                    "k = " + std::to_string(k) + "; " + b34.threshold));
    }

    rep.entries.push_back(entry("euler_lines_planes", "m - t + n >= 2",
                                AuditEntry::Direction::at_least, base && n >= 59, Rat(2),
                                Rat(m.total()) - Rat(t.total()) + Rat(n),
                                "threshold n >= 59"));

    rep.entries.push_back(entry("planes_vs_lines", "m >= t",
                                AuditEntry::Direction::at_least,
                                base && n >= 225 && g.max_coplanar <= n - 2, Rat(t.total()),
                                Rat(m.total()), "threshold n >= 225, no n-1 coplanar"));

    if (g.max_collinear >= 3 && !g.all_collinear) {
        long long k = n - g.max_collinear;
        auto maxima = collinear_class_maxima(n, k);
        rep.entries.push_back(entry("collinear_class_lines_max",
                                    "lines <= C(k,2) + k(n-k) + 1 with exactly n-k collinear",
                                    AuditEntry::Direction::at_most, true, Rat(maxima.lines_max),
                                    Rat(t.total()), "k = " + std::to_string(k)));
        rep.entries.push_back(entry("collinear_class_planes_max",
                                    "planes <= C(k,3) + (n-k) C(k,2) + k",
                                    AuditEntry::Direction::at_most, true, Rat(maxima.planes_max),
                                    Rat(m.total()), "k = " + std::to_string(k)));
    }

    // Sphere bounds, budget permitting.
    const unsigned long long quads = binom_u64(static_cast<unsigned long long>(n), 4);
    if (n >= 4 && quads <= sphere_quadruple_budget(opts)) {
        auto spheres = sphere_index(s, opts);
        IncidenceProfile sp = spheres.profile();
        rep.spheres_included = true;
        g.max_cospherical = sp.max_multiplicity();
        g.spheres_scanned = true;
        g.all_cospherical = g.max_cospherical == n || (g.all_coplanar && g.max_cocircular == n);

        const bool no4cc = g.max_cocircular <= 3;
        const bool sphere_base =
            n >= 5 && no3col && no4cc && !g.all_cospherical && !g.all_coplanar;

        rep.entries.push_back(entry("four_point_spheres", "s4 >= (9/208) C(n,3)",
                                    AuditEntry::Direction::at_least, sphere_base, spheres4_lb(n),
                                    Rat(sp.at(4))));

        rep.entries.push_back(entry("spheres_total_orchard",
                                    "spheres >= 1 + C(n-1,3) - orchard_upper(n-1)",
                                    AuditEntry::Direction::at_least, sphere_base && n >= 883,
                                    spheres_total_lb(n, orchard_upper(n - 1)), Rat(sp.total()),
                                    "threshold n >= 883"));

        if (g.max_collinear >= 3 && !g.all_collinear) {
            long long k = n - g.max_collinear;
            auto maxima = collinear_class_maxima(n, k);
            rep.entries.push_back(entry("collinear_class_spheres_max",
                                        "spheres <= C(k,4) + (n-k) C(k,3) + C(k,2) C(n-k,2)",
                                        AuditEntry::Direction::at_most, true,
                                        Rat(maxima.spheres_max), Rat(sp.total()),
                                        "k = " + std::to_string(k)));
        }
    } else if (n >= 4) {
        rep.spheres_included = false;
        rep.sphere_note = "sphere bounds skipped: C(n,4) = " + std::to_string(quads) +
                          " exceeds the quadruple budget";
    }
}

} // namespace

AuditReport audit_config(const PointSet& s, const EnumOptions& opts) {
    AuditReport rep;
    rep.n = static_cast<long long>(size_of(s));
    rep.dim = dim_of(s);
    if (const auto* s2 = std::get_if<PointSet2>(&s)) {
        audit2(*s2, rep, opts);
    } else {
        audit3(std::get<PointSet3>(s), rep, opts);
    }
    return rep;
}

SphereIdentityRecord sphere_identity_check(const PointSet3& s, std::size_t anchor,
                                           const EnumOptions& opts) {
    const long long n = static_cast<long long>(s.size());
    if (anchor >= s.size()) throw invalid_input("sphere_identity_check: anchor out of range");
    if (n < 5) throw hypothesis_error("sphere_identity_check: need n >= 5");

    auto rep = validate(PointSet(s), {Hypothesis::no_3_collinear, Hypothesis::no_4_cocircular},
                        0, opts);
    if (!rep.all_satisfied())
        throw hypothesis_error("sphere_identity_check: needs no 3 collinear and no 4 cocircular");

    auto spheres = sphere_index(s, opts);
    auto planes = plane_index(s, opts);

    SphereIdentityRecord out;
    out.n = n;
    out.anchor = anchor;

    // Locate the surface holding all points but the anchor.
    const SphereKey* surface_sphere = nullptr;
    for (const auto& o : spheres.objects)
        if (o.points == n - 1) surface_sphere = &o.key;
    const PlaneKey* surface_plane = nullptr;
    for (const auto& o : planes.objects)
        if (o.points == n - 1) surface_plane = &o.key;

    if (surface_sphere && !incident(*surface_sphere, s[anchor])) {
        out.surface_is_sphere = true;
    } else if (surface_plane && !incident(*surface_plane, s[anchor])) {
        out.surface_is_sphere = false;
    } else {
        throw hypothesis_error(
            "sphere_identity_check: no sphere or plane holds exactly the n-1 non-anchor points");
    }

    out.spheres_total = spheres.profile().total();
    out.surface_triples = binom(n - 1, 3);

    long long planes3p = 0;
    for (const auto& o : planes.objects) {
        if (!incident(o.key, s[anchor])) continue;
        // Planes through the anchor hold at most 3 surface points here
        // (4 would be cocircular), so "exactly three surface points" is
        // multiplicity 4 with the anchor included.
        if (o.points == 4) ++planes3p;
        if (o.points > 4)
            throw std::logic_error("sphere_identity_check: plane through anchor with > 3 surface points");
    }
    out.planes3_through_anchor = planes3p;

    out.expected_total = (out.surface_is_sphere ? Int(1) : Int(0)) + out.surface_triples - to_int(planes3p);
    out.identity_holds = to_int(out.spheres_total) == out.expected_total;
    return out;
}

IntersectionRecord intersection_bound_check(const PointSet3& s, std::size_t p, std::size_t q,
                                            const EnumOptions& opts) {
    const long long n = static_cast<long long>(s.size());
    if (p >= s.size() || q >= s.size() || p == q)
        throw invalid_input("intersection_bound_check: bad anchor indices");

    auto rep = validate(PointSet(s), {Hypothesis::no_3_collinear, Hypothesis::no_4_cocircular},
                        0, opts);
    if (!rep.all_satisfied())
        throw hypothesis_error("intersection_bound_check: needs no 3 collinear, no 4 cocircular");

    // Surface = the largest sphere, else the largest plane; anchors must be
    // off it and k >= 2.
    auto spheres = sphere_index(s, opts);
    auto planes = plane_index(s, opts);
    const SphereKey* best_sphere = nullptr;
    int best_sphere_pts = 0;
    for (const auto& o : spheres.objects)
        if (o.points > best_sphere_pts) {
            best_sphere_pts = o.points;
            best_sphere = &o.key;
        }
    const PlaneKey* best_plane = nullptr;
    int best_plane_pts = 0;
    for (const auto& o : planes.objects)
        if (o.points > best_plane_pts) {
            best_plane_pts = o.points;
            best_plane = &o.key;
        }

    IntersectionRecord out;
    out.n = n;
    out.p = p;
    out.q = q;

    std::vector<std::size_t> surface_pts;
    if (best_sphere && best_sphere_pts >= best_plane_pts) {
        out.surface_is_sphere = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (incident(*best_sphere, s[i])) surface_pts.push_back(i);
    } else if (best_plane) {
        out.surface_is_sphere = false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (incident(*best_plane, s[i])) surface_pts.push_back(i);
    } else {
        throw hypothesis_error("intersection_bound_check: no determined sphere or plane");
    }

    out.k = n - static_cast<long long>(surface_pts.size());
    if (out.k < 2) throw hypothesis_error("intersection_bound_check: needs k >= 2 points off the surface");
    for (std::size_t a : surface_pts)
        if (a == p || a == q)
            throw hypothesis_error("intersection_bound_check: anchors must be off the surface");

    auto family = [&](std::size_t apex) {
        std::unordered_set<SphereKey, KeyHash<SphereKey>> fam;
        for (std::size_t a = 0; a < surface_pts.size(); ++a)
            for (std::size_t b = a + 1; b < surface_pts.size(); ++b)
                for (std::size_t c = b + 1; c < surface_pts.size(); ++c) {
                    const Point3& pa = s[surface_pts[a]];
                    const Point3& pb = s[surface_pts[b]];
                    const Point3& pc = s[surface_pts[c]];
                    if (detail::coplanar(pa, pb, pc, s[apex])) continue;
                    fam.insert(canon_sphere(s[apex], pa, pb, pc));
                }
        return fam;
    };
    auto fp = family(p);
    auto fq = family(q);
    out.sigma_p = static_cast<long long>(fp.size());
    out.sigma_q = static_cast<long long>(fq.size());
    long long common = 0;
    for (const auto& key : fp)
        if (fq.count(key)) ++common;
    out.common = common;
    out.bound = Rat(binom(n - out.k, 2)) / Rat(3);
    out.holds = Rat(common) <= out.bound;
    return out;
}

std::vector<SweepRow> sweep(const SweepOptions& so) {
    std::vector<std::pair<long long, int>> cells;
    for (long long n = so.n_min; n <= so.n_max; n += std::max<long long>(1, so.n_step))
        for (int tr = 0; tr < so.trials; ++tr) cells.emplace_back(n, tr);

    std::vector<SweepRow> rows(cells.size());
    auto run_cell = [&](std::size_t idx, const EnumOptions& cell_opts) {
        auto [n, tr] = cells[idx];
        SweepRow row;
        row.n = n;
        row.trial = tr;
        row.seed = so.seed + 1000003ull * static_cast<unsigned long long>(n) +
                   static_cast<unsigned long long>(tr);
        GeneratorSpec spec = so.base;
        spec.n = n;
        spec.seed = row.seed;
        try {
            Generated gen = generate(spec);
            row.generated = true;
            AuditReport rep = audit_config(gen.points, cell_opts);
            row.audit_ok = !rep.failed();
            for (const auto& e : rep.entries) {
                if (e.verdict == AuditEntry::Verdict::fail) row.failed_rules.push_back(e.rule);
                if (e.applicable && (!row.has_margin || e.margin < row.min_margin)) {
                    row.has_margin = true;
                    row.min_margin = e.margin;
                    row.min_margin_rule = e.rule;
                }
            }
        } catch (const error& err) {
            row.generated = false;
            row.error = err.what();
        }
        rows[idx] = std::move(row);
    };

    int jobs = std::max(1, so.enum_opts.jobs);
    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i, so.enum_opts);
    } else {
        // Parallelism goes to whole trials; inner enumerations run
        // single-threaded so the worker count stays bounded by `jobs`.
        EnumOptions inner = so.enum_opts;
        inner.jobs = 1;
        std::vector<std::thread> pool;
        std::size_t stripe = (cells.size() + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::size_t lo = w * stripe, hi = std::min(cells.size(), lo + stripe);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) run_cell(i, inner);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace ilab
