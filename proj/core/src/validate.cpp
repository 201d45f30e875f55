#include "ilab/validate.hpp"

#include <algorithm>

#include "ilab/errors.hpp"
#include "ilab/predicates.hpp"

namespace ilab {

namespace {

// Extremal object of an index: (multiplicity, witness indices).
template <class Index, class Set>
std::pair<long long, std::vector<std::size_t>> max_object(const Index& idx, const Set& s,
                                                          std::size_t cap_witness) {
    long long best = 0;
    std::size_t at = idx.objects.size();
    for (std::size_t i = 0; i < idx.objects.size(); ++i) {
        if (idx.objects[i].points > best) {
            best = idx.objects[i].points;
            at = i;
        }
    }
    std::vector<std::size_t> witness;
    if (at < idx.objects.size() && cap_witness > 0) {
        for (std::size_t i = 0; i < s.size() && witness.size() < cap_witness; ++i)
            if (incident(idx.objects[at].key, s[i])) witness.push_back(i);
    }
    return {best, witness};
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::no_3_collinear: return "no-3-collinear";
        case Hypothesis::no_4_cocircular: return "no-4-cocircular";
        case Hypothesis::not_all_collinear: return "not-all-collinear";
        case Hypothesis::not_all_coplanar: return "not-all-coplanar";
        case Hypothesis::not_all_cocircular: return "not-all-cocircular";
        case Hypothesis::not_all_cospherical: return "not-all-cospherical";
        case Hypothesis::max_collinear_n_minus_k: return "max-collinear<=n-k";
        case Hypothesis::max_coplanar_n_minus_k: return "max-coplanar<=n-k";
        case Hypothesis::max_cospherical_n_minus_k: return "max-cospherical<=n-k";
    }
    return "?";
}

Hypothesis hypothesis_from_string(const std::string& name) {
    if (name == "no-3-collinear") return Hypothesis::no_3_collinear;
    if (name == "no-4-cocircular") return Hypothesis::no_4_cocircular;
    if (name == "not-all-collinear") return Hypothesis::not_all_collinear;
    if (name == "not-all-coplanar") return Hypothesis::not_all_coplanar;
    if (name == "not-all-cocircular") return Hypothesis::not_all_cocircular;
    if (name == "not-all-cospherical") return Hypothesis::not_all_cospherical;
    if (name == "max-collinear<=n-k") return Hypothesis::max_collinear_n_minus_k;
    if (name == "max-coplanar<=n-k") return Hypothesis::max_coplanar_n_minus_k;
    if (name == "max-cospherical<=n-k") return Hypothesis::max_cospherical_n_minus_k;
    throw invalid_input("unknown hypothesis '" + name + "'");
}

GeometrySummary summarize_geometry(const PointSet& s, const EnumOptions& opts, bool with_spheres) {
    GeometrySummary g;
    g.n = static_cast<long long>(size_of(s));
    g.dim = dim_of(s);
    if (const auto* s2 = std::get_if<PointSet2>(&s)) {
        if (g.n >= 2) {
            auto [best, w] = max_object(line_index(*s2, opts), *s2, 0);
            g.max_collinear = best;
        }
        if (g.n >= 3) {
            auto [best, w] = max_object(circle_index(*s2, opts), *s2, 0);
            g.max_cocircular = best;
        }
        g.all_collinear = g.n <= 2 || g.max_collinear == g.n;
        g.all_cocircular = g.n <= 2 || g.max_cocircular == g.n;
        return g;
    }
    const auto& s3 = std::get<PointSet3>(s);
    if (g.n >= 2) {
        auto [best, w] = max_object(line3_index(s3, opts), s3, 0);
        g.max_collinear = best;
    }
    if (g.n >= 3) {
        auto [bp, wp] = max_object(plane_index(s3, opts), s3, 0);
        g.max_coplanar = bp;
        auto [bc, wc] = max_object(circle3_index(s3, opts), s3, 0);
        g.max_cocircular = bc;
    }
    g.all_collinear = g.n <= 2 || g.max_collinear == g.n;
    g.all_coplanar = g.n <= 3 || g.all_collinear || g.max_coplanar == g.n;
    if (with_spheres && g.n >= 4 && !g.all_collinear) {
        auto [bs, ws] = max_object(sphere_index(s3, opts), s3, 0);
        g.max_cospherical = bs;
        g.spheres_scanned = true;
        // A fully coplanar, fully concyclic set lies on a pencil of spheres.
        g.all_cospherical = g.max_cospherical == g.n ||
                            (g.all_coplanar && g.max_cocircular == g.n);
    } else if (g.n <= 3) {
        g.all_cospherical = true;
    } else if (g.all_collinear) {
        g.all_cospherical = false;
    }
    return g;
}

ValidationReport validate(const PointSet& s, const std::vector<Hypothesis>& requested,
                          long long k, const EnumOptions& opts) {
    ValidationReport report;
    const long long n = static_cast<long long>(size_of(s));
    const int dim = dim_of(s);
    const auto* s2 = std::get_if<PointSet2>(&s);
    const auto* s3 = std::get_if<PointSet3>(&s);

    for (Hypothesis h : requested) {
        HypothesisCheck check;
        check.which = h;
        switch (h) {
            case Hypothesis::no_3_collinear: {
                long long best = 0;
                std::vector<std::size_t> w;
                if (n >= 3) {
                    if (s2) std::tie(best, w) = max_object(line_index(*s2, opts), *s2, 3);
                    else std::tie(best, w) = max_object(line3_index(*s3, opts), *s3, 3);
                }
                check.satisfied = best <= 2;
                if (!check.satisfied) check.witness = w;
                check.detail = "max collinear = " + std::to_string(std::max<long long>(best, n >= 2 ? 2 : n));
                break;
            }
            case Hypothesis::no_4_cocircular: {
                long long best = 0;
                std::vector<std::size_t> w;
                if (n >= 4) {
                    if (s2) std::tie(best, w) = max_object(circle_index(*s2, opts), *s2, 4);
                    else std::tie(best, w) = max_object(circle3_index(*s3, opts), *s3, 4);
                }
                check.satisfied = best <= 3;
                if (!check.satisfied) check.witness = w;
                check.detail = "max cocircular = " + std::to_string(best);
                break;
            }
            case Hypothesis::not_all_collinear: {
                auto g = summarize_geometry(s, opts, false);
                check.satisfied = !g.all_collinear;
                if (!check.satisfied) check.witness = all_indices(static_cast<std::size_t>(n));
                break;
            }
            case Hypothesis::not_all_coplanar: {
                if (dim != 3) throw invalid_input("not-all-coplanar applies to 3D sets");
                auto g = summarize_geometry(s, opts, false);
                check.satisfied = !g.all_coplanar;
                if (!check.satisfied) check.witness = all_indices(static_cast<std::size_t>(n));
                break;
            }
            case Hypothesis::not_all_cocircular: {
                if (dim != 2) throw invalid_input("not-all-cocircular applies to 2D sets");
                auto g = summarize_geometry(s, opts, false);
                check.satisfied = !g.all_cocircular;
                if (!check.satisfied) check.witness = all_indices(static_cast<std::size_t>(n));
                break;
            }
            case Hypothesis::not_all_cospherical: {
                if (dim != 3) throw invalid_input("not-all-cospherical applies to 3D sets");
                auto g = summarize_geometry(s, opts, true);
                check.satisfied = !g.all_cospherical;
                if (!check.satisfied) check.witness = all_indices(static_cast<std::size_t>(n));
                break;
            }
            case Hypothesis::max_collinear_n_minus_k: {
                long long best = n >= 2 ? 2 : n;
                std::vector<std::size_t> w;
                if (n >= 3) {
                    if (s2) std::tie(best, w) = max_object(line_index(*s2, opts), *s2, 64);
                    else std::tie(best, w) = max_object(line3_index(*s3, opts), *s3, 64);
                }
                check.satisfied = best <= n - k;
                if (!check.satisfied) check.witness = w;
                check.detail = "max collinear = " + std::to_string(best) + ", limit " + std::to_string(n - k);
                break;
            }
            case Hypothesis::max_coplanar_n_minus_k: {
                if (dim != 3) throw invalid_input("max-coplanar<=n-k applies to 3D sets");
                long long best = std::min<long long>(n, 3);
                std::vector<std::size_t> w;
                if (n >= 4) std::tie(best, w) = max_object(plane_index(*s3, opts), *s3, 64);
                check.satisfied = best <= n - k;
                if (!check.satisfied) check.witness = w;
                check.detail = "max coplanar = " + std::to_string(best) + ", limit " + std::to_string(n - k);
                break;
            }
            case Hypothesis::max_cospherical_n_minus_k: {
                if (dim != 3) throw invalid_input("max-cospherical<=n-k applies to 3D sets");
                long long best = std::min<long long>(n, 4);
                std::vector<std::size_t> w;
                if (n >= 5) std::tie(best, w) = max_object(sphere_index(*s3, opts), *s3, 64);
                check.satisfied = best <= n - k;
                if (!check.satisfied) check.witness = w;
                check.detail = "max cospherical = " + std::to_string(best) + ", limit " + std::to_string(n - k);
                break;
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace ilab
