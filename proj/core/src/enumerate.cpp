#include "ilab/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ilab/errors.hpp"
#include "ilab/predicates.hpp"

namespace ilab {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("counting identity violated: ") + what);
}

unsigned long long binom_u64(unsigned long long n, int r) {
    if (n < static_cast<unsigned long long>(r)) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

// Multiplicity k from a group of C(k,2) pairs.
int invert_binom2(long long g, std::size_t n) {
    auto k = static_cast<long long>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(g))) / 2.0);
    for (long long c = std::max<long long>(2, k - 2); c <= k + 2 && c <= static_cast<long long>(n); ++c)
        if (c * (c - 1) / 2 == g) return static_cast<int>(c);
    throw std::logic_error("invert_binom2: group size is not a binomial C(k,2)");
}

// Multiplicity k from a group of C(k,3) triples; k is at most n.
int invert_binom3(long long g, std::size_t n) {
    for (long long k = 3; k <= static_cast<long long>(n); ++k)
        if (k * (k - 1) * (k - 2) / 6 == g) return static_cast<int>(k);
    throw std::logic_error("invert_binom3: group size is not a binomial C(k,3)");
}

// Split the first index of a tuple scan into contiguous ranges with roughly
// equal tuple counts. weight(i) = C(n-1-i, order-1).
std::vector<std::pair<std::size_t, std::size_t>> split_first_index(std::size_t n, int order, int jobs) {
    if (jobs < 1) jobs = 1;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    if (n == 0) return ranges;
    if (jobs == 1) {
        ranges.emplace_back(0, n);
        return ranges;
    }
    unsigned long long total = binom_u64(n, order);
    unsigned long long target = total / static_cast<unsigned long long>(jobs) + 1;
    std::size_t start = 0;
    unsigned long long acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += binom_u64(n - 1 - i, order - 1);
        if (acc >= target || i + 1 == n) {
            ranges.emplace_back(start, i + 1);
            start = i + 1;
            acc = 0;
        }
    }
    return ranges;
}

// Runs `body(lo, hi, slot)` over the given ranges, possibly on worker
// threads. Exceptions are rethrown on the calling thread.
template <class Slot, class Body>
std::vector<Slot> run_partitioned(const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                                  const Body& body) {
    std::vector<Slot> slots(ranges.size());
    if (ranges.size() <= 1) {
        if (!ranges.empty()) body(ranges[0].first, ranges[0].second, slots[0]);
        return slots;
    }
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t t = 0; t < ranges.size(); ++t) {
        threads.emplace_back([&, t] {
            try {
                body(ranges[t].first, ranges[t].second, slots[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return slots;
}

template <class Key>
using GroupMap = std::unordered_map<Key, long long, KeyHash<Key>>;

template <class Key>
GroupMap<Key> merge_groups(std::vector<GroupMap<Key>>&& parts) {
    GroupMap<Key> merged;
    for (auto& part : parts) {
        if (merged.empty()) {
            merged = std::move(part);
            continue;
        }
        for (auto& [key, cnt] : part) merged[key] += cnt;
    }
    return merged;
}

template <class Key, class Set>
int incident_count(const Key& key, const Set& s) {
    int c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (incident(key, s[i])) ++c;
    return c;
}

} // namespace

unsigned long long sphere_quadruple_budget(const EnumOptions& opts) {
    if (opts.max_quadruples > 0) return opts.max_quadruples;
    long long cap_n = 120;
    if (const char* env = std::getenv("INCIDENCE_LAB_MAX_N")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 4 && v <= 20000) cap_n = v;
    }
    return binom_u64(static_cast<unsigned long long>(cap_n), 4);
}

LineIndex line_index(const PointSet2& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    LineIndex idx;
    if (n < 2) return idx;
    auto parts = run_partitioned<GroupMap<LineKey2>>(
        split_first_index(n, 2, opts.jobs), [&](std::size_t lo, std::size_t hi, GroupMap<LineKey2>& m) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j) ++m[canon_line(s[i], s[j])];
        });
    auto groups = merge_groups(std::move(parts));
    unsigned long long pair_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        int k = invert_binom2(g, n);
        pair_sum += static_cast<unsigned long long>(g);
        idx.objects.push_back({key, k});
    }
    internal_check(pair_sum == binom_u64(n, 2), "lines: sum C(k,2) t_k == C(n,2)");
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

CircleIndex circle_index(const PointSet2& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    CircleIndex idx;
    if (n < 3) return idx;
    struct Slot {
        GroupMap<CircleKey> m;
        long long collinear = 0;
    };
    auto parts = run_partitioned<Slot>(
        split_first_index(n, 3, opts.jobs), [&](std::size_t lo, std::size_t hi, Slot& slot) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) {
                        if (collinear3(s[i], s[j], s[k])) {
                            ++slot.collinear;
                            continue;
                        }
                        ++slot.m[canon_circle(s[i], s[j], s[k])];
                    }
        });
    long long collinear = 0;
    std::vector<GroupMap<CircleKey>> maps;
    maps.reserve(parts.size());
    for (auto& p : parts) {
        collinear += p.collinear;
        maps.push_back(std::move(p.m));
    }
    auto groups = merge_groups(std::move(maps));
    unsigned long long triple_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        // No three points of a circle are collinear, so the group always
        // holds all C(r,3) triples of the circle.
        int r = invert_binom3(g, n);
        triple_sum += static_cast<unsigned long long>(g);
        idx.objects.push_back({key, r});
    }
    idx.degenerate_tuples = collinear;
    internal_check(triple_sum + static_cast<unsigned long long>(collinear) == binom_u64(n, 3),
                   "circles: sum C(r,3) c_r + collinear triples == C(n,3)");
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

PlaneIndex plane_index(const PointSet3& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    PlaneIndex idx;
    if (n < 3) return idx;
    struct Slot {
        GroupMap<PlaneKey> m;
        long long collinear = 0;
    };
    auto parts = run_partitioned<Slot>(
        split_first_index(n, 3, opts.jobs), [&](std::size_t lo, std::size_t hi, Slot& slot) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) {
                        if (collinear3(s[i], s[j], s[k])) {
                            ++slot.collinear;
                            continue;
                        }
                        ++slot.m[canon_plane(s[i], s[j], s[k])];
                    }
        });
    long long collinear = 0;
    std::vector<GroupMap<PlaneKey>> maps;
    maps.reserve(parts.size());
    for (auto& p : parts) {
        collinear += p.collinear;
        maps.push_back(std::move(p.m));
    }
    auto groups = merge_groups(std::move(maps));
    unsigned long long triple_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        triple_sum += static_cast<unsigned long long>(g);
        int k;
        if (collinear == 0) {
            k = invert_binom3(g, n);
        } else if (g == 1) {
            // A plane contributing a single non-collinear triple has exactly
            // three points: with four or more, at least three triples survive.
            k = 3;
        } else {
            k = incident_count(key, s);
        }
        idx.objects.push_back({key, k});
    }
    idx.degenerate_tuples = collinear;
    internal_check(triple_sum + static_cast<unsigned long long>(collinear) == binom_u64(n, 3),
                   "planes: group sizes + collinear triples == C(n,3)");
    if (collinear == 0) {
        unsigned long long check = 0;
        for (const auto& o : idx.objects)
            check += binom_u64(static_cast<unsigned long long>(o.points), 3);
        internal_check(check == binom_u64(n, 3), "planes: sum C(k,3) m_k == C(n,3)");
    }
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

SphereIndex sphere_index(const PointSet3& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    SphereIndex idx;
    if (n < 4) return idx;
    const unsigned long long quads = binom_u64(n, 4);
    const unsigned long long budget = sphere_quadruple_budget(opts);
    if (quads > budget)
        throw cap_exceeded("sphere enumeration: C(" + std::to_string(n) + ",4) = " +
                           std::to_string(quads) + " quadruples exceeds budget " +
                           std::to_string(budget) +
                           " (raise with --max-quadruples or INCIDENCE_LAB_MAX_N)");
    struct Slot {
        GroupMap<SphereKey> m;
        long long coplanar = 0;
    };
    auto parts = run_partitioned<Slot>(
        split_first_index(n, 4, opts.jobs), [&](std::size_t lo, std::size_t hi, Slot& slot) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k)
                        for (std::size_t l = k + 1; l < n; ++l) {
                            if (coplanar4(s[i], s[j], s[k], s[l])) {
                                ++slot.coplanar;
                                continue;
                            }
                            ++slot.m[canon_sphere(s[i], s[j], s[k], s[l])];
                        }
        });
    long long coplanar = 0;
    std::vector<GroupMap<SphereKey>> maps;
    maps.reserve(parts.size());
    for (auto& p : parts) {
        coplanar += p.coplanar;
        maps.push_back(std::move(p.m));
    }
    auto groups = merge_groups(std::move(maps));
    unsigned long long quad_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        quad_sum += static_cast<unsigned long long>(g);
        int r;
        if (coplanar == 0) {
            // No coplanar quadruples anywhere, hence none on any sphere.
            long long k = 4;
            while (k <= static_cast<long long>(n) && binom_u64(k, 4) != static_cast<unsigned long long>(g)) ++k;
            internal_check(k <= static_cast<long long>(n), "spheres: group size is a binomial C(r,4)");
            r = static_cast<int>(k);
        } else if (g == 1) {
            // A sphere with five or more points, not all concyclic, yields at
            // least four non-coplanar quadruples; a single survivor means r=4.
            r = 4;
        } else {
            r = incident_count(key, s);
        }
        idx.objects.push_back({key, r});
    }
    idx.degenerate_tuples = coplanar;
    internal_check(quad_sum + static_cast<unsigned long long>(coplanar) == binom_u64(n, 4),
                   "spheres: group sizes + coplanar quadruples == C(n,4)");
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

Line3Index line3_index(const PointSet3& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    Line3Index idx;
    if (n < 2) return idx;
    auto parts = run_partitioned<GroupMap<Line3Key>>(
        split_first_index(n, 2, opts.jobs), [&](std::size_t lo, std::size_t hi, GroupMap<Line3Key>& m) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j) ++m[canon_line3(s[i], s[j])];
        });
    auto groups = merge_groups(std::move(parts));
    unsigned long long pair_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        pair_sum += static_cast<unsigned long long>(g);
        idx.objects.push_back({key, invert_binom2(g, n)});
    }
    internal_check(pair_sum == binom_u64(n, 2), "lines3: sum C(k,2) t_k == C(n,2)");
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

Circle3Index circle3_index(const PointSet3& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    Circle3Index idx;
    if (n < 3) return idx;
    struct Slot {
        GroupMap<Circle3Key> m;
        long long collinear = 0;
    };
    auto parts = run_partitioned<Slot>(
        split_first_index(n, 3, opts.jobs), [&](std::size_t lo, std::size_t hi, Slot& slot) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) {
                        if (collinear3(s[i], s[j], s[k])) {
                            ++slot.collinear;
                            continue;
                        }
                        ++slot.m[canon_circle3(s[i], s[j], s[k])];
                    }
        });
    long long collinear = 0;
    std::vector<GroupMap<Circle3Key>> maps;
    maps.reserve(parts.size());
    for (auto& p : parts) {
        collinear += p.collinear;
        maps.push_back(std::move(p.m));
    }
    auto groups = merge_groups(std::move(maps));
    unsigned long long triple_sum = 0;
    idx.objects.reserve(groups.size());
    for (const auto& [key, g] : groups) {
        triple_sum += static_cast<unsigned long long>(g);
        idx.objects.push_back({key, invert_binom3(g, n)});
    }
    idx.degenerate_tuples = collinear;
    internal_check(triple_sum + static_cast<unsigned long long>(collinear) == binom_u64(n, 3),
                   "circles3: sum C(r,3) + collinear triples == C(n,3)");
    std::sort(idx.objects.begin(), idx.objects.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return idx;
}

IncidenceProfile line_profile(const PointSet2& s, const EnumOptions& opts) {
    return line_index(s, opts).profile();
}
IncidenceProfile circle_profile(const PointSet2& s, const EnumOptions& opts) {
    return circle_index(s, opts).profile();
}
IncidenceProfile plane_profile(const PointSet3& s, const EnumOptions& opts) {
    return plane_index(s, opts).profile();
}
IncidenceProfile sphere_profile(const PointSet3& s, const EnumOptions& opts) {
    return sphere_index(s, opts).profile();
}
IncidenceProfile line3_profile(const PointSet3& s, const EnumOptions& opts) {
    return line3_index(s, opts).profile();
}

PointDegreeProfile point_degrees(const PointSet2& s, const EnumOptions& opts) {
    auto lines = line_index(s, opts);
    std::vector<long long> degree(s.size(), 0);
    for (const auto& o : lines.objects)
        for (std::size_t i = 0; i < s.size(); ++i)
            if (incident(o.key, s[i])) ++degree[i];
    PointDegreeProfile out;
    for (long long d : degree) ++out.counts[static_cast<int>(d)];
    long long incidences_by_point = 0;
    for (long long d : degree) incidences_by_point += d;
    long long incidences_by_line = 0;
    for (const auto& o : lines.objects) incidences_by_line += o.points;
    internal_check(incidences_by_point == incidences_by_line,
                   "degrees: sum i r_i == sum k t_k");
    return out;
}

PairDegreeProfile pair_degrees(const PointSet3& s, const EnumOptions& opts) {
    const std::size_t n = s.size();
    auto planes = plane_index(s, opts);
    std::vector<long long> deg(n * n, 0);
    long long weighted_by_plane = 0;
    for (const auto& o : planes.objects) {
        auto pts = incident_points(o.key, s);
        weighted_by_plane += binom_u64(pts.size(), 2);
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) ++deg[pts[a] * n + pts[b]];
    }
    PairDegreeProfile out;
    long long weighted_by_pair = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long long d = deg[i * n + j];
            ++out.counts[static_cast<int>(d)];
            weighted_by_pair += d;
        }
    internal_check(weighted_by_pair == weighted_by_plane,
                   "pair degrees: sum i P_i == sum C(k,2) m_k");
    long long pairs = 0;
    for (const auto& [i, c] : out.counts) pairs += c;
    internal_check(pairs == static_cast<long long>(binom_u64(n, 2)), "pair degrees: sum P_i == C(n,2)");
    return out;
}

namespace {

template <class Index, class Set>
ThroughPointProfile through_point_from_index(const Index& idx, const Set& s, std::size_t anchor) {
    ThroughPointProfile out;
    out.anchor = anchor;
    for (const auto& o : idx.objects)
        if (incident(o.key, s[anchor])) ++out.profile.counts[o.points];
    return out;
}

} // namespace

ThroughPointProfile profile_through_point(const PointSet& s, std::size_t anchor,
                                          ObjectKind kind, const EnumOptions& opts) {
    if (anchor >= size_of(s)) throw invalid_input("profile_through_point: anchor index out of range");
    if (const auto* s2 = std::get_if<PointSet2>(&s)) {
        switch (kind) {
            case ObjectKind::lines: return through_point_from_index(line_index(*s2, opts), *s2, anchor);
            case ObjectKind::circles: return through_point_from_index(circle_index(*s2, opts), *s2, anchor);
            default: throw invalid_input("profile_through_point: planes/spheres need a 3D set");
        }
    }
    const auto& s3 = std::get<PointSet3>(s);
    switch (kind) {
        case ObjectKind::lines: return through_point_from_index(line3_index(s3, opts), s3, anchor);
        case ObjectKind::circles: return through_point_from_index(circle3_index(s3, opts), s3, anchor);
        case ObjectKind::planes: return through_point_from_index(plane_index(s3, opts), s3, anchor);
        case ObjectKind::spheres: return through_point_from_index(sphere_index(s3, opts), s3, anchor);
    }
    throw invalid_input("profile_through_point: unknown kind");
}

std::vector<std::size_t> incident_points(const LineKey2& key, const PointSet2& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (incident(key, s[i])) out.push_back(i);
    return out;
}
std::vector<std::size_t> incident_points(const CircleKey& key, const PointSet2& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (incident(key, s[i])) out.push_back(i);
    return out;
}
std::vector<std::size_t> incident_points(const PlaneKey& key, const PointSet3& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (incident(key, s[i])) out.push_back(i);
    return out;
}
std::vector<std::size_t> incident_points(const SphereKey& key, const PointSet3& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (incident(key, s[i])) out.push_back(i);
    return out;
}

} // namespace ilab
