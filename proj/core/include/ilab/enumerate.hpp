#pragma once

// Brute-force enumeration of all determined lines, circles, planes and
// spheres of a point set, grouped by canonical key. Counting identities are
// asserted on every run; a violation means a library bug and throws.

#include <cstdint>
#include <vector>

#include "ilab/canonical.hpp"
#include "ilab/geometry.hpp"
#include "ilab/profiles.hpp"

namespace ilab {

struct EnumOptions {
    /// Worker threads for the pair/triple/quadruple scans. Results are
    /// bit-identical to sequential execution for any value.
    int jobs = 1;

    /// Work budget for sphere enumeration, counted in 4-subsets. Zero means
    /// "resolve from the environment": C(N,4) with N from INCIDENCE_LAB_MAX_N
    /// (default 120). Exceeding the budget throws cap_exceeded.
    unsigned long long max_quadruples = 0;
};

/// The effective quadruple budget after applying the environment override.
unsigned long long sphere_quadruple_budget(const EnumOptions& opts);

template <class Key>
struct ObjectEntry {
    Key key;
    int points; // exact multiplicity
};

/// Deduplicated objects of one kind, sorted by canonical key.
template <class Key>
struct ObjectIndex {
    std::vector<ObjectEntry<Key>> objects;
    long long degenerate_tuples = 0; // collinear triples / coplanar quadruples skipped

    IncidenceProfile profile() const {
        IncidenceProfile p;
        for (const auto& o : objects) ++p.counts[o.points];
        return p;
    }
    long long size() const { return static_cast<long long>(objects.size()); }
};

using LineIndex = ObjectIndex<LineKey2>;
using CircleIndex = ObjectIndex<CircleKey>;
using PlaneIndex = ObjectIndex<PlaneKey>;
using SphereIndex = ObjectIndex<SphereKey>;
using Line3Index = ObjectIndex<Line3Key>;
using Circle3Index = ObjectIndex<Circle3Key>;

LineIndex line_index(const PointSet2& s, const EnumOptions& opts = {});
CircleIndex circle_index(const PointSet2& s, const EnumOptions& opts = {});
PlaneIndex plane_index(const PointSet3& s, const EnumOptions& opts = {});
SphereIndex sphere_index(const PointSet3& s, const EnumOptions& opts = {});
Line3Index line3_index(const PointSet3& s, const EnumOptions& opts = {});
Circle3Index circle3_index(const PointSet3& s, const EnumOptions& opts = {});

/// t_k: lines by exact multiplicity. Pair identity sum C(k,2) t_k = C(n,2)
/// is asserted.
IncidenceProfile line_profile(const PointSet2& s, const EnumOptions& opts = {});

/// c_r: circles through >= 3 points; collinear triples determine no circle
/// and are skipped. Partition identity asserted.
IncidenceProfile circle_profile(const PointSet2& s, const EnumOptions& opts = {});

/// m_k: planes by exact multiplicity. With no three points collinear the
/// triple identity sum C(k,3) m_k = C(n,3) is asserted.
IncidenceProfile plane_profile(const PointSet3& s, const EnumOptions& opts = {});

/// s_r: spheres through >= 4 points; coplanar quadruples are skipped.
/// Subject to the quadruple budget.
IncidenceProfile sphere_profile(const PointSet3& s, const EnumOptions& opts = {});

/// Lines determined by a 3D set (used for line/plane comparisons and for
/// configurations with many collinear points).
IncidenceProfile line3_profile(const PointSet3& s, const EnumOptions& opts = {});

/// r_i: points by the number of determined lines through them.
PointDegreeProfile point_degrees(const PointSet2& s, const EnumOptions& opts = {});

/// P_i: point pairs by the number of determined planes through them.
/// Asserts sum i*P_i = sum C(k,2) m_k.
PairDegreeProfile pair_degrees(const PointSet3& s, const EnumOptions& opts = {});

enum class ObjectKind { lines, circles, planes, spheres };

/// Per-anchor profile t_k(p) / c_r(p) / m_k(p) / s_r(p); multiplicities count
/// the anchor itself. Throws invalid_input when the anchor is out of range.
ThroughPointProfile profile_through_point(const PointSet& s, std::size_t anchor,
                                          ObjectKind kind, const EnumOptions& opts = {});

/// Indices of all points of the set incident to the object.
std::vector<std::size_t> incident_points(const LineKey2& key, const PointSet2& s);
std::vector<std::size_t> incident_points(const CircleKey& key, const PointSet2& s);
std::vector<std::size_t> incident_points(const PlaneKey& key, const PointSet3& s);
std::vector<std::size_t> incident_points(const SphereKey& key, const PointSet3& s);

} // namespace ilab
