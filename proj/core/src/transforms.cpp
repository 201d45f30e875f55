#include "ilab/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ilab/errors.hpp"
#include "ilab/validate.hpp"
#include "linalg.hpp"

namespace ilab {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("transform invariant violated: ") + what);
}

} // namespace

ProjectedSet project_from_point(const PointSet3& s, std::size_t anchor) {
    if (anchor >= s.size()) throw invalid_input("project_from_point: anchor index out of range");
    ProjectedSet ps;
    ps.anchor = anchor;
    std::unordered_map<DirKey, std::size_t, KeyHash<DirKey>> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == anchor) continue;
        DirKey d = canon_direction(s[anchor], s[i]);
        auto [it, fresh] = seen.emplace(d, i);
        if (!fresh)
            throw hypothesis_error("project_from_point: points " + std::to_string(it->second) +
                                   ", " + std::to_string(i) + " are collinear with anchor " +
                                   std::to_string(anchor));
        ps.directions.push_back(d);
        ps.source_index.push_back(i);
    }
    return ps;
}

IncidenceProfile projected_line_profile(const ProjectedSet& ps, const EnumOptions&) {
    const std::size_t m = ps.directions.size();
    std::unordered_map<ProjLineKey, long long, KeyHash<ProjLineKey>> groups;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            ++groups[proj_line_through(ps.directions[i], ps.directions[j])];
    IncidenceProfile out;
    unsigned long long pair_sum = 0;
    for (const auto& [key, g] : groups) {
        long long k = 2;
        while (k * (k - 1) / 2 != g && k <= static_cast<long long>(m)) ++k;
        internal_check(k <= static_cast<long long>(m), "projected lines: group is C(k,2)");
        ++out.counts[static_cast<int>(k)];
        pair_sum += static_cast<unsigned long long>(g);
    }
    internal_check(pair_sum == m * (m - 1) / 2, "projected lines: pair identity");
    return out;
}

bool projection_all_collinear(const ProjectedSet& ps) {
    if (ps.directions.size() < 3) return true;
    ProjLineKey l = proj_line_through(ps.directions[0], ps.directions[1]);
    for (std::size_t i = 2; i < ps.directions.size(); ++i)
        if (!incident(l, ps.directions[i])) return false;
    return true;
}

Point2 invert_point(const Point2& q, const Point2& center) {
    Rat dx = q.x - center.x, dy = q.y - center.y;
    Rat d2 = dx * dx + dy * dy;
    if (d2.is_zero()) throw invalid_input("invert_point: point equals inversion center");
    return Point2{center.x + dx / d2, center.y + dy / d2};
}

Point3 invert_point(const Point3& q, const Point3& center) {
    Rat dx = q.x - center.x, dy = q.y - center.y, dz = q.z - center.z;
    Rat d2 = dx * dx + dy * dy + dz * dz;
    if (d2.is_zero()) throw invalid_input("invert_point: point equals inversion center");
    return Point3{center.x + dx / d2, center.y + dy / d2, center.z + dz / d2};
}

PointSet2 invert_circular(const PointSet2& s, const Point2& center) {
    if (s.index_of(center) >= 0)
        throw invalid_input("invert_circular: center belongs to the set");
    std::vector<Point2> out;
    out.reserve(s.size());
    for (const auto& q : s) out.push_back(invert_point(q, center));
    return PointSet2(std::move(out));
}

PointSet3 invert_spherical(const PointSet3& s, const Point3& center) {
    if (s.index_of(center) >= 0)
        throw invalid_input("invert_spherical: center belongs to the set");
    std::vector<Point3> out;
    out.reserve(s.size());
    for (const auto& q : s) out.push_back(invert_point(q, center));
    return PointSet3(std::move(out));
}

namespace {

InversionCorrespondence correspondence2(const PointSet2& s, std::size_t anchor,
                                        const EnumOptions& opts) {
    InversionCorrespondence out;
    out.anchor = anchor;
    out.dim = 2;
    const Point2& p = s[anchor];
    std::vector<Point2> rest;
    std::vector<std::size_t> rest_src;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != anchor) {
            rest.push_back(s[i]);
            rest_src.push_back(i);
        }
    PointSet2 inv_set = invert_circular(PointSet2(rest), p);

    auto circles = circle_index(s, opts);
    auto lines = line_index(inv_set, opts);

    std::unordered_map<LineKey2, int, KeyHash<LineKey2>> open_lines;
    for (const auto& l : lines.objects)
        if (!incident(l.key, p)) open_lines.emplace(l.key, l.points);

    bool ok = true;
    for (const auto& c : circles.objects) {
        if (!incident(c.key, p)) continue;
        auto pts = incident_points(c.key, s);
        // Partner line through the images of two non-anchor points.
        std::vector<Point2> imgs;
        for (std::size_t idx : pts)
            if (idx != anchor && imgs.size() < 2) imgs.push_back(invert_point(s[idx], p));
        internal_check(imgs.size() == 2, "correspondence: circle through anchor has >= 2 other points");
        LineKey2 partner = canon_line(imgs[0], imgs[1]);
        auto it = open_lines.find(partner);
        if (it == open_lines.end() || it->second != c.points - 1) {
            ok = false;
        } else {
            out.rows.push_back({c.key.str(), partner.str(), c.points, it->second});
            ++out.object_profile.counts[c.points];
            ++out.partner_profile.counts[it->second];
            open_lines.erase(it);
        }
    }
    out.bijection_ok = ok && open_lines.empty();
    return out;
}

InversionCorrespondence correspondence3(const PointSet3& s, std::size_t anchor,
                                        const EnumOptions& opts) {
    auto report = validate(PointSet(s), {Hypothesis::no_3_collinear, Hypothesis::no_4_cocircular},
                           0, opts);
    if (!report.all_satisfied())
        throw hypothesis_error(
            "inversion_correspondence: needs no 3 collinear and no 4 cocircular");

    InversionCorrespondence out;
    out.anchor = anchor;
    out.dim = 3;
    const Point3& p = s[anchor];
    std::vector<Point3> rest;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != anchor) rest.push_back(s[i]);
    PointSet3 inv_set = invert_spherical(PointSet3(rest), p);

    auto spheres = sphere_index(s, opts);
    auto planes = plane_index(inv_set, opts);

    std::unordered_map<PlaneKey, int, KeyHash<PlaneKey>> open_planes;
    for (const auto& pl : planes.objects)
        if (!incident(pl.key, p)) open_planes.emplace(pl.key, pl.points);

    bool ok = true;
    for (const auto& sp : spheres.objects) {
        if (!incident(sp.key, p)) continue;
        auto pts = incident_points(sp.key, s);
        std::vector<Point3> imgs;
        for (std::size_t idx : pts)
            if (idx != anchor && imgs.size() < 3) imgs.push_back(invert_point(s[idx], p));
        internal_check(imgs.size() == 3, "correspondence: sphere through anchor has >= 3 other points");
        PlaneKey partner = canon_plane(imgs[0], imgs[1], imgs[2]);
        auto it = open_planes.find(partner);
        if (it == open_planes.end() || it->second != sp.points - 1) {
            ok = false;
        } else {
            out.rows.push_back({sp.key.str(), partner.str(), sp.points, it->second});
            ++out.object_profile.counts[sp.points];
            ++out.partner_profile.counts[it->second];
            open_planes.erase(it);
        }
    }
    out.bijection_ok = ok && open_planes.empty();
    return out;
}

} // namespace

InversionCorrespondence inversion_correspondence(const PointSet& s, std::size_t anchor,
                                                 const EnumOptions& opts) {
    if (anchor >= size_of(s))
        throw invalid_input("inversion_correspondence: anchor index out of range");
    if (const auto* s2 = std::get_if<PointSet2>(&s)) return correspondence2(*s2, anchor, opts);
    return correspondence3(std::get<PointSet3>(s), anchor, opts);
}

} // namespace ilab
