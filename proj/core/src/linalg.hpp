#pragma once

// Internal exact linear algebra on small fixed-size rational systems.
// Not installed; everything here is implementation detail of the library.

#include <array>
#include <optional>

#include "ilab/geometry.hpp"
#include "ilab/rational.hpp"

namespace ilab::detail {

using V2 = std::array<Rat, 2>;
using V3 = std::array<Rat, 3>;

inline Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return a * d - b * c;
}

inline Rat det3(const V3& r0, const V3& r1, const V3& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
         - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
         + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

inline Rat det4(const std::array<Rat, 4>& r0, const std::array<Rat, 4>& r1,
                const std::array<Rat, 4>& r2, const std::array<Rat, 4>& r3) {
    Rat out = 0;
    int sign = 1;
    for (int col = 0; col < 4; ++col) {
        V3 m0, m1, m2;
        int c = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == col) continue;
            m0[c] = r1[j];
            m1[c] = r2[j];
            m2[c] = r3[j];
            ++c;
        }
        Rat term = r0[col] * det3(m0, m1, m2);
        out += (sign > 0) ? term : -term;
        sign = -sign;
    }
    return out;
}

inline V3 cross(const V3& a, const V3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot(const V3& a, const V3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline V3 sub(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline V2 sub2(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
}

inline Rat norm2(const V3& a) { return dot(a, a); }
inline Rat norm2_2(const V2& a) { return a[0] * a[0] + a[1] * a[1]; }

inline bool is_zero(const V3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

/// Cramer solve of a 2x2 system; nullopt when singular.
inline std::optional<V2> solve2(const V2& r0, const V2& r1, const Rat& b0, const Rat& b1) {
    Rat d = det2(r0[0], r0[1], r1[0], r1[1]);
    if (d.is_zero()) return std::nullopt;
    Rat x = det2(b0, r0[1], b1, r1[1]) / d;
    Rat y = det2(r0[0], b0, r1[0], b1) / d;
    return V2{x, y};
}

/// Cramer solve of a 3x3 system; nullopt when singular.
inline std::optional<V3> solve3(const V3& r0, const V3& r1, const V3& r2,
                                const Rat& b0, const Rat& b1, const Rat& b2) {
    Rat d = det3(r0, r1, r2);
    if (d.is_zero()) return std::nullopt;
    Rat x = det3({b0, r0[1], r0[2]}, {b1, r1[1], r1[2]}, {b2, r2[1], r2[2]}) / d;
    Rat y = det3({r0[0], b0, r0[2]}, {r1[0], b1, r1[2]}, {r2[0], b2, r2[2]}) / d;
    Rat z = det3({r0[0], r0[1], b0}, {r1[0], r1[1], b1}, {r2[0], r2[1], b2}) / d;
    return V3{x, y, z};
}

// Non-throwing predicate cores shared by the public predicates and the
// generators' rejection sampling.

inline bool collinear(const Point2& p, const Point2& q, const Point2& r) {
    V2 u = sub2(q, p), v = sub2(r, p);
    return det2(u[0], u[1], v[0], v[1]).is_zero();
}

inline bool collinear(const Point3& p, const Point3& q, const Point3& r) {
    return is_zero(cross(sub(q, p), sub(r, p)));
}

inline bool coplanar(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    return det3(sub(q, p), sub(r, p), sub(s, p)).is_zero();
}

/// Center of the circle through three non-collinear points in space.
inline std::optional<V3> circumcenter3(const Point3& p, const Point3& q, const Point3& r) {
    V3 u = sub(q, p), v = sub(r, p);
    V3 n = cross(u, v);
    if (is_zero(n)) return std::nullopt;
    V3 pp{p.x, p.y, p.z}, qq{q.x, q.y, q.z}, rr{r.x, r.y, r.z};
    Rat two(2);
    return solve3({two * u[0], two * u[1], two * u[2]},
                  {two * v[0], two * v[1], two * v[2]},
                  n,
                  norm2(qq) - norm2(pp),
                  norm2(rr) - norm2(pp),
                  dot(n, pp));
}

/// Four points on one circle; false when any triple is collinear (a circle
/// meets a line in at most two points, so such a quadruple is never
/// concyclic).
inline bool concyclic_safe(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
    const Point2* a[4] = {&p, &q, &r, &s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(*a[i], *a[j], *a[k])) return false;
    auto lift = [&](const Point2& v) -> V3 {
        Rat dx = v.x - s.x, dy = v.y - s.y;
        return {dx, dy, (v.x * v.x + v.y * v.y) - (s.x * s.x + s.y * s.y)};
    };
    return det3(lift(p), lift(q), lift(r)).is_zero();
}

inline bool concyclic_safe(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    if (!coplanar(p, q, r, s)) return false;
    const Point3* a[4] = {&p, &q, &r, &s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(*a[i], *a[j], *a[k])) return false;
    auto c = circumcenter3(p, q, r);
    Point3 center{(*c)[0], (*c)[1], (*c)[2]};
    return norm2(sub(p, center)) == norm2(sub(s, center));
}

} // namespace ilab::detail
