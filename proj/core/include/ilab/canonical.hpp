#pragma once

// Canonical keys for determined geometric objects. Two defining tuples of
// the same object produce bit-identical keys, so keys serve as exact hash
// and ordering identities for dedup and counting.

#include <cstddef>
#include <string>

#include "ilab/geometry.hpp"
#include "ilab/rational.hpp"

namespace ilab {

/// Line a*x + b*y + c = 0 with coprime integer coefficients, (a,b) != (0,0),
/// first nonzero of (a,b) positive.
struct LineKey2 {
    Int a, b, c;

    friend bool operator==(const LineKey2& l, const LineKey2& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const LineKey2& l, const LineKey2& r) {
        if (int c0 = cmp(l.a, r.a)) return c0 < 0;
        if (int c1 = cmp(l.b, r.b)) return c1 < 0;
        return cmp(l.c, r.c) < 0;
    }
    std::size_t hash() const;
    std::string str() const;
};

/// Plane a*x + b*y + c*z + d = 0, coprime, first nonzero of (a,b,c) positive.
struct PlaneKey {
    Int a, b, c, d;

    friend bool operator==(const PlaneKey& l, const PlaneKey& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
    }
    friend bool operator<(const PlaneKey& l, const PlaneKey& r) {
        if (int c0 = cmp(l.a, r.a)) return c0 < 0;
        if (int c1 = cmp(l.b, r.b)) return c1 < 0;
        if (int c2 = cmp(l.c, r.c)) return c2 < 0;
        return cmp(l.d, r.d) < 0;
    }
    std::size_t hash() const;
    std::string str() const;
};

/// Projective direction class: coprime integers, not all zero, first nonzero
/// positive. Doubles as the projection image of a point (a point of the
/// projective plane of directions).
struct DirKey {
    Int x, y, z;

    friend bool operator==(const DirKey& l, const DirKey& r) {
        return l.x == r.x && l.y == r.y && l.z == r.z;
    }
    friend bool operator<(const DirKey& l, const DirKey& r) {
        if (int c0 = cmp(l.x, r.x)) return c0 < 0;
        if (int c1 = cmp(l.y, r.y)) return c1 < 0;
        return cmp(l.z, r.z) < 0;
    }
    std::size_t hash() const;
    std::string str() const;
};

/// Planar direction class (2D analog of DirKey).
struct Dir2Key {
    Int x, y;

    friend bool operator==(const Dir2Key& l, const Dir2Key& r) { return l.x == r.x && l.y == r.y; }
    std::size_t hash() const;
};

/// A line of the projective plane of directions, stored by its normalized
/// normal vector: the set of directions d with a*dx + b*dy + c*dz = 0.
struct ProjLineKey {
    Int a, b, c;

    friend bool operator==(const ProjLineKey& l, const ProjLineKey& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const ProjLineKey& l, const ProjLineKey& r) {
        if (int c0 = cmp(l.a, r.a)) return c0 < 0;
        if (int c1 = cmp(l.b, r.b)) return c1 < 0;
        return cmp(l.c, r.c) < 0;
    }
    std::size_t hash() const;
    std::string str() const;
};

/// Circle by exact center and squared radius (both rational for circles
/// through rational points).
struct CircleKey {
    Point2 center;
    Rat r2;

    friend bool operator==(const CircleKey& l, const CircleKey& r) {
        return l.center == r.center && l.r2 == r.r2;
    }
    friend bool operator<(const CircleKey& l, const CircleKey& r);
    std::size_t hash() const;
    std::string str() const;
};

/// Sphere by exact center and squared radius.
struct SphereKey {
    Point3 center;
    Rat r2;

    friend bool operator==(const SphereKey& l, const SphereKey& r) {
        return l.center == r.center && l.r2 == r.r2;
    }
    friend bool operator<(const SphereKey& l, const SphereKey& r);
    std::size_t hash() const;
    std::string str() const;
};

/// Line in space: normalized direction plus moment p x d (independent of the
/// choice of p on the line once d is normalized).
struct Line3Key {
    DirKey dir;
    Rat mx, my, mz;

    friend bool operator==(const Line3Key& l, const Line3Key& r) {
        return l.dir == r.dir && l.mx == r.mx && l.my == r.my && l.mz == r.mz;
    }
    friend bool operator<(const Line3Key& l, const Line3Key& r);
    std::size_t hash() const;
    std::string str() const;
};

/// Circle in space: carrier plane plus center and squared radius.
struct Circle3Key {
    PlaneKey plane;
    Point3 center;
    Rat r2;

    friend bool operator==(const Circle3Key& l, const Circle3Key& r) {
        return l.plane == r.plane && l.center == r.center && l.r2 == r.r2;
    }
    friend bool operator<(const Circle3Key& l, const Circle3Key& r);
    std::size_t hash() const;
    std::string str() const;
};

template <class K>
struct KeyHash {
    std::size_t operator()(const K& k) const { return k.hash(); }
};

// Canonicalizers. All throw invalid_input on duplicate points and
// degeneracy_error on degenerate defining sets.
LineKey2 canon_line(const Point2& p, const Point2& q);
PlaneKey canon_plane(const Point3& p, const Point3& q, const Point3& r);
CircleKey canon_circle(const Point2& p, const Point2& q, const Point2& r);
SphereKey canon_sphere(const Point3& p, const Point3& q, const Point3& r, const Point3& s);
Line3Key canon_line3(const Point3& p, const Point3& q);
Circle3Key canon_circle3(const Point3& p, const Point3& q, const Point3& r);

/// Direction class of the segment from `from` to `to`.
DirKey canon_direction(const Point3& from, const Point3& to);
Dir2Key canon_direction(const Point2& from, const Point2& to);

/// The projective line spanned by two distinct direction classes.
ProjLineKey proj_line_through(const DirKey& a, const DirKey& b);

// Exact incidence tests.
bool incident(const LineKey2& l, const Point2& p);
bool incident(const PlaneKey& pl, const Point3& p);
bool incident(const CircleKey& c, const Point2& p);
bool incident(const SphereKey& s, const Point3& p);
bool incident(const Line3Key& l, const Point3& p);
bool incident(const Circle3Key& c, const Point3& p);
bool incident(const ProjLineKey& l, const DirKey& d);

} // namespace ilab
