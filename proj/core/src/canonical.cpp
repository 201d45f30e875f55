#include "ilab/canonical.hpp"

#include <array>

#include "ilab/errors.hpp"
#include "linalg.hpp"

namespace ilab {

using detail::V2;
using detail::V3;

namespace {

// Scale a rational vector to coprime integers and fix the sign so that the
// first nonzero entry of the leading `sign_scope` components is positive.
// When the leading scope is all zero, the sign rule falls through to the
// remaining entries.
template <std::size_t N>
std::array<Int, N> normalize_coeffs(const std::array<Rat, N>& v, std::size_t sign_scope) {
    Int lcm = 1;
    for (const Rat& r : v) {
        Int den = r.den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::array<Int, N> out;
    Int gcd = 0;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = v[i].num() * (lcm / v[i].den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
    }
    if (sgn(gcd) == 0) throw degeneracy_error("normalize_coeffs: zero vector");
    for (auto& z : out) z /= gcd;
    int s = 0;
    for (std::size_t i = 0; i < sign_scope && s == 0; ++i) s = sgn(out[i]);
    for (std::size_t i = sign_scope; i < N && s == 0; ++i) s = sgn(out[i]);
    if (s < 0)
        for (auto& z : out) z = -z;
    return out;
}

std::size_t hash_ints(std::initializer_list<const Int*> zs) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Int* z : zs) h = hash_combine(h, hash_int(*z));
    return h;
}

} // namespace

std::size_t LineKey2::hash() const { return hash_ints({&a, &b, &c}); }
std::size_t PlaneKey::hash() const { return hash_ints({&a, &b, &c, &d}); }
std::size_t DirKey::hash() const { return hash_ints({&x, &y, &z}); }
std::size_t Dir2Key::hash() const { return hash_ints({&x, &y}); }
std::size_t ProjLineKey::hash() const { return hash_ints({&a, &b, &c}); }

std::size_t CircleKey::hash() const { return hash_combine(center.hash(), r2.hash()); }
std::size_t SphereKey::hash() const { return hash_combine(center.hash(), r2.hash()); }
std::size_t Line3Key::hash() const {
    return hash_combine(dir.hash(), hash_combine(mx.hash(), hash_combine(my.hash(), mz.hash())));
}
std::size_t Circle3Key::hash() const {
    return hash_combine(plane.hash(), hash_combine(center.hash(), r2.hash()));
}

std::string LineKey2::str() const {
    return "line[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}
std::string PlaneKey::str() const {
    return "plane[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + "]";
}
std::string DirKey::str() const {
    return "dir[" + x.get_str() + "," + y.get_str() + "," + z.get_str() + "]";
}
std::string ProjLineKey::str() const {
    return "projline[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}
std::string CircleKey::str() const {
    return "circle[" + center.x.str() + "," + center.y.str() + ";" + r2.str() + "]";
}
std::string SphereKey::str() const {
    return "sphere[" + center.x.str() + "," + center.y.str() + "," + center.z.str() + ";" + r2.str() + "]";
}
std::string Line3Key::str() const {
    return "line3[" + dir.x.get_str() + "," + dir.y.get_str() + "," + dir.z.get_str() + ";" +
           mx.str() + "," + my.str() + "," + mz.str() + "]";
}
std::string Circle3Key::str() const {
    return "circle3[" + plane.str() + ";" + center.x.str() + "," + center.y.str() + "," +
           center.z.str() + ";" + r2.str() + "]";
}

bool operator<(const CircleKey& l, const CircleKey& r) {
    if (int c0 = l.center.x.cmp_to(r.center.x)) return c0 < 0;
    if (int c1 = l.center.y.cmp_to(r.center.y)) return c1 < 0;
    return l.r2.cmp_to(r.r2) < 0;
}

bool operator<(const SphereKey& l, const SphereKey& r) {
    if (int c0 = l.center.x.cmp_to(r.center.x)) return c0 < 0;
    if (int c1 = l.center.y.cmp_to(r.center.y)) return c1 < 0;
    if (int c2 = l.center.z.cmp_to(r.center.z)) return c2 < 0;
    return l.r2.cmp_to(r.r2) < 0;
}

bool operator<(const Line3Key& l, const Line3Key& r) {
    if (l.dir < r.dir) return true;
    if (r.dir < l.dir) return false;
    if (int c0 = l.mx.cmp_to(r.mx)) return c0 < 0;
    if (int c1 = l.my.cmp_to(r.my)) return c1 < 0;
    return l.mz.cmp_to(r.mz) < 0;
}

bool operator<(const Circle3Key& l, const Circle3Key& r) {
    if (l.plane < r.plane) return true;
    if (r.plane < l.plane) return false;
    if (int c0 = l.center.x.cmp_to(r.center.x)) return c0 < 0;
    if (int c1 = l.center.y.cmp_to(r.center.y)) return c1 < 0;
    if (int c2 = l.center.z.cmp_to(r.center.z)) return c2 < 0;
    return l.r2.cmp_to(r.r2) < 0;
}

LineKey2 canon_line(const Point2& p, const Point2& q) {
    if (p == q) throw invalid_input("canon_line: identical points");
    // Homogeneous cross product (p,1) x (q,1).
    std::array<Rat, 3> coeffs{p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
    auto n = normalize_coeffs(coeffs, 2);
    return LineKey2{n[0], n[1], n[2]};
}

PlaneKey canon_plane(const Point3& p, const Point3& q, const Point3& r) {
    V3 n = detail::cross(detail::sub(q, p), detail::sub(r, p));
    if (detail::is_zero(n)) throw degeneracy_error("canon_plane: collinear points");
    Rat d = -(n[0] * p.x + n[1] * p.y + n[2] * p.z);
    auto c = normalize_coeffs<4>({n[0], n[1], n[2], d}, 3);
    return PlaneKey{c[0], c[1], c[2], c[3]};
}

CircleKey canon_circle(const Point2& p, const Point2& q, const Point2& r) {
    V2 u = detail::sub2(q, p), v = detail::sub2(r, p);
    Rat two(2);
    auto c = detail::solve2({two * u[0], two * u[1]}, {two * v[0], two * v[1]},
                            (q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y),
                            (r.x * r.x + r.y * r.y) - (p.x * p.x + p.y * p.y));
    if (!c) throw degeneracy_error("canon_circle: collinear points");
    Point2 center{(*c)[0], (*c)[1]};
    Rat dx = p.x - center.x, dy = p.y - center.y;
    return CircleKey{center, dx * dx + dy * dy};
}

SphereKey canon_sphere(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    V3 u = detail::sub(q, p), v = detail::sub(r, p), w = detail::sub(s, p);
    Rat two(2);
    V3 pp{p.x, p.y, p.z}, qq{q.x, q.y, q.z}, rr{r.x, r.y, r.z}, ss{s.x, s.y, s.z};
    auto c = detail::solve3({two * u[0], two * u[1], two * u[2]},
                            {two * v[0], two * v[1], two * v[2]},
                            {two * w[0], two * w[1], two * w[2]},
                            detail::norm2(qq) - detail::norm2(pp),
                            detail::norm2(rr) - detail::norm2(pp),
                            detail::norm2(ss) - detail::norm2(pp));
    if (!c) throw degeneracy_error("canon_sphere: coplanar points");
    Point3 center{(*c)[0], (*c)[1], (*c)[2]};
    return SphereKey{center, detail::norm2(detail::sub(p, center))};
}

Line3Key canon_line3(const Point3& p, const Point3& q) {
    DirKey d = canon_direction(p, q);
    V3 dv{Rat(d.x), Rat(d.y), Rat(d.z)};
    V3 m = detail::cross({p.x, p.y, p.z}, dv);
    return Line3Key{d, m[0], m[1], m[2]};
}

Circle3Key canon_circle3(const Point3& p, const Point3& q, const Point3& r) {
    PlaneKey plane = canon_plane(p, q, r);
    V3 u = detail::sub(q, p), v = detail::sub(r, p);
    V3 n{Rat(plane.a), Rat(plane.b), Rat(plane.c)};
    Rat two(2);
    V3 pp{p.x, p.y, p.z}, qq{q.x, q.y, q.z}, rr{r.x, r.y, r.z};
    auto c = detail::solve3({two * u[0], two * u[1], two * u[2]},
                            {two * v[0], two * v[1], two * v[2]},
                            n,
                            detail::norm2(qq) - detail::norm2(pp),
                            detail::norm2(rr) - detail::norm2(pp),
                            detail::dot(n, pp));
    if (!c) throw degeneracy_error("canon_circle3: collinear points");
    Point3 center{(*c)[0], (*c)[1], (*c)[2]};
    return Circle3Key{plane, center, detail::norm2(detail::sub(p, center))};
}

DirKey canon_direction(const Point3& from, const Point3& to) {
    if (from == to) throw invalid_input("canon_direction: identical points");
    auto n = normalize_coeffs<3>({to.x - from.x, to.y - from.y, to.z - from.z}, 3);
    return DirKey{n[0], n[1], n[2]};
}

Dir2Key canon_direction(const Point2& from, const Point2& to) {
    if (from == to) throw invalid_input("canon_direction: identical points");
    auto n = normalize_coeffs<2>({to.x - from.x, to.y - from.y}, 2);
    return Dir2Key{n[0], n[1]};
}

ProjLineKey proj_line_through(const DirKey& a, const DirKey& b) {
    std::array<Rat, 3> cr{Rat(Int(a.y * b.z - a.z * b.y)),
                          Rat(Int(a.z * b.x - a.x * b.z)),
                          Rat(Int(a.x * b.y - a.y * b.x))};
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero())
        throw degeneracy_error("proj_line_through: identical direction classes");
    auto n = normalize_coeffs(cr, 3);
    return ProjLineKey{n[0], n[1], n[2]};
}

bool incident(const LineKey2& l, const Point2& p) {
    return (Rat(l.a) * p.x + Rat(l.b) * p.y + Rat(l.c)).is_zero();
}

bool incident(const PlaneKey& pl, const Point3& p) {
    return (Rat(pl.a) * p.x + Rat(pl.b) * p.y + Rat(pl.c) * p.z + Rat(pl.d)).is_zero();
}

bool incident(const CircleKey& c, const Point2& p) {
    Rat dx = p.x - c.center.x, dy = p.y - c.center.y;
    return dx * dx + dy * dy == c.r2;
}

bool incident(const SphereKey& s, const Point3& p) {
    return detail::norm2(detail::sub(p, s.center)) == s.r2;
}

bool incident(const Line3Key& l, const Point3& p) {
    V3 dv{Rat(l.dir.x), Rat(l.dir.y), Rat(l.dir.z)};
    V3 m = detail::cross({p.x, p.y, p.z}, dv);
    return m[0] == l.mx && m[1] == l.my && m[2] == l.mz;
}

bool incident(const Circle3Key& c, const Point3& p) {
    return incident(c.plane, p) && detail::norm2(detail::sub(p, c.center)) == c.r2;
}

bool incident(const ProjLineKey& l, const DirKey& d) {
    return sgn(l.a * d.x + l.b * d.y + l.c * d.z) == 0;
}

} // namespace ilab
