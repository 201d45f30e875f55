#include "ilab/predicates.hpp"

#include <array>

#include "ilab/errors.hpp"
#include "linalg.hpp"

namespace ilab {

namespace {

void require_distinct(std::initializer_list<const Point2*> pts) {
    auto it = pts.begin();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (**(it + i) == **(it + j))
                throw invalid_input("predicate: duplicate input point " + (*(it + i))->str());
}

void require_distinct(std::initializer_list<const Point3*> pts) {
    auto it = pts.begin();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (**(it + i) == **(it + j))
                throw invalid_input("predicate: duplicate input point " + (*(it + i))->str());
}

template <class P>
void require_no_collinear_triple(const P* const (&a)[4], const char* who) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (detail::collinear(*a[i], *a[j], *a[k]))
                    throw degeneracy_error(std::string(who) + ": collinear triple " + a[i]->str() +
                                           ", " + a[j]->str() + ", " + a[k]->str() +
                                           " has no circle");
}

} // namespace

bool collinear3(const Point2& p, const Point2& q, const Point2& r) {
    require_distinct({&p, &q, &r});
    return detail::collinear(p, q, r);
}

bool collinear3(const Point3& p, const Point3& q, const Point3& r) {
    require_distinct({&p, &q, &r});
    return detail::collinear(p, q, r);
}

bool coplanar4(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    require_distinct({&p, &q, &r, &s});
    return detail::coplanar(p, q, r, s);
}

bool cocircular4(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
    require_distinct({&p, &q, &r, &s});
    const Point2* a[4] = {&p, &q, &r, &s};
    require_no_collinear_triple(a, "cocircular4");
    return detail::concyclic_safe(p, q, r, s);
}

bool cocircular4(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    require_distinct({&p, &q, &r, &s});
    const Point3* a[4] = {&p, &q, &r, &s};
    require_no_collinear_triple(a, "cocircular4");
    return detail::concyclic_safe(p, q, r, s);
}

bool cospherical5(const Point3& p, const Point3& q, const Point3& r,
                  const Point3& s, const Point3& t) {
    require_distinct({&p, &q, &r, &s, &t});
    const Point3* a[5] = {&p, &q, &r, &s, &t};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                if (detail::collinear(*a[i], *a[j], *a[k]))
                    throw degeneracy_error("cospherical5: collinear triple among inputs");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                for (int l = k + 1; l < 5; ++l)
                    if (detail::concyclic_safe(*a[i], *a[j], *a[k], *a[l]))
                        throw degeneracy_error("cospherical5: cocircular quadruple among inputs");
    auto lift = [&](const Point3& v) -> std::array<Rat, 4> {
        Rat dx = v.x - t.x, dy = v.y - t.y, dz = v.z - t.z;
        Rat dw = (v.x * v.x + v.y * v.y + v.z * v.z) - (t.x * t.x + t.y * t.y + t.z * t.z);
        return {dx, dy, dz, dw};
    };
    return detail::det4(lift(p), lift(q), lift(r), lift(s)).is_zero();
}

} // namespace ilab
