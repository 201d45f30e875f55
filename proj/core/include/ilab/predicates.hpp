#pragma once

#include "ilab/geometry.hpp"

namespace ilab {

/// True iff the three distinct points lie on one line. Exact determinant
/// test; throws invalid_input on duplicate arguments.
bool collinear3(const Point2& p, const Point2& q, const Point2& r);
bool collinear3(const Point3& p, const Point3& q, const Point3& r);

/// True iff the four distinct points lie on one plane (3x3 determinant of
/// difference vectors vanishes).
bool coplanar4(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

/// True iff the four distinct points lie on one circle, via the lifted
/// determinant with columns (x, y, x^2+y^2, 1). Three collinear inputs leave
/// the circle undefined and raise degeneracy_error rather than returning
/// false.
bool cocircular4(const Point2& p, const Point2& q, const Point2& r, const Point2& s);

/// Space variant: the four points are coplanar and lie on one circle within
/// their plane. Same degeneracy rule for collinear triples.
bool cocircular4(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

/// True iff the 5x5 lifted determinant with columns (x, y, z, x^2+y^2+z^2, 1)
/// vanishes. A collinear triple or a cocircular quadruple among the inputs
/// raises degeneracy_error. Note the determinant also vanishes for five
/// coplanar points (the plane is the degenerate member of the sphere pencil);
/// callers needing a proper sphere must exclude coplanar quadruples.
bool cospherical5(const Point3& p, const Point3& q, const Point3& r,
                  const Point3& s, const Point3& t);

} // namespace ilab
