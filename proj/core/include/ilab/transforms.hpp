#pragma once

// Central projection onto the projective plane of directions, and circular /
// spherical inversion with the incidence correspondences they induce.

#include <string>
#include <vector>

#include "ilab/enumerate.hpp"
#include "ilab/geometry.hpp"
#include "ilab/profiles.hpp"

namespace ilab {

/// Image of a set under central projection from one of its points: one
/// direction class per remaining point. Distinctness of the classes is
/// exactly the no-3-collinear hypothesis through the anchor.
struct ProjectedSet {
    std::size_t anchor = 0;                 // index into the source set
    std::vector<DirKey> directions;         // size n-1
    std::vector<std::size_t> source_index;  // directions[i] came from this point
};

/// Projects every other point of `s` from s[anchor]. Throws hypothesis_error
/// naming the witness when two points share a direction (three collinear
/// points through the anchor).
ProjectedSet project_from_point(const PointSet3& s, std::size_t anchor);

/// Line profile of the projected set: lines of the projective plane of
/// directions, i.e. plane classes through the anchor. Satisfies
/// t_k(projection) = m_{k+1}(anchor).
IncidenceProfile projected_line_profile(const ProjectedSet& ps, const EnumOptions& opts = {});

/// True when all direction classes lie on one projective line (equivalently
/// the source set is coplanar with the anchor).
bool projection_all_collinear(const ProjectedSet& ps);

/// Unit-radius inversion about `center`: q -> center + (q-center)/|q-center|^2.
/// The radius only rescales the image, so incidence conclusions are
/// unaffected by fixing it to 1.
Point2 invert_point(const Point2& q, const Point2& center);
Point3 invert_point(const Point3& q, const Point3& center);

/// Pointwise inversion of a whole set about a center not in the set.
PointSet2 invert_circular(const PointSet2& s, const Point2& center);
PointSet3 invert_spherical(const PointSet3& s, const Point3& center);

/// One matched pair: an object through the inversion center and its partner
/// in the inverted set.
struct CorrespondenceRow {
    std::string object_key;   // circle/sphere through the anchor, in S
    std::string partner_key;  // line/plane of Inv(S \ {anchor}) missing the anchor
    int object_points = 0;    // multiplicity in S (anchor included)
    int partner_points = 0;   // multiplicity in the inverted set
};

struct InversionCorrespondence {
    std::size_t anchor = 0;
    int dim = 2;
    std::vector<CorrespondenceRow> rows;
    IncidenceProfile object_profile;   // circles/spheres of S through anchor
    IncidenceProfile partner_profile;  // lines/planes of the inverted set off anchor
    bool bijection_ok = false;
};

/// Builds the circle<->line (2D) or sphere<->plane (3D) correspondence about
/// s[anchor] and verifies it is a bijection with multiplicities r <-> r-1.
/// The 3D case requires no 3 collinear and no 4 cocircular and throws
/// hypothesis_error otherwise.
InversionCorrespondence inversion_correspondence(const PointSet& s, std::size_t anchor,
                                                 const EnumOptions& opts = {});

} // namespace ilab
