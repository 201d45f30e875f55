#include "ilab/geometry.hpp"

#include <unordered_set>

#include "ilab/errors.hpp"

namespace ilab {

template <class P, class H>
void BasicPointSet<P, H>::check_distinct() const {
    std::unordered_set<std::size_t> seen;
    seen.reserve(pts_.size() * 2);
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        auto [it, fresh] = seen.insert(pts_[i].hash());
        if (fresh) continue;
        // Hash collision or true duplicate; confirm by exact comparison.
        for (std::size_t j = 0; j < i; ++j) {
            if (pts_[j] == pts_[i])
                throw invalid_input("PointSet: duplicate point " + pts_[i].str() +
                                    " at indices " + std::to_string(j) + " and " + std::to_string(i));
        }
    }
}

template class BasicPointSet<Point2, Point2Hash>;
template class BasicPointSet<Point3, Point3Hash>;

} // namespace ilab
