#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ilab/rational.hpp"

namespace ilab {

struct Point2 {
    Rat x, y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    std::size_t hash() const { return hash_combine(x.hash(), y.hash()); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

struct Point3 {
    Rat x, y, z;

    friend bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
    std::size_t hash() const { return hash_combine(hash_combine(x.hash(), y.hash()), z.hash()); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

struct Point2Hash {
    std::size_t operator()(const Point2& p) const { return p.hash(); }
};
struct Point3Hash {
    std::size_t operator()(const Point3& p) const { return p.hash(); }
};

/// Ordered list of pairwise-distinct rational points. Duplicates are rejected
/// at construction; every count downstream presumes distinctness.
template <class P, class H>
class BasicPointSet {
public:
    using point_type = P;

    BasicPointSet() = default;
    explicit BasicPointSet(std::vector<P> pts) : pts_(std::move(pts)) { check_distinct(); }

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const P& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<P>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    /// Index of an exactly-equal point, or -1.
    long long index_of(const P& p) const {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (pts_[i] == p) return static_cast<long long>(i);
        return -1;
    }

private:
    void check_distinct() const;
    std::vector<P> pts_;
};

using PointSet2 = BasicPointSet<Point2, Point2Hash>;
using PointSet3 = BasicPointSet<Point3, Point3Hash>;

/// Dimension-tagged point set as it appears at API boundaries (files, CLI).
using PointSet = std::variant<PointSet2, PointSet3>;

inline int dim_of(const PointSet& s) { return std::holds_alternative<PointSet2>(s) ? 2 : 3; }
inline std::size_t size_of(const PointSet& s) {
    return std::visit([](const auto& v) { return v.size(); }, s);
}

} // namespace ilab
