#pragma once

#include <cstddef>
#include <map>

namespace ilab {

/// Histogram over exact point multiplicities: counts[k] = number of objects
/// incident to exactly k points of the set.
struct Profile {
    std::map<int, long long> counts;

    long long at(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [k, c] : counts) t += c;
        return t;
    }
    int max_multiplicity() const {
        return counts.empty() ? 0 : counts.rbegin()->first;
    }
    friend bool operator==(const Profile& a, const Profile& b) { return a.counts == b.counts; }
};

/// t_k / c_r / m_k / s_r depending on the enumeration that produced it.
using IncidenceProfile = Profile;

/// r_i: number of points incident to exactly i determined lines.
using PointDegreeProfile = Profile;

/// P_i: number of point pairs incident to exactly i determined planes.
using PairDegreeProfile = Profile;

/// Per-anchor profile: counts[k] = objects through the anchor with exactly
/// k incident points (anchor included).
struct ThroughPointProfile {
    std::size_t anchor = 0;
    Profile profile;
};

} // namespace ilab
