#pragma once

// Closed-form evaluators for the combinatorial bounds, slacks and thresholds
// used by the audit layer. Everything is exact: values are rationals, floors
// are integer floors, thresholds are compared without rounding. Evaluation is
// always permitted; `applicable` only reports whether the stated threshold is
// met.

#include <string>

#include "ilab/profiles.hpp"
#include "ilab/rational.hpp"

namespace ilab {

struct BoundResult {
    std::string name;
    Rat value;
    bool applicable = false;
    std::string threshold; // human-readable applicability condition
};

/// t2 - 3 - sum_{k>=3} (k-3) t_k. Nonnegative for any planar set that is not
/// fully collinear (projectively valid, so direction profiles qualify too).
Rat melchior_slack(const IncidenceProfile& t);

/// (t+3)/2: lines with at most three points are at least half of all lines.
Rat elliott_t23_lb(long long t_total);

/// 3t - 3 - sum_i i*t_i, nonnegative when not all points are collinear.
Rat kelly_moser_slack(const IncidenceProfile& t);

/// 2 + (1/6) sum_i i*r_i, a lower bound for t2 + t3.
Rat eq1_lb(const PointDegreeProfile& degrees);

/// k(n-k) - k(k-1), lower bound for t2+t3 when at most n-k points are
/// collinear; threshold n >= 72k^2 + 2k - 1.
BoundResult t23_lb(long long n, long long k);

/// (1/8)(2k-1)(n^2 - (2k+1)n) circles when at most n-k points lie on any
/// line or circle; threshold n >= 72k^2 + 2k, k >= 1.
BoundResult circles_lb(long long n, long long k);

/// Corrected full-circle counterexample count: 1 + C(n-1,2) - floor((n-1)/2).
Rat elliott_circles_lb(long long n);

/// -3n - sum_k k(k-4) m_k, nonnegative when no 3 collinear and not all
/// coplanar.
Rat plane_melchior_slack(long long n, const IncidenceProfile& m);

/// n + sum_{k>=4} k(k-4)/3 m_k, lower bound for m3.
Rat m3_lb(long long n, const IncidenceProfile& m);

/// (5m + 3n)/8, lower bound for m3 + m4.
Rat m34_lb(long long n, long long m_total);

/// (4/13) C(n,2), lower bound for m3.
Rat planes3_lb(long long n);

/// 6m - 3n - sum_k C(k,2) m_k, nonnegative under the plane hypotheses.
Rat lemma_total_planes_slack(long long n, const IncidenceProfile& m);

/// 1 + k C(n-k,2) - C(k,2)(n-k)/2 total planes when at most n-k coplanar;
/// threshold n >= 54k^2 + (9/2)k.
BoundResult planes_total_lb(long long n, long long k);

/// Variant with the floored last term, matching the constructive argument.
Rat planes_total_lb_floor(long long n, long long k);

/// k C(n-k,2) - (n-k) C(k,2) planes with at most four points; threshold
/// n >= (184 + 8/25) k^2 + 4k.
BoundResult planes34_lb(long long n, long long k);

/// (9/208) C(n,3) four-point spheres.
Rat spheres4_lb(long long n);

/// 1 + C(n-1,3) - cap, where cap bounds the three-point lines of n-1 points
/// with no four collinear (pass orchard_upper(n-1)).
Rat spheres_total_lb(long long n, const Int& t3_cap);

/// floor(n^2/6 - 25n/78): upper bound for the maximum number of three-point
/// lines among n points, no four collinear. The formula needs n >= 4 (and is
/// one short of the true maximum at n = 7, the exceptional configuration of
/// the two-point-line rate bound).
Int orchard_upper(long long n);

/// floor(n^2/6 - n/2 + 1): constructively attained three-point line count.
Int orchard_lower(long long n);

/// Point/plane and line counts of projective 3-space of order q:
/// (q^3+q^2+q+1, q^4+q^3+2q^2+q+1). `prime_power` flags whether q is one;
/// the counts are evaluated either way.
struct Pg3qCounts {
    Int points_and_planes;
    Int lines;
    bool prime_power = false;
};
Pg3qCounts pg3q(const Int& q);

/// Upper bounds for configurations with exactly n-k points collinear.
struct CollinearClassMaxima {
    Int lines_max;   // C(k,2) + k(n-k) + 1
    Int planes_max;  // C(k,3) + (n-k) C(k,2) + k
    Int spheres_max; // C(k,4) + (n-k) C(k,3) + C(k,2) C(n-k,2)
};
CollinearClassMaxima collinear_class_maxima(long long n, long long k);

} // namespace ilab
