#pragma once

// Runs every applicable bound against exact enumerated counts and reports
// verdicts with exact rational margins. Below-threshold bounds are still
// evaluated but marked informational rather than pass/fail.

#include <string>
#include <vector>

#include "ilab/bounds.hpp"
#include "ilab/enumerate.hpp"
#include "ilab/generators.hpp"
#include "ilab/geometry.hpp"
#include "ilab/validate.hpp"

namespace ilab {

struct AuditEntry {
    enum class Direction { at_least, at_most };
    enum class Verdict { pass, fail, informational };

    std::string rule;      // stable identifier
    std::string statement; // human-readable inequality
    Direction direction = Direction::at_least;
    bool applicable = false;
    Rat bound;
    Rat enumerated;
    Rat margin; // slack in the inequality's favorable direction; >= 0 holds
    Verdict verdict = Verdict::informational;
    std::string note;

    bool holds() const { return margin.sign() >= 0; }
};

struct AuditReport {
    long long n = 0;
    int dim = 2;
    GeometrySummary summary;
    bool spheres_included = false;
    std::string sphere_note;
    std::vector<AuditEntry> entries;

    bool failed() const {
        for (const auto& e : entries)
            if (e.verdict == AuditEntry::Verdict::fail) return true;
        return false;
    }
    const AuditEntry* find(const std::string& rule) const {
        for (const auto& e : entries)
            if (e.rule == rule) return &e;
        return nullptr;
    }
};

/// Full audit of one configuration. Sphere bounds are skipped (with a note)
/// when C(n,4) exceeds the enumeration budget; everything else always runs.
AuditReport audit_config(const PointSet& s, const EnumOptions& opts = {});

/// Exact sphere count identity for sets with all but one point on a common
/// sphere (or plane): total spheres = [surface is a sphere] + C(n-1,3) -
/// (#planes through the anchor holding exactly three surface points).
/// Both sides are enumerated independently.
struct SphereIdentityRecord {
    long long n = 0;
    std::size_t anchor = 0;
    bool surface_is_sphere = true;
    long long spheres_total = 0;
    Int surface_triples;               // C(n-1,3)
    long long planes3_through_anchor = 0;
    Int expected_total;
    bool identity_holds = false;
};
SphereIdentityRecord sphere_identity_check(const PointSet3& s, std::size_t anchor,
                                           const EnumOptions& opts = {});

/// Bound on shared spheres of two off-surface anchors: with exactly n-k
/// points on the surface (k >= 2), the sphere families through p and q meet
/// in at most (1/3) C(n-k,2) spheres.
struct IntersectionRecord {
    long long n = 0;
    long long k = 0;
    bool surface_is_sphere = true;
    std::size_t p = 0, q = 0;
    long long sigma_p = 0, sigma_q = 0, common = 0;
    Rat bound;
    bool holds = false;
};
IntersectionRecord intersection_bound_check(const PointSet3& s, std::size_t p, std::size_t q,
                                            const EnumOptions& opts = {});

struct SweepOptions {
    GeneratorSpec base; // name, k, dim, constraints; n and seed set per row
    long long n_min = 0;
    long long n_max = 0;
    long long n_step = 1;
    int trials = 1;
    unsigned long long seed = 0;
    EnumOptions enum_opts;
};

struct SweepRow {
    long long n = 0;
    int trial = 0;
    unsigned long long seed = 0;
    bool generated = false;
    std::string error;
    bool audit_ok = false;
    std::vector<std::string> failed_rules;
    std::string min_margin_rule;
    Rat min_margin;
    bool has_margin = false;
};

/// Generates and audits one configuration per (n, trial); deterministic under
/// the sweep seed, rows in (n, trial) order regardless of `jobs`.
std::vector<SweepRow> sweep(const SweepOptions& so);

} // namespace ilab
