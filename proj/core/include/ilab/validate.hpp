#pragma once

#include <string>
#include <vector>

#include "ilab/enumerate.hpp"
#include "ilab/geometry.hpp"

namespace ilab {

enum class Hypothesis {
    no_3_collinear,
    no_4_cocircular,
    not_all_collinear,
    not_all_coplanar,       // 3D
    not_all_cocircular,     // 2D
    not_all_cospherical,    // 3D
    max_collinear_n_minus_k,
    max_coplanar_n_minus_k,    // 3D
    max_cospherical_n_minus_k, // 3D
};

std::string to_string(Hypothesis h);
Hypothesis hypothesis_from_string(const std::string& name);

/// One hypothesis verdict. Violations are data, not errors: `witness` holds
/// point indices exhibiting the violation when there is one.
struct HypothesisCheck {
    Hypothesis which;
    bool satisfied = false;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<HypothesisCheck> checks;

    bool all_satisfied() const {
        for (const auto& c : checks)
            if (!c.satisfied) return false;
        return true;
    }
    const HypothesisCheck* find(Hypothesis h) const {
        for (const auto& c : checks)
            if (c.which == h) return &c;
        return nullptr;
    }
};

/// Checks the requested hypotheses against the set. `k` feeds the
/// max-*-at-most-(n-k) checks and is ignored by the others.
ValidationReport validate(const PointSet& s, const std::vector<Hypothesis>& requested,
                          long long k = 0, const EnumOptions& opts = {});

/// Extremal incidence statistics consumed by the audit layer. Values are 0
/// when the quantity is undefined for the dimension or size.
struct GeometrySummary {
    long long n = 0;
    int dim = 2;
    long long max_collinear = 0;   // max points on one line (n>=2)
    long long max_cocircular = 0;  // max points on one circle (n>=3)
    long long max_coplanar = 0;    // 3D, max points on one plane (n>=3)
    long long max_cospherical = 0; // 3D, max points on one sphere (n>=4)
    bool all_collinear = false;
    bool all_coplanar = false;
    bool all_cocircular = false;
    bool all_cospherical = false;
    bool spheres_scanned = false; // max_cospherical computed (subject to budget)
};

GeometrySummary summarize_geometry(const PointSet& s, const EnumOptions& opts = {},
                                   bool with_spheres = true);

} // namespace ilab
