#pragma once

#include <map>
#include <string>
#include <vector>

#include "ilab/geometry.hpp"
#include "ilab/validate.hpp"

namespace ilab {

enum class GeneratorName {
    near_pencil_line,       // n-k points on a line, k generic points off it (2D)
    near_pencil_plane,      // n-k generic coplanar points (no 3 collinear), k off (3D)
    coplanar_plus_k,        // near_pencil_plane with the base also free of 4 concyclic
    two_skew_lines,         // n points split over two skew lines (3D)
    desargues,              // rational perspective-triangle configuration, 10 points
    cube,                   // unit cube vertices
    cubic_orchard,          // (t, t^3) over consecutive integers (2D)
    circle_rational,        // n rational points on the unit circle (2D)
    sphere_rational,        // n rational points on the unit sphere, no 4 coplanar
    elliott_counterexample, // n-1 concyclic points plus an interior chord pencil point
    cospherical_plus_k,     // n-k rational cospherical points, k generic points off
    random_constrained,     // rejection-sampled grid points under exact constraints
};

std::string to_string(GeneratorName g);
GeneratorName generator_from_string(const std::string& name);

struct GeneratorSpec {
    GeneratorName name = GeneratorName::random_constrained;
    long long n = 0;
    long long k = 1;
    unsigned long long seed = 0;
    int dim = 2;                          // random_constrained only
    std::vector<Hypothesis> constraints;  // random_constrained only
};

/// What the generated set is guaranteed to satisfy, recorded alongside the
/// points. `expected` maps named quantities ("planes_total", ...) to exact
/// integer values as decimal strings.
struct GeneratedClaims {
    std::vector<Hypothesis> hypotheses;
    std::map<std::string, std::string> expected;
    long long anchor = -1; // index of the distinguished point, if any
};

struct Generated {
    GeneratorSpec spec;
    PointSet points;
    GeneratedClaims claims;
};

/// Builds the configuration. Throws generation_error when the parameters are
/// infeasible or the retry budget is exhausted. Fixed seeds give
/// bit-identical output.
Generated generate(const GeneratorSpec& spec);

} // namespace ilab
