#pragma once

// JSON (and CSV) serialization of point sets, profiles and reports.
// Rationals always travel as "num/den" strings; no floats anywhere.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ilab/audit.hpp"
#include "ilab/generators.hpp"
#include "ilab/geometry.hpp"
#include "ilab/profiles.hpp"
#include "ilab/transforms.hpp"
#include "ilab/validate.hpp"

namespace ilab {

using Json = nlohmann::json;

/// {"dim": 2|3, "points": [["x","y",...],...], "claims": {...}?}
Json point_set_to_json(const PointSet& s);
Json generated_to_json(const Generated& g);

/// Parses a PointSetFile document. Throws invalid_input with the offending
/// field on malformed content.
PointSet point_set_from_json(const Json& doc);
PointSet read_point_set(std::istream& in);
void write_json(std::ostream& out, const Json& doc);

Json profile_to_json(const IncidenceProfile& p, const std::string& kind);
Json through_point_to_json(const ThroughPointProfile& p, const std::string& kind);
Json validation_to_json(const ValidationReport& r);
Json summary_to_json(const GeometrySummary& g);
Json audit_to_json(const AuditReport& r);
Json correspondence_to_json(const InversionCorrespondence& c);
Json projection_to_json(const ProjectedSet& ps, const IncidenceProfile& t_profile,
                        const ThroughPointProfile& anchored_planes, bool identity_ok);
Json sphere_identity_to_json(const SphereIdentityRecord& r);
Json intersection_to_json(const IntersectionRecord& r);
Json sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

} // namespace ilab
