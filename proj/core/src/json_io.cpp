#include "ilab/json_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ilab/errors.hpp"

namespace ilab {

namespace {

Json profile_counts(const Profile& p) {
    Json counts = Json::object();
    for (const auto& [k, c] : p.counts) counts[std::to_string(k)] = c;
    return counts;
}

std::string verdict_str(AuditEntry::Verdict v) {
    switch (v) {
        case AuditEntry::Verdict::pass: return "pass";
        case AuditEntry::Verdict::fail: return "fail";
        case AuditEntry::Verdict::informational: return "informational";
    }
    return "?";
}

} // namespace

Json point_set_to_json(const PointSet& s) {
    Json doc;
    doc["dim"] = dim_of(s);
    Json pts = Json::array();
    if (const auto* s2 = std::get_if<PointSet2>(&s)) {
        for (const auto& p : *s2) pts.push_back(Json::array({p.x.str(), p.y.str()}));
    } else {
        for (const auto& p : std::get<PointSet3>(s))
            pts.push_back(Json::array({p.x.str(), p.y.str(), p.z.str()}));
    }
    doc["points"] = std::move(pts);
    return doc;
}

Json generated_to_json(const Generated& g) {
    Json doc = point_set_to_json(g.points);
    Json claims;
    claims["generator"] = to_string(g.spec.name);
    claims["n"] = g.spec.n;
    claims["k"] = g.spec.k;
    claims["seed"] = g.spec.seed;
    Json hyps = Json::array();
    for (Hypothesis h : g.claims.hypotheses) hyps.push_back(to_string(h));
    claims["hypotheses"] = std::move(hyps);
    Json expected = Json::object();
    for (const auto& [key, value] : g.claims.expected) expected[key] = value;
    claims["expected"] = std::move(expected);
    if (g.claims.anchor >= 0) claims["anchor"] = g.claims.anchor;
    doc["claims"] = std::move(claims);
    return doc;
}

PointSet point_set_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
        throw invalid_input("point set file: need an object with 'dim' and 'points'");
    int dim = 0;
    try {
        dim = doc.at("dim").get<int>();
    } catch (const Json::exception&) {
        throw invalid_input("point set file: 'dim' must be 2 or 3");
    }
    if (dim != 2 && dim != 3) throw invalid_input("point set file: 'dim' must be 2 or 3");
    const Json& pts = doc.at("points");
    if (!pts.is_array()) throw invalid_input("point set file: 'points' must be an array");

    auto coord = [](const Json& c, std::size_t row, std::size_t col) -> Rat {
        if (c.is_string()) return Rat::parse(c.get<std::string>());
        if (c.is_number_integer()) return Rat(static_cast<long long>(c.get<long long>()));
        throw invalid_input("point set file: points[" + std::to_string(row) + "][" +
                            std::to_string(col) + "] must be a rational string");
    };

    if (dim == 2) {
        std::vector<Point2> out;
        out.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Json& row = pts[i];
            if (!row.is_array() || row.size() != 2)
                throw invalid_input("point set file: points[" + std::to_string(i) +
                                    "] must hold 2 coordinates");
            out.push_back({coord(row[0], i, 0), coord(row[1], i, 1)});
        }
        return PointSet2(std::move(out));
    }
    std::vector<Point3> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Json& row = pts[i];
        if (!row.is_array() || row.size() != 3)
            throw invalid_input("point set file: points[" + std::to_string(i) +
                                "] must hold 3 coordinates");
        out.push_back({coord(row[0], i, 0), coord(row[1], i, 1), coord(row[2], i, 2)});
    }
    return PointSet3(std::move(out));
}

PointSet read_point_set(std::istream& in) {
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& e) {
        throw invalid_input(std::string("point set file: JSON parse error: ") + e.what());
    }
    return point_set_from_json(doc);
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json profile_to_json(const IncidenceProfile& p, const std::string& kind) {
    Json doc;
    doc["kind"] = kind;
    doc["counts"] = profile_counts(p);
    doc["total"] = p.total();
    return doc;
}

Json through_point_to_json(const ThroughPointProfile& p, const std::string& kind) {
    Json doc = profile_to_json(p.profile, kind);
    doc["anchor"] = p.anchor;
    return doc;
}

Json validation_to_json(const ValidationReport& r) {
    Json arr = Json::array();
    for (const auto& c : r.checks) {
        Json item;
        item["hypothesis"] = to_string(c.which);
        item["satisfied"] = c.satisfied;
        if (!c.witness.empty()) item["witness"] = c.witness;
        if (!c.detail.empty()) item["detail"] = c.detail;
        arr.push_back(std::move(item));
    }
    Json doc;
    doc["checks"] = std::move(arr);
    doc["all_satisfied"] = r.all_satisfied();
    return doc;
}

Json summary_to_json(const GeometrySummary& g) {
    Json doc;
    doc["n"] = g.n;
    doc["dim"] = g.dim;
    doc["max_collinear"] = g.max_collinear;
    doc["max_cocircular"] = g.max_cocircular;
    if (g.dim == 3) {
        doc["max_coplanar"] = g.max_coplanar;
        if (g.spheres_scanned) doc["max_cospherical"] = g.max_cospherical;
        doc["all_coplanar"] = g.all_coplanar;
        if (g.spheres_scanned) doc["all_cospherical"] = g.all_cospherical;
    } else {
        doc["all_cocircular"] = g.all_cocircular;
    }
    doc["all_collinear"] = g.all_collinear;
    return doc;
}

Json audit_to_json(const AuditReport& r) {
    Json doc;
    doc["schema_version"] = 1;
    doc["n"] = r.n;
    doc["dim"] = r.dim;
    doc["summary"] = summary_to_json(r.summary);
    doc["spheres_included"] = r.spheres_included;
    if (!r.sphere_note.empty()) doc["sphere_note"] = r.sphere_note;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json item;
        item["rule"] = e.rule;
        item["statement"] = e.statement;
        item["direction"] = e.direction == AuditEntry::Direction::at_least ? "at_least" : "at_most";
        item["applicable"] = e.applicable;
        item["bound"] = e.bound.str();
        item["enumerated"] = e.enumerated.str();
        item["margin"] = e.margin.str();
        item["verdict"] = verdict_str(e.verdict);
        if (!e.note.empty()) item["note"] = e.note;
        entries.push_back(std::move(item));
    }
    doc["entries"] = std::move(entries);
    doc["failed"] = r.failed();
    return doc;
}

Json correspondence_to_json(const InversionCorrespondence& c) {
    Json doc;
    doc["anchor"] = c.anchor;
    doc["dim"] = c.dim;
    doc["bijection_ok"] = c.bijection_ok;
    doc["objects_through_anchor"] = profile_counts(c.object_profile);
    doc["partners_off_anchor"] = profile_counts(c.partner_profile);
    Json rows = Json::array();
    for (const auto& row : c.rows) {
        Json item;
        item["object"] = row.object_key;
        item["partner"] = row.partner_key;
        item["object_points"] = row.object_points;
        item["partner_points"] = row.partner_points;
        rows.push_back(std::move(item));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

Json projection_to_json(const ProjectedSet& ps, const IncidenceProfile& t_profile,
                        const ThroughPointProfile& anchored_planes, bool identity_ok) {
    Json doc;
    doc["anchor"] = ps.anchor;
    Json dirs = Json::array();
    for (std::size_t i = 0; i < ps.directions.size(); ++i) {
        const DirKey& d = ps.directions[i];
        Json item;
        item["direction"] = Json::array({d.x.get_str(), d.y.get_str(), d.z.get_str()});
        item["source_index"] = ps.source_index[i];
        dirs.push_back(std::move(item));
    }
    doc["directions"] = std::move(dirs);
    doc["line_profile"] = profile_counts(t_profile);
    doc["planes_through_anchor"] = profile_counts(anchored_planes.profile);
    doc["identity_t_k_equals_m_k_plus_1"] = identity_ok;
    return doc;
}

Json sphere_identity_to_json(const SphereIdentityRecord& r) {
    Json doc;
    doc["n"] = r.n;
    doc["anchor"] = r.anchor;
    doc["surface"] = r.surface_is_sphere ? "sphere" : "plane";
    doc["spheres_total"] = r.spheres_total;
    doc["surface_triples"] = r.surface_triples.get_str();
    doc["planes3_through_anchor"] = r.planes3_through_anchor;
    doc["expected_total"] = r.expected_total.get_str();
    doc["identity_holds"] = r.identity_holds;
    return doc;
}

Json intersection_to_json(const IntersectionRecord& r) {
    Json doc;
    doc["n"] = r.n;
    doc["k"] = r.k;
    doc["surface"] = r.surface_is_sphere ? "sphere" : "plane";
    doc["p"] = r.p;
    doc["q"] = r.q;
    doc["sigma_p"] = r.sigma_p;
    doc["sigma_q"] = r.sigma_q;
    doc["common"] = r.common;
    doc["bound"] = r.bound.str();
    doc["holds"] = r.holds;
    return doc;
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json item;
        item["n"] = r.n;
        item["trial"] = r.trial;
        item["seed"] = r.seed;
        item["generated"] = r.generated;
        if (!r.error.empty()) item["error"] = r.error;
        if (r.generated) {
            item["audit_ok"] = r.audit_ok;
            if (!r.failed_rules.empty()) item["failed_rules"] = r.failed_rules;
            if (r.has_margin) {
                item["min_margin"] = r.min_margin.str();
                item["min_margin_rule"] = r.min_margin_rule;
            }
        }
        arr.push_back(std::move(item));
    }
    Json doc;
    doc["rows"] = std::move(arr);
    return doc;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "n,trial,seed,generated,audit_ok,failed_rules,min_margin_rule,min_margin,error\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.trial << ',' << r.seed << ',' << (r.generated ? 1 : 0) << ','
            << (r.generated && r.audit_ok ? 1 : 0) << ',';
        for (std::size_t i = 0; i < r.failed_rules.size(); ++i)
            out << (i ? ";" : "") << r.failed_rules[i];
        out << ',' << (r.has_margin ? r.min_margin_rule : "") << ','
            << (r.has_margin ? r.min_margin.str() : "") << ',' << r.error << "\n";
    }
    return out.str();
}

} // namespace ilab
