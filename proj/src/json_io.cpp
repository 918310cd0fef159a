#include "polyhole/json_io.hpp"

namespace polyhole {

json to_json(const LatticePolytope& p) {
    json j;
    j["ambient_dim"] = p.ambient_dim();
    j["points"] = p.points();  // already deduplicated and sorted
    return j;
}

LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("points"))
        throw invalid_input("polytope JSON: expected {\"ambient_dim\": N, \"points\": [[..],..]}");
    std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<Vec> pts;
    for (const auto& jp : j.at("points")) pts.push_back(jp.get<Vec>());
    return LatticePolytope(dim, std::move(pts));
}

json to_json(const HRep& rep) {
    json arr = json::array();
    for (const Halfspace& h : rep.halfspaces) {
        json jh;
        jh["normal"] = h.normal;
        jh["offset"] = h.offset;
        if (!h.label.empty()) jh["label"] = h.label;
        arr.push_back(std::move(jh));
    }
    json j;
    j["ambient_dim"] = rep.ambient_dim;
    j["halfspaces"] = std::move(arr);
    return j;
}

json to_json(const HoleReport& report) {
    json holes = json::object();
    for (const auto& [deg, hs] : report.holes_by_degree) holes[std::to_string(deg)] = hs;
    json j;
    j["holes"] = std::move(holes);
    j["certified"] = report.certified_complete;
    j["stop_reason"] = to_string(report.stop_reason);
    j["degree_budget"] = report.degree_budget;
    j["total_holes"] = report.total_holes();
    if (!report.probe_evidence.empty()) j["probe_evidence"] = report.probe_evidence;
    return j;
}

json to_json(const KNormalReport& report) {
    json j;
    j["k"] = report.k;
    j["horizon"] = report.horizon;
    j["holds_up_to_horizon"] = report.holds_up_to_horizon;
    j["certified_all_degrees"] = report.certified_all_degrees;
    json fails = json::object();
    for (const auto& [deg, pts] : report.failures) fails[std::to_string(deg)] = pts;
    j["failures"] = std::move(fails);
    return j;
}

json to_json(const VeryAmplenessCertificate& cert) {
    json entries = json::array();
    for (const auto& e : cert.entries) {
        json je;
        je["vertex"] = e.vertex;
        je["hilbert_basis_size"] = e.basis.size();
        je["status"] = to_string(e.status);
        if (e.counterexample) je["counterexample"] = *e.counterexample;
        entries.push_back(std::move(je));
    }
    json j;
    j["verdict"] = to_string(cert.verdict);
    j["digest"] = cert.digest();
    j["vertices"] = std::move(entries);
    return j;
}

json to_json(const GroebnerReport& report) {
    json j;
    j["basis_size"] = report.basis_size;
    j["pairs_checked"] = report.pairs_checked;
    json failures = json::array();
    for (const auto& [a, b] : report.pair_failures) failures.push_back(json::array({a, b}));
    for (std::size_t i : report.kernel_failures)
        failures.push_back(json{{"kernel_check", i}});
    for (const Vec& f : report.membership_failures) failures.push_back(json{{"fiber", f}});
    j["failures"] = std::move(failures);
    j["squarefree_initial"] = report.squarefree_initial;
    j["membership_bound"] = report.membership_bound;
    j["fibers_checked"] = report.fibers_checked;
    j["monomials_checked"] = report.monomials_checked;
    j["certified"] = report.certified;
    j["passed"] = report.passed();
    return j;
}

}  // namespace polyhole
