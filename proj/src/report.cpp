#include "polyhole/report.hpp"

#include <algorithm>
#include <chrono>

namespace polyhole {

namespace {

class StageTimer {
public:
    explicit StageTimer(std::map<std::string, long long>& sink) : sink_(sink) {}
    template <typename F>
    auto run(const std::string& name, F&& f) {
        auto start = std::chrono::steady_clock::now();
        auto cleanup = [&] {
            auto stop = std::chrono::steady_clock::now();
            sink_[name] = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            cleanup();
        } else {
            auto result = f();
            cleanup();
            return result;
        }
    }

private:
    std::map<std::string, long long>& sink_;
};

}  // namespace

TheoremReport run_theorem_report(const PhdSpec& spec, const ReportOptions& options) {
    spec.validate();
    TheoremReport report;
    report.spec = spec;
    StageTimer timer(report.runtime_ms);

    LatticePolytope p = build_phd(spec);
    GradedSemigroup s = GradedSemigroup::homogenize(p);
    Int hole_budget = options.hole_budget > 0 ? options.hole_budget : s.default_budget();
    Int horizon = options.knormal_horizon > 0 ? options.knormal_horizon : s.default_budget();

    // facet system against the paper's hyperplane families
    timer.run("facets", [&] {
        HRep computed = facet_enumeration(p);
        HRep expected = options.expected_hrep_override ? *options.expected_hrep_override
                                                       : build_expected_hrep(spec);
        report.facet_count = computed.halfspaces.size();
        report.expected_facet_count = static_cast<std::size_t>(8 * (spec.d - 2) + 2);
        for (const Halfspace& h : expected.halfspaces)
            if (!std::binary_search(computed.halfspaces.begin(), computed.halfspaces.end(), h))
                report.missing_facets.push_back(h);
        for (const Halfspace& h : computed.halfspaces)
            if (!std::binary_search(expected.halfspaces.begin(), expected.halfspaces.end(), h))
                report.extra_facets.push_back(h);
        report.facet_check = report.missing_facets.empty() && report.extra_facets.empty() &&
                             report.facet_count == report.expected_facet_count;
    });

    // hole ledger: exactly h holes, all at degree 2, matching the formula
    timer.run("holes", [&] {
        report.holes = s.enumerate_holes(hole_budget);
        std::vector<Vec> expect = expected_holes(spec);
        std::sort(expect.begin(), expect.end());
        std::vector<Vec> got;
        bool all_deg2 = true;
        for (const auto& [deg, hs] : report.holes.holes_by_degree)
            for (const Vec& x : hs) {
                got.push_back(x);
                if (deg != 2) all_deg2 = false;
            }
        std::sort(got.begin(), got.end());
        report.hole_check =
            report.holes.certified_complete && all_deg2 && got == expect &&
            got.size() == static_cast<std::size_t>(spec.h);
    });

    timer.run("very_ample", [&] { report.very_ample = certify_very_ample(p); });
    timer.run("normal", [&] { report.normal = s.is_normal(hole_budget); });
    timer.run("three_normal", [&] { report.three_normal = s.is_k_normal(3, horizon); });

    if (options.run_groebner) {
        timer.run("groebner", [&] {
            VariableOrder ord = VariableOrder::for_spec(spec);
            ToricMap map = ToricMap::for_spec(spec, ord);
            report.groebner =
                buchberger_verify(generate_g_sets(spec, ord), ord, map, options.groebner_bound);
        });
    }

    bool pass = report.facet_check && report.hole_check &&
                report.very_ample.verdict == Verdict::yes && report.normal == Verdict::no &&
                report.three_normal.holds_up_to_horizon && report.three_normal.certified_all_degrees;
    bool any_unknown = report.very_ample.verdict == Verdict::unknown ||
                       report.normal == Verdict::unknown ||
                       (!report.holes.certified_complete &&
                        report.holes.stop_reason == StopReason::degree_budget);
    report.overall = pass ? Verdict::yes : (any_unknown ? Verdict::unknown : Verdict::no);
    return report;
}

json to_json(const TheoremReport& report) {
    json j;
    j["h"] = report.spec.h;
    j["d"] = report.spec.d;

    json facet;
    facet["pass"] = report.facet_check;
    facet["computed_count"] = report.facet_count;
    facet["expected_count"] = report.expected_facet_count;
    if (!report.missing_facets.empty()) {
        json arr = json::array();
        for (const Halfspace& h : report.missing_facets) {
            json jh{{"normal", h.normal}, {"offset", h.offset}};
            if (!h.label.empty()) jh["label"] = h.label;
            arr.push_back(std::move(jh));
        }
        facet["expected_but_not_facet"] = std::move(arr);
    }
    if (!report.extra_facets.empty()) {
        json arr = json::array();
        for (const Halfspace& h : report.extra_facets)
            arr.push_back(json{{"normal", h.normal}, {"offset", h.offset}});
        facet["unexpected_facets"] = std::move(arr);
    }
    j["facet_check"] = std::move(facet);

    json holes = to_json(report.holes);
    holes["pass"] = report.hole_check;
    j["holes"] = std::move(holes);

    j["very_ample"] = to_json(report.very_ample);
    j["normal"] = to_string(report.normal);
    j["three_normal"] = to_json(report.three_normal);
    if (report.groebner.basis_size > 0 || report.groebner.pairs_checked > 0)
        j["groebner"] = to_json(report.groebner);
    j["runtime_ms"] = report.runtime_ms;
    j["overall"] = to_string(report.overall);
    return j;
}

}  // namespace polyhole
