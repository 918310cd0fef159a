#pragma once

#include <optional>

#include "polyhole/json_io.hpp"

namespace polyhole {

/// End-to-end verification of the main theorem for one (h, d): facet system,
/// hole ledger, very ampleness, non-normality and 3-normality, plus the
/// Groebner verdict for the x_1 = 0 facet configuration (informational: it
/// does not gate `overall`).
struct TheoremReport {
    PhdSpec spec;

    bool facet_check = false;
    std::size_t facet_count = 0;
    std::size_t expected_facet_count = 0;  // 8(d-2)+2
    std::vector<Halfspace> missing_facets;  // expected but not cut out as facets
    std::vector<Halfspace> extra_facets;

    HoleReport holes;
    bool hole_check = false;  // exactly h holes, all at degree 2, formula match

    VeryAmplenessCertificate very_ample;
    Verdict normal = Verdict::unknown;
    KNormalReport three_normal;
    GroebnerReport groebner;

    std::map<std::string, long long> runtime_ms;

    Verdict overall = Verdict::unknown;
};

struct ReportOptions {
    Int hole_budget = 0;       // <= 0: max(d+3, 8)
    Int knormal_horizon = 0;   // <= 0: same default
    Int groebner_bound = 0;    // <= 0: max G-degree + 2
    bool run_groebner = true;
    // test seam: replaces build_expected_hrep to exercise failure detection
    std::optional<HRep> expected_hrep_override;
};

TheoremReport run_theorem_report(const PhdSpec& spec, const ReportOptions& options = {});

json to_json(const TheoremReport& report);

}  // namespace polyhole
