#include "polyhole/very_ample.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace polyhole {

namespace {

struct WitnessSearch {
    const Cone& cone;
    const std::vector<Vec>& gens;  // p - v, nonzero, sorted by decreasing grade
    Vec grading;
    std::size_t max_nodes;
    std::size_t nodes = 0;
    std::unordered_set<Vec, VecHash> dead;

    // returns the generator chain summing to target, or nullopt
    std::optional<std::vector<Vec>> find(const Vec& target) {
        if (is_zero(target)) return std::vector<Vec>{};
        if (!cone.contains(target)) return std::nullopt;
        if (dead.count(target)) return std::nullopt;
        if (++nodes > max_nodes) throw budget_exceeded("witness search: node budget exceeded");
        Int grade = checked_dot(grading, target);
        for (const Vec& g : gens) {
            if (checked_dot(grading, g) > grade) continue;
            auto rest = find(vec_sub(target, g));
            if (rest) {
                rest->push_back(g);
                return rest;
            }
        }
        dead.insert(target);
        return std::nullopt;
    }
};

}  // namespace

std::string VeryAmplenessCertificate::digest() const {
    std::size_t hb_total = 0, witnessed = 0;
    for (const auto& e : entries) {
        hb_total += e.basis.size();
        for (const auto& w : e.witnesses)
            if (w) ++witnessed;
    }
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (const auto& e : entries) {
        VecHash vh;
        mix(vh(e.vertex));
        for (const auto& b : e.basis) mix(vh(b));
    }
    std::ostringstream os;
    os << "vertices=" << entries.size() << ";basis=" << hb_total << ";witnessed=" << witnessed
       << ";fp=" << std::hex << (h & 0xffffffffull);
    return os.str();
}

VeryAmplenessCertificate certify_very_ample(const LatticePolytope& p,
                                            const WitnessSearchBudget& budget) {
    if (p.dim() != p.ambient_dim())
        throw invalid_input("certify_very_ample: requires a full-dimensional polytope");
    VeryAmplenessCertificate cert;
    cert.verdict = Verdict::yes;

    std::vector<Vec> lattice = p.lattice_points(1);
    for (const Vec& v : p.vertices()) {
        VertexCertificate entry;
        entry.vertex = v;
        Cone cone = tangent_cone(p, v);
        entry.basis = hilbert_basis(cone);

        std::vector<Vec> gens;
        for (const Vec& pt : lattice)
            if (pt != v) gens.push_back(vec_sub(pt, v));
        Vec w = cone.positive_grading();
        std::sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
            Int ga = checked_dot(w, a), gb = checked_dot(w, b);
            if (ga != gb) return ga > gb;
            return a < b;
        });

        WitnessSearch search{cone, gens, w, budget.max_nodes, 0, {}};
        bool budget_hit = false;
        for (const Vec& eta : entry.basis) {
            std::optional<std::vector<Vec>> witness;
            try {
                witness = search.find(eta);
            } catch (const budget_exceeded&) {
                budget_hit = true;
                entry.witnesses.emplace_back(std::nullopt);
                continue;
            }
            if (!witness && !entry.counterexample) entry.counterexample = eta;
            entry.witnesses.push_back(std::move(witness));
        }
        if (entry.counterexample) {
            entry.status = Verdict::no;
            cert.verdict = Verdict::no;
        } else if (budget_hit) {
            entry.status = Verdict::unknown;
            if (cert.verdict == Verdict::yes) cert.verdict = Verdict::unknown;
        } else {
            entry.status = Verdict::yes;
        }
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

}  // namespace polyhole
