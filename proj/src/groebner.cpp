#include "polyhole/groebner.hpp"

#include <algorithm>
#include <map>

namespace polyhole {

VariableOrder VariableOrder::for_spec(const PhdSpec& spec) {
    spec.validate();
    VariableOrder ord;
    ord.h = spec.h;
    ord.d = spec.d;
    for (Int i = 1; i <= 2 * spec.d - 4; ++i) ord.names.push_back("x" + std::to_string(i));
    for (Int j = 1; j <= spec.h; ++j) ord.names.push_back("y" + std::to_string(j));
    for (Int j = 1; j <= spec.h; ++j) ord.names.push_back("z" + std::to_string(j));
    for (Int k = 0; k <= spec.h; ++k) ord.names.push_back("w" + std::to_string(k));
    return ord;
}

std::size_t VariableOrder::x(Int i) const {
    if (i < 1 || i > 2 * d - 4) throw invalid_input("VariableOrder: x index out of range");
    return static_cast<std::size_t>(i - 1);
}
std::size_t VariableOrder::y(Int j) const {
    if (j < 1 || j > h) throw invalid_input("VariableOrder: y index out of range");
    return static_cast<std::size_t>(2 * d - 4 + j - 1);
}
std::size_t VariableOrder::z(Int j) const {
    if (j < 1 || j > h) throw invalid_input("VariableOrder: z index out of range");
    return static_cast<std::size_t>(2 * d - 4 + h + j - 1);
}
std::size_t VariableOrder::w(Int k) const {
    if (k < 0 || k > h) throw invalid_input("VariableOrder: w index out of range");
    return static_cast<std::size_t>(2 * d - 4 + 2 * h + k);
}

Int Monomial::degree() const {
    Int s = 0;
    for (Int e : exponents) s = checked_add(s, e);
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (exponents.size() != other.exponents.size()) return false;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const { return {vec_add(exponents, other.exponents)}; }

Monomial Monomial::divide(const Monomial& other) const { return {vec_sub(exponents, other.exponents)}; }

CompareResult lex_compare(const Monomial& a, const Monomial& b, const VariableOrder& ord) {
    if (a.exponents.size() != ord.count() || b.exponents.size() != ord.count())
        throw invalid_input("lex_compare: monomial length mismatch");
    // variables are stored in descending order, so plain lexicographic compare
    if (a.exponents < b.exponents) return CompareResult::less;
    if (a.exponents == b.exponents) return CompareResult::equal;
    return CompareResult::greater;
}

ToricMap ToricMap::for_spec(const PhdSpec& spec, const VariableOrder& ord) {
    std::size_t d = static_cast<std::size_t>(spec.d);
    IntMatrix img(ord.count(), d);
    auto set_row = [&](std::size_t row, Int mid, Int last) {
        img.at(row, 0) = 1;
        for (std::size_t t = 1; t + 1 < d; ++t) img.at(row, t) = mid;
        img.at(row, d - 1) = last;
    };
    for (Int i = 1; i <= spec.d - 2; ++i) {
        // x_{2i-1} -> t_1 t_{i+1}, x_{2i} -> t_1 t_{i+1} t_d
        img.at(ord.x(2 * i - 1), 0) = 1;
        img.at(ord.x(2 * i - 1), static_cast<std::size_t>(i)) = 1;
        img.at(ord.x(2 * i), 0) = 1;
        img.at(ord.x(2 * i), static_cast<std::size_t>(i)) = 1;
        img.at(ord.x(2 * i), d - 1) += 1;
    }
    for (Int j = 1; j <= spec.h; ++j) set_row(ord.y(j), j, j - 1);
    for (Int j = 1; j <= spec.h; ++j) set_row(ord.z(j), j - 1, j);
    for (Int k = 0; k <= spec.h; ++k) set_row(ord.w(k), k, k);
    ToricMap map;
    map.images = std::move(img);
    return map;
}

Vec ToricMap::image(const Monomial& m) const {
    if (m.exponents.size() != images.rows()) throw invalid_input("ToricMap: monomial length mismatch");
    Vec out(images.cols(), 0);
    for (std::size_t v = 0; v < images.rows(); ++v) {
        Int e = m.exponents[v];
        if (e == 0) continue;
        for (std::size_t t = 0; t < images.cols(); ++t)
            out[t] = checked_add(out[t], checked_mul(e, images.at(v, t)));
    }
    return out;
}

bool in_toric_ideal(const Binomial& g, const ToricMap& map) {
    return map.image(g.lead) == map.image(g.trail);
}

namespace {

Monomial mono(const VariableOrder& ord, std::initializer_list<std::pair<std::size_t, Int>> factors) {
    Monomial m{Vec(ord.count(), 0)};
    for (const auto& [idx, e] : factors) m.exponents[idx] = checked_add(m.exponents[idx], e);
    return m;
}

}  // namespace

std::vector<Binomial> generate_g_sets(const PhdSpec& spec, const VariableOrder& ord) {
    const Int h = spec.h, d = spec.d;
    std::vector<Binomial> out;
    auto add = [&](Monomial lead, Monomial trail, const std::string& tag) {
        Binomial b{std::move(lead), std::move(trail), tag};
        if (lex_compare(b.lead, b.trail, ord) != CompareResult::greater)
            throw invalid_input("generate_g_sets: lead not greater than trail in " + tag);
        out.push_back(std::move(b));
    };

    for (Int i = 1; i <= d - 2; ++i)  // G1
        for (Int j = i + 1; j <= d - 2; ++j)
            add(mono(ord, {{ord.x(2 * i - 1), 1}, {ord.x(2 * j), 1}}),
                mono(ord, {{ord.x(2 * i), 1}, {ord.x(2 * j - 1), 1}}), "G1");

    for (Int i = 1; i <= h; ++i)  // G2: i <= j <= k <= l, i+l = j+k, nontrivial
        for (Int j = i + 1; j <= h; ++j)
            for (Int k = j; k <= h; ++k) {
                Int l = j + k - i;
                if (l < k || l > h) continue;
                add(mono(ord, {{ord.y(i), 1}, {ord.y(l), 1}}),
                    mono(ord, {{ord.y(j), 1}, {ord.y(k), 1}}), "G2");
                add(mono(ord, {{ord.z(i), 1}, {ord.z(l), 1}}),
                    mono(ord, {{ord.z(j), 1}, {ord.z(k), 1}}), "G2");
            }

    for (Int i = 0; i <= h; ++i)  // G3
        for (Int j = i + 1; j <= h; ++j)
            for (Int k = j; k <= h; ++k) {
                Int l = j + k - i;
                if (l < k || l > h) continue;
                add(mono(ord, {{ord.w(i), 1}, {ord.w(l), 1}}),
                    mono(ord, {{ord.w(j), 1}, {ord.w(k), 1}}), "G3");
            }

    for (Int i = 1; i <= d - 2; ++i)  // G4
        for (Int j = 1; j <= h; ++j) {
            add(mono(ord, {{ord.x(2 * i - 1), 1}, {ord.z(j), 1}}),
                mono(ord, {{ord.x(2 * i), 1}, {ord.w(j - 1), 1}}), "G4");
            add(mono(ord, {{ord.x(2 * i - 1), 1}, {ord.w(j), 1}}),
                mono(ord, {{ord.x(2 * i), 1}, {ord.y(j), 1}}), "G4");
        }

    for (Int i = 1; i <= h; ++i)  // G5
        for (Int j = 1; j <= h; ++j)
            add(mono(ord, {{ord.y(i), 1}, {ord.z(j), 1}}),
                mono(ord, {{ord.w(i - 1), 1}, {ord.w(j), 1}}), "G5");

    for (Int i = 1; i <= h - 1; ++i)  // G6
        for (Int j = 1; j <= h; ++j) {
            add(mono(ord, {{ord.y(i), 1}, {ord.w(j), 1}}),
                mono(ord, {{ord.y(i + 1), 1}, {ord.w(j - 1), 1}}), "G6");
            add(mono(ord, {{ord.z(i), 1}, {ord.w(j), 1}}),
                mono(ord, {{ord.z(i + 1), 1}, {ord.w(j - 1), 1}}), "G6");
        }

    for (Int i = 1; i <= d - 2; ++i)  // G7
        for (Int j = 2; j <= h; ++j)
            add(mono(ord, {{ord.x(2 * i - 1), 1}, {ord.y(j), 1}, {ord.w(0), 1}}),
                mono(ord, {{ord.x(2 * i), 1}, {ord.y(1), 1}, {ord.y(j - 1), 1}}), "G7");

    // G8, k-indexed part (needs z_2, so h >= 2): the lead is the evens-first
    // parity pattern prod_{q<=d-2-k} x_{2q} * prod_{q>d-2-k} x_{2q-1}, the one
    // pattern class G1 cannot reduce; the displayed trails pin this form.
    if (h >= 2)
        for (Int k = 0; k <= d - 4; ++k) {
            Monomial lead{Vec(ord.count(), 0)};
            for (Int q = 1; q <= d - 2 - k; ++q) lead.exponents[ord.x(2 * q)] = 1;
            for (Int q = d - 1 - k; q <= d - 2; ++q) lead.exponents[ord.x(2 * q - 1)] = 1;
            Monomial trail{Vec(ord.count(), 0)};
            trail.exponents[ord.z(1)] = d - 4 - k;
            trail.exponents[ord.z(2)] += 1;
            trail.exponents[ord.w(0)] = k + 1;
            add(std::move(lead), std::move(trail), "G8");
        }
    {
        // one even at the first pair, odds elsewhere -> w_0^{d-3} w_1
        Monomial lead{Vec(ord.count(), 0)};
        lead.exponents[ord.x(2)] = 1;
        for (Int q = 2; q <= d - 2; ++q) lead.exponents[ord.x(2 * q - 1)] = 1;
        Monomial trail{Vec(ord.count(), 0)};
        trail.exponents[ord.w(0)] = d - 3;
        trail.exponents[ord.w(1)] = 1;
        add(std::move(lead), std::move(trail), "G8");
    }
    {
        // all odd -> w_0^{d-3} y_1
        Monomial lead{Vec(ord.count(), 0)};
        for (Int q = 1; q <= d - 2; ++q) lead.exponents[ord.x(2 * q - 1)] = 1;
        Monomial trail{Vec(ord.count(), 0)};
        trail.exponents[ord.w(0)] = d - 3;
        trail.exponents[ord.y(1)] = 1;
        add(std::move(lead), std::move(trail), "G8");
    }
    return out;
}

BinPoly BinPoly::from_monomial(int coeff, Monomial m) {
    BinPoly p;
    if (coeff != 0) p.terms.emplace_back(coeff, std::move(m));
    return p;
}

void BinPoly::normalize(const VariableOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return lex_compare(a.second, b.second, ord) == CompareResult::greater;
    });
    std::vector<std::pair<int, Monomial>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().second == t.second)
            merged.back().first += t.first;
        else
            merged.push_back(std::move(t));
    }
    terms.clear();
    for (auto& t : merged)
        if (t.first != 0) terms.push_back(std::move(t));
    if (terms.size() > 2)
        throw invalid_input("BinPoly: non-binomial intermediate in the toric pipeline");
    for (const auto& t : terms)
        if (t.first != 1 && t.first != -1)
            throw invalid_input("BinPoly: non-unit coefficient in the toric pipeline");
}

BinPoly s_pair(const Binomial& a, const Binomial& b, const VariableOrder& ord) {
    Monomial lcm{Vec(ord.count(), 0)};
    for (std::size_t i = 0; i < ord.count(); ++i)
        lcm.exponents[i] = std::max(a.lead.exponents[i], b.lead.exponents[i]);
    Monomial qa = lcm.divide(a.lead);
    Monomial qb = lcm.divide(b.lead);
    BinPoly p;
    p.terms.emplace_back(-1, qa * a.trail);
    p.terms.emplace_back(1, qb * b.trail);
    p.normalize(ord);
    return p;
}

BinPoly reduce(BinPoly p, const std::vector<Binomial>& basis, const VariableOrder& ord) {
    p.normalize(ord);
    for (;;) {
        bool reduced = false;
        for (std::size_t ti = 0; ti < p.terms.size() && !reduced; ++ti) {
            for (const Binomial& g : basis) {
                if (!g.lead.divides(p.terms[ti].second)) continue;
                Monomial q = p.terms[ti].second.divide(g.lead);
                int c = p.terms[ti].first;
                p.terms.erase(p.terms.begin() + static_cast<std::ptrdiff_t>(ti));
                p.terms.emplace_back(c, q * g.trail);
                p.normalize(ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) return p;
    }
}

bool initial_ideal_squarefree(const std::vector<Binomial>& basis) {
    for (const Binomial& g : basis)
        for (Int e : g.lead.exponents)
            if (e > 1) return false;
    return true;
}

bool GroebnerReport::passed() const {
    return certified && pair_failures.empty() && kernel_failures.empty() &&
           membership_failures.empty() && squarefree_initial;
}

GroebnerReport buchberger_verify(const std::vector<Binomial>& basis, const VariableOrder& ord,
                                 const ToricMap& map, Int membership_bound) {
    GroebnerReport report;
    report.basis_size = basis.size();

    for (std::size_t i = 0; i < basis.size(); ++i) {
        ++report.kernel_checked;
        if (!in_toric_ideal(basis[i], map)) report.kernel_failures.push_back(i);
    }

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ++report.pairs_checked;
            if (!reduce(s_pair(basis[i], basis[j], ord), basis, ord).is_zero())
                report.pair_failures.emplace_back(i, j);
        }

    Int max_deg = 0;
    for (const Binomial& g : basis) max_deg = std::max(max_deg, g.lead.degree());
    report.membership_bound = membership_bound > 0 ? membership_bound : max_deg + 2;

    // count C(nv + D, D) before enumerating; an oversized request comes back
    // with certified = false rather than running forever
    long double estimate = 1;
    for (Int t = 1; t <= report.membership_bound; ++t)
        estimate = estimate * (static_cast<long double>(ord.count()) + t) / t;
    if (estimate > 4e6L) {
        report.certified = false;
        return report;
    }

    // every toric-ideal binomial of degree <= bound reduces to zero iff all
    // monomials in one pi-fiber share a normal form
    std::map<Vec, std::vector<Monomial>> fibers;
    Monomial current{Vec(ord.count(), 0)};
    auto recurse = [&](auto&& self, std::size_t var, Int remaining) -> void {
        if (var == ord.count()) {
            ++report.monomials_checked;
            fibers[map.image(current)].push_back(current);
            return;
        }
        for (Int e = 0; e <= remaining; ++e) {
            current.exponents[var] = e;
            self(self, var + 1, remaining - e);
        }
        current.exponents[var] = 0;
    };
    recurse(recurse, 0, report.membership_bound);

    for (const auto& [image, monos] : fibers) {
        if (monos.size() < 2) continue;
        ++report.fibers_checked;
        BinPoly first_nf = reduce(BinPoly::from_monomial(1, monos.front()), basis, ord);
        bool mismatch = false;
        for (std::size_t i = 1; i < monos.size() && !mismatch; ++i) {
            BinPoly nf = reduce(BinPoly::from_monomial(1, monos[i]), basis, ord);
            if (!(nf.terms == first_nf.terms)) mismatch = true;
        }
        if (mismatch) report.membership_failures.push_back(image);
    }

    report.squarefree_initial = initial_ideal_squarefree(basis);
    report.certified = true;
    return report;
}

}  // namespace polyhole
