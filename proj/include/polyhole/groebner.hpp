#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyhole/families.hpp"
#include "polyhole/matrix.hpp"

namespace polyhole {

/// Variables x_1 > x_2 > ... > x_{2d-4} > y_1 > ... > y_h > z_1 > ... > z_h >
/// w_0 > ... > w_h, stored in descending order so exponent vectors compare
/// lexicographically as plain vectors.
struct VariableOrder {
    Int h = 1;
    Int d = 3;
    std::vector<std::string> names;

    static VariableOrder for_spec(const PhdSpec& spec);
    std::size_t count() const { return names.size(); }
    std::size_t x(Int i) const;  // x_i, 1-based, i <= 2d-4
    std::size_t y(Int j) const;  // y_j, 1 <= j <= h
    std::size_t z(Int j) const;  // z_j, 1 <= j <= h
    std::size_t w(Int k) const;  // w_k, 0 <= k <= h
};

/// Exponent vector over a VariableOrder.
struct Monomial {
    Vec exponents;

    Int degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial divide(const Monomial& other) const;  // exact, caller checks divides()
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class CompareResult { less, equal, greater };

CompareResult lex_compare(const Monomial& a, const Monomial& b, const VariableOrder& ord);

/// lead - trail with lead > trail in the lex order.
struct Binomial {
    Monomial lead;
    Monomial trail;
    std::string provenance;  // G1..G8, spair, reduced
};

/// The monomial map variable -> exponent vector in t_1..t_d (the configuration
/// columns of the x_1 = 0 facet).
struct ToricMap {
    IntMatrix images;  // one row per variable, d columns

    static ToricMap for_spec(const PhdSpec& spec, const VariableOrder& ord);
    Vec image(const Monomial& m) const;
};

bool in_toric_ideal(const Binomial& g, const ToricMap& map);

/// The Groebner basis sets G_1..G_8. Degenerate index ranges are empty (G_6
/// and G_7 for h = 1, the k-indexed part of G_8 for d = 3); the k-indexed part
/// of G_8 also needs z_2 and is emitted only for h >= 2.
std::vector<Binomial> generate_g_sets(const PhdSpec& spec, const VariableOrder& ord);

/// 0, 1 or 2 signed monomials; the toric pipeline must stay binomial, any
/// wider intermediate is a hard error.
struct BinPoly {
    std::vector<std::pair<int, Monomial>> terms;

    bool is_zero() const { return terms.empty(); }
    static BinPoly from_monomial(int coeff, Monomial m);
    void normalize(const VariableOrder& ord);  // merge, drop zeros, sort desc
};

BinPoly s_pair(const Binomial& a, const Binomial& b, const VariableOrder& ord);

/// Full reduction; the reducer is the first basis element in canonical order
/// whose lead divides the highest reducible term.
BinPoly reduce(BinPoly p, const std::vector<Binomial>& basis, const VariableOrder& ord);

struct GroebnerReport {
    std::size_t basis_size = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pair_failures;
    std::size_t kernel_checked = 0;  // G elements failing in_toric_ideal
    std::vector<std::size_t> kernel_failures;
    Int membership_bound = 0;
    std::size_t fibers_checked = 0;
    std::size_t monomials_checked = 0;
    std::vector<Vec> membership_failures;  // t-degree fibers with >1 normal form
    bool squarefree_initial = true;
    bool certified = false;  // everything above clean

    bool passed() const;
};

/// Buchberger verification: (i) every basis element lies in ker(pi); (ii) all
/// S-pairs reduce to zero; (iii) every binomial of the toric ideal of degree
/// <= membership_bound reduces to zero, established by grouping all monomials
/// of bounded degree into toric-image fibers and comparing normal forms;
/// (iv) squarefree initial ideal. membership_bound <= 0 selects the default
/// (max degree in G plus 2).
GroebnerReport buchberger_verify(const std::vector<Binomial>& basis, const VariableOrder& ord,
                                 const ToricMap& map, Int membership_bound = 0);

bool initial_ideal_squarefree(const std::vector<Binomial>& basis);

}  // namespace polyhole
