#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "raq/cells.hpp"
#include "raq/f2.hpp"
#include "raq/graph.hpp"
#include "raq/polyhedral.hpp"

namespace raq {

/// Basis monomial x^a ⊗ y_J of the second page
///   E₂ = F₂[x₁..x_m]/(x_i x_j : {i,j} ∉ E(Γ)) ⊗ Λ(y₁..y_m),
/// with |x_i| = |y_i| = 1. A monomial whose x-support is not a clique of Γ
/// is zero in the ring and never stored.
struct E2Key {
    std::vector<int> exps;    // x-exponents, size m
    std::uint32_t jmask = 0;  // y-subset J

    auto operator<=>(const E2Key&) const = default;

    int p() const;                       // total x-degree
    int q() const { return std::popcount(jmask); }
};

/// F₂-linear combination of basis monomials (keys present = coefficient 1).
using E2Element = std::set<E2Key>;

/// Number of degree-d monomials of F₂[x₁..x_m]/(x_i x_j : {i,j} ∉ E): the
/// Hilbert function of the face ring of Γ.
long long sr_dim(const SimpleGraph& g, int d);

/// The derivation with d₂x_i = 0 and d₂y_i = x_i², extended over F₂
/// (no signs); sends bidegree (p,q) to (p+2, q−1).
E2Element d2(const SimpleGraph& g, const E2Element& e);

/// Product in E₂: graded-commutative, char 2; y_J y_J' = 0 when J ∩ J' ≠ ∅,
/// x-monomials prune to 0 on non-clique support.
E2Element e2_multiply(const SimpleGraph& g, const E2Element& a, const E2Element& b);

/// A class of the third page in canonical coordinates: the representing
/// cycle reduced modulo im(d₂) over the stratum basis at bidegree (p,q).
struct E3Class {
    int p = 0, q = 0;
    F2Row coords;

    bool is_zero() const { return f2_is_zero(coords); }
    bool operator==(const E3Class&) const = default;
};

/// The third page E₃ = H(E₂, d₂) of the Serre spectral sequence of the
/// torus fibration over the classifying space of W, computed bidegree by
/// bidegree up to total degree D (d₂ preserves p + 2q, so each bidegree is
/// an independent linear-algebra problem).
class E3Page {
public:
    E3Page(SimpleGraph g, int max_total_degree);

    const SimpleGraph& graph() const { return g_; }
    int degree_cap() const { return D_; }

    /// dim E₃ in total degree d.
    long long dim(int d) const;
    /// dim E₃ at bidegree (p,q).
    long long dim(int p, int q) const;
    /// Hilbert function: dims in total degrees 0..D.
    std::vector<long long> hilbert() const;

    /// Canonical coset reduction of an E₂ cycle lying at bidegree (p,q).
    E3Class reduce(int p, int q, const E2Element& cycle) const;
    /// A lift of the class back to E₂ (its canonical representative).
    E2Element representative(const E3Class& cls) const;

    /// Echelonized canonical basis of E₃ at bidegree (p,q).
    std::vector<E3Class> basis(int p, int q) const;

    /// The class of z_{i,I} = x_i y_I; requires I ⊆ N_i \ {i} where
    /// N_i = {j ≠ i : {i,j} ∉ E(Γ)}; rejects other I (the representative
    /// would not be a cycle).
    E3Class z_class(int i, const std::vector<int>& I) const;
    E3Class z_class(int i, std::uint32_t I_mask) const;

    E3Class product(const E3Class& a, const E3Class& b) const;

    /// dim E₂ at bidegree (p,q) (basis size of the stratum).
    long long e2_dim(int p, int q) const;

private:
    struct Stratum {
        std::vector<E2Key> keys;          // sorted basis
        std::map<E2Key, std::size_t> index;
        F2RowSpace image;                 // im d₂ from (p−2, q+1)
        std::vector<F2Row> quotient;      // canonical reduced cycle basis
        Stratum() : image(0) {}
    };

    const Stratum& stratum(int p, int q) const;
    F2Row to_row(const Stratum& s, const E2Element& e) const;

    SimpleGraph g_;
    int D_;
    std::map<std::pair<int, int>, Stratum> strata_;
};

/// All admissible generator indices (i, I ⊆ N_i \ {i}) with 1 + |I| ≤ max_degree.
std::vector<std::pair<int, std::uint32_t>> z_generator_indices(const SimpleGraph& g,
                                                               int max_degree);

/// Per-degree comparison of the span of products of z classes against E₃.
struct GenerationReport {
    std::vector<DegreeComparison> rows;   // lhs = dim span, rhs = dim E₃
    bool pass = true;
};

GenerationReport generation_check(const E3Page& page, int up_to);

/// Degreewise comparison of the E₃ Hilbert function with the mod-2 Betti
/// numbers of the polyhedral-product model of the adjoint group's
/// classifying space.
struct CollapseReport {
    std::vector<DegreeComparison> rows;   // lhs = hilbert, rhs = betti
    bool pass = true;
};

CollapseReport collapse_crosscheck(const SimpleGraph& g, int up_to,
                                   MobiusModel model = MobiusModel::cw6,
                                   std::size_t cell_cap = kDefaultCellCap);

}  // namespace raq
