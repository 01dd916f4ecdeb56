#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "raq/cells.hpp"
#include "raq/f2.hpp"
#include "raq/simplicial.hpp"

namespace raq {

constexpr std::size_t kDefaultCellCap = 5'000'000;

/// Raised when a product complex would exceed the configured cell cap.
class CellCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Chain complex over F₂, graded 0..max_degree, with bit-packed boundary
/// matrices. boundary(d) maps degree-d chains to degree d−1: row r is the
/// boundary of the r-th degree-d basis element.
class F2ChainComplex {
public:
    F2ChainComplex(std::vector<std::size_t> sizes, std::vector<F2Matrix> boundaries);

    int max_degree() const { return static_cast<int>(sizes_.size()) - 1; }
    std::size_t basis_size(int d) const {
        return d >= 0 && d <= max_degree() ? sizes_[static_cast<std::size_t>(d)] : 0;
    }
    /// Boundary ∂_d for 1 <= d <= max_degree.
    const F2Matrix& boundary(int d) const { return boundaries_[static_cast<std::size_t>(d - 1)]; }

    std::size_t boundary_rank(int d) const;

private:
    std::vector<std::size_t> sizes_;       // sizes_[d] = dim C_d
    std::vector<F2Matrix> boundaries_;     // boundaries_[d-1] = ∂_d
};

/// Mod-2 Betti numbers b_0..b_up_to. Degrees above max_degree−1 require the
/// complex to have been built high enough; missing chain groups count as 0.
std::vector<long long> betti(const F2ChainComplex& c, int up_to);

/// Reduced Betti numbers of a nonempty complex: b_0 lowered by one.
std::vector<long long> reduced_betti(const F2ChainComplex& c, int up_to);

/// Cellular chain complex of the polyhedral product Z(K;(X,A)), truncated
/// at max_dim: basis in degree d = product cells (one cell per coordinate)
/// of total dimension d whose support {i : cell_i ∉ A} is a face of k.
F2ChainComplex polyhedral_product_complex(const SimplicialComplex& k,
                                          const CellComplexPair& pair, int max_dim,
                                          std::size_t cell_cap = kDefaultCellCap);

/// Reduced cellular chain complex of the polyhedral smash product Ẑ(K;(X,A)):
/// as above but no coordinate may be the basepoint, and boundary terms that
/// hit a basepoint coordinate are deleted. For k on 0 vertices this is the
/// zero complex.
F2ChainComplex smash_polyhedral_product_complex(const SimplicialComplex& k,
                                                const CellComplexPair& pair, int max_dim,
                                                std::size_t cell_cap = kDefaultCellCap);

/// One degreewise comparison row of a stable-splitting check.
struct DegreeComparison {
    int degree;
    long long lhs, rhs;
    bool ok() const { return lhs == rhs; }
};

/// Degreewise comparison of reduced Betti numbers of Z(k;pair) against the
/// sum over all ∅ ≠ I ⊆ [m] of reduced Betti numbers of Ẑ(k_I;pair).
struct BbcgReport {
    std::vector<DegreeComparison> rows;
    bool pass = true;
};

BbcgReport bbcg_check(const SimplicialComplex& k, const CellComplexPair& pair, int up_to,
                      std::size_t cell_cap = kDefaultCellCap);

/// Reduced Betti numbers of every smash summand Ẑ(C(Γ)_I;(M,S¹)).
struct SmashSummand {
    std::uint64_t subset_mask;
    bool is_clique;                    // I a face of C(Γ): the summand also occurs for (S¹,*)
    std::vector<long long> reduced;
};

std::vector<SmashSummand> smash_summands(const SimpleGraph& g, int up_to, MobiusModel model,
                                         std::size_t cell_cap = kDefaultCellCap);

/// Degreewise check that the classifying-space model of the adjoint group
/// dominates the Artin one: reduced Betti of Z(C(Γ);(M,S¹)) minus reduced
/// Betti of Z(C(Γ);(S¹,*)), which must be non-negative; the difference is
/// the contribution of the complementary stable summand.
struct SplittingReport {
    std::vector<long long> adjoint;    // reduced Betti, (M,S¹) model
    std::vector<long long> artin;      // reduced Betti, (S¹,*) model
    std::vector<long long> difference;
    bool pass = true;
};

SplittingReport splitting_report(const SimpleGraph& g, int up_to,
                                 MobiusModel model = MobiusModel::cw6,
                                 std::size_t cell_cap = kDefaultCellCap);

}  // namespace raq
