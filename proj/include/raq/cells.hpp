#pragma once

#include <string>
#include <vector>

namespace raq {

struct Cell {
    int dim = 0;
    bool in_A = false;
    bool is_basepoint = false;
    std::string name;
};

/// Finite CW pair (X, A) with mod-2 boundary data. Boundary lists store the
/// cells appearing with odd multiplicity only. Validated at construction:
/// boundaries drop dimension by exactly one, ∂∂ = 0 over F₂, the A-cells
/// form a subcomplex, and there is exactly one basepoint 0-cell, inside A.
class CellComplexPair {
public:
    CellComplexPair(std::vector<Cell> cells, std::vector<std::vector<int>> boundary);

    int cell_count() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& boundary(int id) const {
        return boundary_[static_cast<std::size_t>(id)];
    }
    int basepoint() const { return basepoint_; }
    int max_dim() const { return max_dim_; }

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> boundary_;
    int basepoint_ = -1;
    int max_dim_ = 0;
};

/// (S¹, *): one 0-cell (the basepoint, in A) and one free 1-cell.
CellComplexPair model_circle_pair();

/// (ℝP^N, *): the standard minimal structure, one cell per dimension 0..N;
/// every mod-2 boundary vanishes. A = {0-cell}.
CellComplexPair model_rp_pair(int N);

enum class MobiusModel { cw6, simplicial20 };

/// (M, S¹): the Möbius band with its boundary circle as A.
///
/// cw6 is the mapping-cylinder structure of the degree-2 cover of S¹:
/// 0-cells v (basepoint, boundary) and w (core); 1-cells b (boundary loop,
/// in A), a (core loop), c (v → w); one 2-cell attached along b·c·a⁻²·c⁻¹,
/// so its mod-2 boundary is b.
///
/// simplicial20 is the minimal 5-vertex triangulation with triangles
/// {i, i+1, i+2} mod 5; the boundary circle is the 5-cycle of chords
/// {i, i+2}.
CellComplexPair model_mobius_pair(MobiusModel kind);

}  // namespace raq
