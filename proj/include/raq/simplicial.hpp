#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "raq/graph.hpp"

namespace raq {

/// Finite abstract simplicial complex on the ground set [m] = {1..m}, m <= 62.
///
/// Faces are stored as vertex bitmasks (bit i-1 for vertex i), closed under
/// subsets eagerly at construction. The empty face is always present, and so
/// is every singleton {i} for i in [m]: isolated ground-set vertices count as
/// faces of the complex.
class SimplicialComplex {
public:
    /// Complex on [m] generated by the given faces (vertex lists, 1-indexed).
    /// The subset closure, the empty face and all singletons are added.
    SimplicialComplex(int m, const std::vector<std::vector<int>>& generating_faces);

    /// Fast path for a face set already closed under subsets (still
    /// normalized by adding the empty face and all singletons).
    static SimplicialComplex from_closed_masks(int m, std::vector<std::uint64_t> masks);

    int vertex_count() const { return m_; }
    bool contains_mask(std::uint64_t face) const { return face_set_.count(face) > 0; }
    bool contains(const std::vector<int>& face) const;

    /// All faces as bitmasks, sorted by (cardinality, value). Deterministic.
    const std::vector<std::uint64_t>& face_masks() const { return faces_; }
    /// All faces as sorted vertex lists, in face_masks() order.
    std::vector<std::vector<int>> faces() const;

    /// Largest face cardinality minus one; -1 for the complex {∅} on m = 0.
    int dimension() const;

    bool operator==(const SimplicialComplex& other) const {
        return m_ == other.m_ && faces_ == other.faces_;
    }

private:
    SimplicialComplex() = default;
    void index_faces(std::vector<std::uint64_t> masks);

    int m_ = 0;
    std::vector<std::uint64_t> faces_;
    std::unordered_set<std::uint64_t> face_set_;
};

/// The flag complex whose faces are the cliques of g.
SimplicialComplex flag_complex(const SimpleGraph& g);

/// Full subcomplex on the nonempty vertex subset I: faces of k contained in
/// I, re-indexed over the ground set I by the order-preserving bijection.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& I);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::uint64_t I_mask);

/// Link of v: {σ : v ∉ σ, σ ∪ {v} ∈ k}, on the re-indexed vertex set
/// {u : {u,v} ∈ k}.
SimplicialComplex link(const SimplicialComplex& k, int v);

/// Deletion of v: faces not containing v, on the re-indexed set [m] \ {v}.
SimplicialComplex deletion(const SimplicialComplex& k, int v);

/// The 1-skeleton of k as a graph on [m].
SimpleGraph one_skeleton(const SimplicialComplex& k);

/// True iff every set of pairwise-adjacent vertices is a face, i.e.
/// k = flag_complex(one_skeleton(k)).
bool is_flag(const SimplicialComplex& k);

/// Vertices of a mask as a sorted 1-indexed list.
std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<int>& vertices, int m);

}  // namespace raq
