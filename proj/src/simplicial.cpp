#include "raq/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace raq {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vertices, int m) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 1 || v > m)
            throw std::out_of_range("face vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(m));
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (mask & bit) throw std::invalid_argument("repeated vertex in face");
        mask |= bit;
    }
    return mask;
}

void SimplicialComplex::index_faces(std::vector<std::uint64_t> masks) {
    // Normalization: ∅ and all singletons are faces.
    masks.push_back(0);
    for (int v = 1; v <= m_; ++v) masks.push_back(std::uint64_t{1} << (v - 1));
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    faces_ = std::move(masks);
    face_set_.insert(faces_.begin(), faces_.end());
}

SimplicialComplex::SimplicialComplex(int m, const std::vector<std::vector<int>>& generating_faces) {
    if (m < 0 || m > 62)
        throw std::invalid_argument("SimplicialComplex: ground set size must be in 0..62");
    m_ = m;
    std::unordered_set<std::uint64_t> closed;
    for (const auto& face : generating_faces) {
        std::uint64_t top = vertices_to_mask(face, m);
        // Enumerate all subsets of top.
        std::uint64_t sub = top;
        while (true) {
            closed.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & top;
        }
    }
    index_faces({closed.begin(), closed.end()});
}

SimplicialComplex SimplicialComplex::from_closed_masks(int m, std::vector<std::uint64_t> masks) {
    if (m < 0 || m > 62)
        throw std::invalid_argument("SimplicialComplex: ground set size must be in 0..62");
    SimplicialComplex k;
    k.m_ = m;
    std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    for (std::uint64_t f : masks)
        if (f & ~all) throw std::out_of_range("face mask outside ground set");
    k.index_faces(std::move(masks));
    return k;
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
    return contains_mask(vertices_to_mask(face, m_));
}

std::vector<std::vector<int>> SimplicialComplex::faces() const {
    std::vector<std::vector<int>> out;
    out.reserve(faces_.size());
    for (std::uint64_t f : faces_) out.push_back(mask_to_vertices(f));
    return out;
}

int SimplicialComplex::dimension() const {
    // faces_ is sorted by cardinality, so the top face is last.
    return std::popcount(faces_.back()) - 1;
}

namespace {

void collect_cliques(const SimpleGraph& g, std::uint64_t clique, std::uint64_t candidates,
                     std::vector<std::uint64_t>& out) {
    out.push_back(clique);
    std::uint64_t rest = candidates;
    while (rest) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        collect_cliques(g, clique | (std::uint64_t{1} << (v - 1)),
                        candidates & g.neighbor_mask(v) & ~((std::uint64_t{2} << (v - 1)) - 1),
                        out);
    }
}

}  // namespace

SimplicialComplex flag_complex(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("flag_complex: graph too large for face masks");
    std::vector<std::uint64_t> cliques;
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    collect_cliques(g, 0, all, cliques);
    return SimplicialComplex::from_closed_masks(n, std::move(cliques));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::uint64_t I_mask) {
    if (I_mask == 0) throw std::invalid_argument("full_subcomplex: empty vertex subset");
    std::uint64_t all = k.vertex_count() == 0 ? 0 : (std::uint64_t{1} << k.vertex_count()) - 1;
    if (I_mask & ~all) throw std::out_of_range("full_subcomplex: subset outside ground set");

    // Order-preserving re-index: old vertex (bit b) -> rank of b within I_mask.
    std::vector<std::uint64_t> faces;
    for (std::uint64_t f : k.face_masks()) {
        if (f & ~I_mask) continue;
        std::uint64_t re = 0;
        std::uint64_t rest = f;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            int rank = std::popcount(I_mask & ((std::uint64_t{1} << b) - 1));
            re |= std::uint64_t{1} << rank;
        }
        faces.push_back(re);
    }
    return SimplicialComplex::from_closed_masks(std::popcount(I_mask), std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& I) {
    return full_subcomplex(k, vertices_to_mask(I, k.vertex_count()));
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.vertex_count()) throw std::out_of_range("link: vertex out of range");
    std::uint64_t vbit = std::uint64_t{1} << (v - 1);
    // Vertex set of the link: neighbors of v in the 1-skeleton.
    std::uint64_t V = 0;
    for (std::uint64_t f : k.face_masks())
        if (std::popcount(f) == 2 && (f & vbit)) V |= f & ~vbit;

    std::vector<std::uint64_t> faces;
    for (std::uint64_t f : k.face_masks()) {
        if ((f & vbit) || (f & ~V)) continue;
        if (!k.contains_mask(f | vbit)) continue;
        std::uint64_t re = 0;
        std::uint64_t rest = f;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            re |= std::uint64_t{1} << std::popcount(V & ((std::uint64_t{1} << b) - 1));
        }
        faces.push_back(re);
    }
    return SimplicialComplex::from_closed_masks(std::popcount(V), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.vertex_count()) throw std::out_of_range("deletion: vertex out of range");
    if (k.vertex_count() == 1) return SimplicialComplex::from_closed_masks(0, {0});
    std::uint64_t all = (std::uint64_t{1} << k.vertex_count()) - 1;
    return full_subcomplex(k, all & ~(std::uint64_t{1} << (v - 1)));
}

SimpleGraph one_skeleton(const SimplicialComplex& k) {
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t f : k.face_masks()) {
        if (std::popcount(f) != 2) continue;
        auto vs = mask_to_vertices(f);
        edges.emplace_back(vs[0], vs[1]);
    }
    return SimpleGraph(k.vertex_count(), std::move(edges));
}

bool is_flag(const SimplicialComplex& k) { return k == flag_complex(one_skeleton(k)); }

}  // namespace raq
