#include "raq/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace raq {

F2ChainComplex::F2ChainComplex(std::vector<std::size_t> sizes, std::vector<F2Matrix> boundaries)
    : sizes_(std::move(sizes)), boundaries_(std::move(boundaries)) {
    if (sizes_.empty()) sizes_.push_back(0);
    if (boundaries_.size() != sizes_.size() - 1)
        throw std::invalid_argument("F2ChainComplex: need one boundary matrix per degree >= 1");
    for (std::size_t d = 1; d < sizes_.size(); ++d) {
        const auto& m = boundaries_[d - 1];
        if (m.rows() != sizes_[d] || m.cols() != sizes_[d - 1])
            throw std::invalid_argument("F2ChainComplex: boundary matrix shape mismatch");
    }
    // ∂∂ = 0, asserted at build time.
    for (std::size_t d = 2; d < sizes_.size(); ++d) {
        const auto& hi = boundaries_[d - 1];
        const auto& lo = boundaries_[d - 2];
        for (std::size_t r = 0; r < hi.rows(); ++r) {
            F2Row acc(f2_words(lo.cols()), 0);
            const F2Row& row = hi.row(r);
            for (std::size_t w = 0; w < row.size(); ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    f2_xor(acc, lo.row(c));
                }
            }
            if (!f2_is_zero(acc))
                throw std::logic_error("F2ChainComplex: ∂∂ ≠ 0 in degree " + std::to_string(d));
        }
    }
}

std::size_t F2ChainComplex::boundary_rank(int d) const {
    if (d < 1 || d > max_degree()) return 0;
    return boundary(d).rank();
}

std::vector<long long> betti(const F2ChainComplex& c, int up_to) {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 2, 0);
    for (int d = 1; d <= up_to + 1; ++d) rank[static_cast<std::size_t>(d)] = c.boundary_rank(d);
    for (int d = 0; d <= up_to; ++d) {
        long long b = static_cast<long long>(c.basis_size(d)) -
                      static_cast<long long>(rank[static_cast<std::size_t>(d)]) -
                      static_cast<long long>(rank[static_cast<std::size_t>(d) + 1]);
        out.push_back(b);
    }
    return out;
}

std::vector<long long> reduced_betti(const F2ChainComplex& c, int up_to) {
    auto b = betti(c, up_to);
    if (c.basis_size(0) > 0) b[0] -= 1;
    return b;
}

namespace {

struct ProductBasis {
    // Per degree: packed tuples, sorted; index lookup.
    std::vector<std::vector<std::uint64_t>> tuples;
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;
    int bits_per_coord = 0;
};

// Enumerate product cells (tuples of one cell per coordinate) of total
// dimension <= max_dim whose support lies in k; smash mode additionally
// excludes the basepoint from every coordinate.
ProductBasis enumerate_product_cells(const SimplicialComplex& k, const CellComplexPair& pair,
                                     int max_dim, bool smash, std::size_t cell_cap) {
    int m = k.vertex_count();
    int bits =
        std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(pair.cell_count() - 1))));
    if (m * bits > 64)
        throw std::invalid_argument("polyhedral product: too many coordinates to pack (" +
                                    std::to_string(m) + " coordinates × " +
                                    std::to_string(bits) + " bits)");
    ProductBasis basis;
    basis.bits_per_coord = bits;
    basis.tuples.resize(static_cast<std::size_t>(max_dim) + 1);

    std::size_t total = 0;

    // DFS over coordinates. Partial supports of faces are faces, so the
    // support-in-k test prunes exactly.
    auto rec = [&](auto&& self, int i, std::uint64_t key, std::uint64_t support,
                   int dim) -> void {
        if (i == m) {
            basis.tuples[static_cast<std::size_t>(dim)].push_back(key);
            if (++total > cell_cap)
                throw CellCapExceeded("polyhedral product exceeds cell cap of " +
                                      std::to_string(cell_cap));
            return;
        }
        for (int c = 0; c < pair.cell_count(); ++c) {
            const Cell& cell = pair.cell(c);
            if (smash && cell.is_basepoint) continue;
            if (dim + cell.dim > max_dim) continue;
            std::uint64_t sup = support;
            if (!cell.in_A) {
                sup |= std::uint64_t{1} << i;
                if (!k.contains_mask(sup)) continue;
            }
            self(self, i + 1, key | (static_cast<std::uint64_t>(c) << (i * bits)), sup,
                 dim + cell.dim);
        }
    };
    if (m == 0 && !smash) basis.tuples[0].push_back(0);
    if (m > 0) rec(rec, 0, 0, 0, 0);

    basis.index.resize(basis.tuples.size());
    for (std::size_t d = 0; d < basis.tuples.size(); ++d) {
        auto& list = basis.tuples[d];
        std::sort(list.begin(), list.end());
        basis.index[d].reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) basis.index[d].emplace(list[i], i);
    }
    return basis;
}

F2ChainComplex build_product_complex(const SimplicialComplex& k, const CellComplexPair& pair,
                                     int max_dim, bool smash, std::size_t cell_cap) {
    if (max_dim < 0) throw std::invalid_argument("polyhedral product: negative degree cap");
    auto basis = enumerate_product_cells(k, pair, max_dim, smash, cell_cap);
    int m = k.vertex_count();
    int bits = basis.bits_per_coord;
    std::uint64_t coord_mask = (bits == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;

    std::vector<std::size_t> sizes;
    for (const auto& list : basis.tuples) sizes.push_back(list.size());

    std::vector<F2Matrix> boundaries;
    for (int d = 1; d <= max_dim; ++d) {
        F2Matrix mat(sizes[static_cast<std::size_t>(d)], sizes[static_cast<std::size_t>(d) - 1]);
        const auto& rows = basis.tuples[static_cast<std::size_t>(d)];
        const auto& target = basis.index[static_cast<std::size_t>(d) - 1];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint64_t key = rows[r];
            for (int i = 0; i < m; ++i) {
                int c = static_cast<int>((key >> (i * bits)) & coord_mask);
                for (int t : pair.boundary(c)) {
                    if (smash && pair.cell(t).is_basepoint) continue;
                    std::uint64_t nk = (key & ~(coord_mask << (i * bits))) |
                                       (static_cast<std::uint64_t>(t) << (i * bits));
                    mat.flip(r, target.at(nk));
                }
            }
        }
        boundaries.push_back(std::move(mat));
    }
    return F2ChainComplex(std::move(sizes), std::move(boundaries));
}

}  // namespace

F2ChainComplex polyhedral_product_complex(const SimplicialComplex& k,
                                          const CellComplexPair& pair, int max_dim,
                                          std::size_t cell_cap) {
    return build_product_complex(k, pair, max_dim, false, cell_cap);
}

F2ChainComplex smash_polyhedral_product_complex(const SimplicialComplex& k,
                                                const CellComplexPair& pair, int max_dim,
                                                std::size_t cell_cap) {
    return build_product_complex(k, pair, max_dim, true, cell_cap);
}

BbcgReport bbcg_check(const SimplicialComplex& k, const CellComplexPair& pair, int up_to,
                      std::size_t cell_cap) {
    auto lhs = reduced_betti(polyhedral_product_complex(k, pair, up_to + 1, cell_cap), up_to);

    std::vector<long long> rhs(static_cast<std::size_t>(up_to) + 1, 0);
    int m = k.vertex_count();
    std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    for (std::uint64_t I = 1; I <= all && all; ++I) {
        auto sub = full_subcomplex(k, I);
        auto b = betti(smash_polyhedral_product_complex(sub, pair, up_to + 1, cell_cap), up_to);
        for (std::size_t d = 0; d < rhs.size(); ++d) rhs[d] += b[d];
    }

    BbcgReport report;
    for (int d = 0; d <= up_to; ++d) {
        report.rows.push_back({d, lhs[static_cast<std::size_t>(d)],
                               rhs[static_cast<std::size_t>(d)]});
        report.pass = report.pass && report.rows.back().ok();
    }
    return report;
}

std::vector<SmashSummand> smash_summands(const SimpleGraph& g, int up_to, MobiusModel model,
                                         std::size_t cell_cap) {
    auto k = flag_complex(g);
    auto pair = model_mobius_pair(model);
    std::vector<SmashSummand> out;
    int m = g.vertex_count();
    std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    for (std::uint64_t I = 1; I <= all && all; ++I) {
        auto sub = full_subcomplex(k, I);
        auto b = betti(smash_polyhedral_product_complex(sub, pair, up_to + 1, cell_cap), up_to);
        out.push_back({I, k.contains_mask(I), std::move(b)});
    }
    return out;
}

SplittingReport splitting_report(const SimpleGraph& g, int up_to, MobiusModel model,
                                 std::size_t cell_cap) {
    auto k = flag_complex(g);
    SplittingReport report;
    report.adjoint = reduced_betti(
        polyhedral_product_complex(k, model_mobius_pair(model), up_to + 1, cell_cap), up_to);
    report.artin = reduced_betti(
        polyhedral_product_complex(k, model_circle_pair(), up_to + 1, cell_cap), up_to);
    for (std::size_t d = 0; d < report.adjoint.size(); ++d) {
        report.difference.push_back(report.adjoint[d] - report.artin[d]);
        if (report.difference.back() < 0) report.pass = false;
    }
    return report;
}

}  // namespace raq
