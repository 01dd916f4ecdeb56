#include "raq/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace raq {

CellComplexPair::CellComplexPair(std::vector<Cell> cells, std::vector<std::vector<int>> boundary)
    : cells_(std::move(cells)), boundary_(std::move(boundary)) {
    int n = cell_count();
    if (boundary_.size() != cells_.size())
        throw std::invalid_argument("CellComplexPair: boundary list size mismatch");

    for (int id = 0; id < n; ++id) {
        auto& b = boundary_[static_cast<std::size_t>(id)];
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("CellComplexPair: repeated boundary cell (store odd "
                                        "multiplicities only)");
        const Cell& c = cells_[static_cast<std::size_t>(id)];
        max_dim_ = std::max(max_dim_, c.dim);
        if (c.dim == 0 && !b.empty())
            throw std::invalid_argument("CellComplexPair: 0-cell with nonempty boundary");
        for (int t : b) {
            if (t < 0 || t >= n) throw std::invalid_argument("CellComplexPair: bad boundary id");
            if (cells_[static_cast<std::size_t>(t)].dim != c.dim - 1)
                throw std::invalid_argument(
                    "CellComplexPair: boundary must drop dimension by one");
            if (c.in_A && !cells_[static_cast<std::size_t>(t)].in_A)
                throw std::invalid_argument("CellComplexPair: A is not a subcomplex");
        }
        if (c.is_basepoint) {
            if (c.dim != 0 || !c.in_A)
                throw std::invalid_argument("CellComplexPair: basepoint must be a 0-cell in A");
            if (basepoint_ != -1)
                throw std::invalid_argument("CellComplexPair: more than one basepoint");
            basepoint_ = id;
        }
    }
    if (basepoint_ == -1) throw std::invalid_argument("CellComplexPair: no basepoint cell");

    // ∂∂ = 0 over F₂.
    for (int id = 0; id < n; ++id) {
        std::set<int> dd;
        for (int t : boundary_[static_cast<std::size_t>(id)])
            for (int u : boundary_[static_cast<std::size_t>(t)]) {
                auto [it, inserted] = dd.insert(u);
                if (!inserted) dd.erase(it);
            }
        if (!dd.empty())
            throw std::invalid_argument("CellComplexPair: ∂∂ ≠ 0 at cell " +
                                        cells_[static_cast<std::size_t>(id)].name);
    }
}

CellComplexPair model_circle_pair() {
    std::vector<Cell> cells{{0, true, true, "v"}, {1, false, false, "e"}};
    return CellComplexPair(std::move(cells), {{}, {}});
}

CellComplexPair model_rp_pair(int N) {
    if (N < 1) throw std::invalid_argument("model_rp_pair: need N >= 1");
    std::vector<Cell> cells;
    std::vector<std::vector<int>> boundary;
    for (int d = 0; d <= N; ++d) {
        cells.push_back({d, d == 0, d == 0, "c" + std::to_string(d)});
        boundary.push_back({});  // ∂c_d = (1 + (-1)^d) c_{d-1} ≡ 0 mod 2
    }
    return CellComplexPair(std::move(cells), std::move(boundary));
}

namespace {

CellComplexPair mobius_cw6() {
    std::vector<Cell> cells{
        {0, true, true, "v"},  {0, false, false, "w"}, {1, true, false, "b"},
        {1, false, false, "a"}, {1, false, false, "c"}, {2, false, false, "F"},
    };
    std::vector<std::vector<int>> boundary{
        {}, {}, {}, {}, {0, 1} /* c: v → w */, {2} /* F: attaching word b·c·a⁻²·c⁻¹ */,
    };
    return CellComplexPair(std::move(cells), std::move(boundary));
}

CellComplexPair mobius_simplicial20() {
    auto mod5 = [](int i) { return (i - 1) % 5 + 1; };
    std::vector<Cell> cells;
    std::vector<std::vector<int>> boundary;
    std::map<std::pair<int, int>, int> edge_id;

    for (int i = 1; i <= 5; ++i) {
        cells.push_back({0, true, i == 1, "v" + std::to_string(i)});
        boundary.push_back({});
    }
    // Boundary circle: the 5-cycle of chords {i, i+2}. Interior: {i, i+1}.
    auto add_edge = [&](int i, int j, bool in_A) {
        auto key = std::minmax(i, j);
        edge_id[key] = static_cast<int>(cells.size());
        cells.push_back({1, in_A, false,
                         "e" + std::to_string(key.first) + std::to_string(key.second)});
        boundary.push_back({key.first - 1, key.second - 1});
    };
    for (int i = 1; i <= 5; ++i) add_edge(i, mod5(i + 1), false);
    for (int i = 1; i <= 5; ++i) add_edge(i, mod5(i + 2), true);

    for (int i = 1; i <= 5; ++i) {
        int a = i, b = mod5(i + 1), c = mod5(i + 2);
        cells.push_back({2, false, false,
                         "t" + std::to_string(a) + std::to_string(b) + std::to_string(c)});
        boundary.push_back({edge_id[std::minmax(a, b)], edge_id[std::minmax(b, c)],
                            edge_id[std::minmax(a, c)]});
    }
    return CellComplexPair(std::move(cells), std::move(boundary));
}

}  // namespace

CellComplexPair model_mobius_pair(MobiusModel kind) {
    return kind == MobiusModel::cw6 ? mobius_cw6() : mobius_simplicial20();
}

}  // namespace raq
