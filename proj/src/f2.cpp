#include "raq/f2.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <limits>

namespace raq {

void f2_xor(F2Row& dst, const F2Row& src) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

bool f2_is_zero(const F2Row& row) {
    for (std::uint64_t w : row)
        if (w) return false;
    return true;
}

std::size_t f2_first_set(const F2Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(row[i]));
    return std::numeric_limits<std::size_t>::max();
}

std::size_t F2Matrix::rank() const {
    F2RowSpace space(cols_);
    for (const auto& r : data_) space.insert(r);
    return space.dim();
}

void F2RowSpace::reduce(F2Row& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (f2_get(row, pivots_[i])) f2_xor(row, rows_[i]);
}

bool F2RowSpace::insert(F2Row row) {
    reduce(row);
    std::size_t pivot = f2_first_set(row);
    if (pivot == std::numeric_limits<std::size_t>::max()) return false;
    // Back-substitute so existing rows stay reduced against the new pivot.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (f2_get(rows_[i], pivot)) f2_xor(rows_[i], row);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

bool F2RowSpace::contains(F2Row row) const {
    reduce(row);
    return f2_is_zero(row);
}

std::vector<F2Row> left_kernel(const F2Matrix& m) {
    std::size_t combo_words = f2_words(m.rows());
    // Pairs (reduced row, combination) in echelon order of the reduced rows.
    std::vector<F2Row> ech, combos;
    std::vector<std::size_t> pivots;
    std::vector<F2Row> kernel;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        F2Row v = m.row(r);
        F2Row c(combo_words, 0);
        f2_flip(c, r);
        for (std::size_t i = 0; i < ech.size(); ++i) {
            if (f2_get(v, pivots[i])) {
                f2_xor(v, ech[i]);
                f2_xor(c, combos[i]);
            }
        }
        std::size_t pivot = f2_first_set(v);
        if (pivot == std::numeric_limits<std::size_t>::max()) {
            kernel.push_back(std::move(c));
        } else {
            ech.push_back(std::move(v));
            combos.push_back(std::move(c));
            pivots.push_back(pivot);
        }
    }
    return kernel;
}

}  // namespace raq
