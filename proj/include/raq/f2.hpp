#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace raq {

/// Bit-packed row vector over GF(2).
using F2Row = std::vector<std::uint64_t>;

inline std::size_t f2_words(std::size_t cols) { return (cols + 63) / 64; }

inline bool f2_get(const F2Row& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1; }
inline void f2_flip(F2Row& row, std::size_t c) { row[c / 64] ^= std::uint64_t{1} << (c % 64); }

void f2_xor(F2Row& dst, const F2Row& src);
bool f2_is_zero(const F2Row& row);
/// Index of the lowest set bit, or SIZE_MAX if the row is zero.
std::size_t f2_first_set(const F2Row& row);

/// Dense bit-packed matrix over GF(2), stored row-major.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, F2Row(f2_words(cols), 0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return f2_get(data_[r], c); }
    void flip(std::size_t r, std::size_t c) { f2_flip(data_[r], c); }
    const F2Row& row(std::size_t r) const { return data_[r]; }
    F2Row& row(std::size_t r) { return data_[r]; }

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Row> data_;
};

/// A row space maintained in reduced echelon form. Deterministic given the
/// insertion order: pivots are lowest set bits, and every stored row is
/// fully reduced against every pivot.
class F2RowSpace {
public:
    explicit F2RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduce row against the space in place; afterwards row is the
    /// canonical coset representative of row + span(space).
    void reduce(F2Row& row) const;

    /// Reduce then insert if independent. Returns true if dim grew.
    bool insert(F2Row row);

    /// True iff row lies in the span.
    bool contains(F2Row row) const;

    const std::vector<F2Row>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<F2Row> rows_;     // kept sorted by pivot
    std::vector<std::size_t> pivots_;
};

/// Basis of { a ∈ GF(2)^rows : Σ_{r : a_r = 1} row_r = 0 }, i.e. the kernel
/// of the row-combination map. Deterministic.
std::vector<F2Row> left_kernel(const F2Matrix& m);

}  // namespace raq
