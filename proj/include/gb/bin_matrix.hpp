#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gb {

// Dense GF(2) vector, bit-packed little-endian into 64-bit words.
class BinVec {
public:
    BinVec() = default;
    explicit BinVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear();
    bool any() const;
    std::size_t weight() const;
    void xor_with(const BinVec& o);

    std::vector<std::size_t> support() const;

    std::span<std::uint64_t> words() { return w_; }
    std::span<const std::uint64_t> words() const { return w_; }

    bool operator==(const BinVec&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense GF(2) matrix, row-major bit-packed rows. Words beyond `cols` stay zero.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols);

    static BinMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (j & 63);
        if (v)
            w_[i * wpr_ + (j >> 6)] |= mask;
        else
            w_[i * wpr_ + (j >> 6)] &= ~mask;
    }
    void flip(std::size_t i, std::size_t j) {
        w_[i * wpr_ + (j >> 6)] ^= std::uint64_t(1) << (j & 63);
    }

    std::span<std::uint64_t> row(std::size_t i) { return {w_.data() + i * wpr_, wpr_}; }
    std::span<const std::uint64_t> row(std::size_t i) const {
        return {w_.data() + i * wpr_, wpr_};
    }

    void row_xor(std::size_t dst, std::size_t src);  // row dst ^= row src
    void row_swap(std::size_t a, std::size_t b);
    std::size_t row_weight(std::size_t i) const;
    std::vector<std::size_t> row_support(std::size_t i) const;

    BinVec row_vec(std::size_t i) const;
    void set_row(std::size_t i, const BinVec& v);

    BinMatrix transpose() const;
    BinMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;
    BinMatrix take_rows(std::span<const std::size_t> row_idx) const;

    bool is_zero() const;
    bool operator==(const BinMatrix&) const = default;

    std::string to_string() const;  // '0'/'1' grid, one row per line

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b);
BinMatrix kron(const BinMatrix& a, const BinMatrix& b);
BinMatrix hstack(const BinMatrix& a, const BinMatrix& b);
BinMatrix vstack(const BinMatrix& a, const BinMatrix& b);

// m * v over GF(2); result has one bit per row of m.
BinVec mat_vec(const BinMatrix& m, const BinVec& v);

struct RankKernels {
    std::size_t rank = 0;
    BinMatrix right_kernel;  // (cols - rank) x cols, full row rank, M k^T = 0
    BinMatrix left_kernel;   // (rows - rank) x rows, full row rank, k M = 0
};

// Gaussian elimination with deterministic first-nonzero-column pivoting.
RankKernels rank_and_kernels(const BinMatrix& m);
std::size_t rank_of(const BinMatrix& m);

// Cached RREF for row-space membership tests.
class RowBasis {
public:
    RowBasis() = default;
    explicit RowBasis(const BinMatrix& m);
    std::size_t rank() const { return pivots_.size(); }
    BinVec reduce(BinVec v) const;
    bool contains(const BinVec& v) const { return !reduce(v).any(); }

private:
    BinMatrix rref_;
    std::vector<std::size_t> pivots_;
};

// Full row reduction of [h | rhs] choosing pivot columns in the given order.
struct OrderedEchelon {
    BinMatrix reduced;                    // RREF of h under the column order
    BinVec rhs;                           // rhs carried through the row ops
    std::vector<std::size_t> pivot_cols;  // column of the i-th pivot
    std::vector<std::size_t> pivot_rows;  // row of the i-th pivot (== i)
    bool consistent = true;               // rhs vanishes on zero rows
};
OrderedEchelon echelon_solve(const BinMatrix& h, const BinVec& rhs,
                             std::span<const std::size_t> col_order);

}  // namespace gb
