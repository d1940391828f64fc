#include "gb/bin_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gb {

void BinVec::clear() { std::fill(w_.begin(), w_.end(), 0); }

bool BinVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

std::size_t BinVec::weight() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

void BinVec::xor_with(const BinVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BinVec::xor_with: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::vector<std::size_t> BinVec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t x = w_[wi];
        while (x) {
            s.push_back(wi * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return s;
}

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (rows > 0 && cols > 0 && rows > (std::size_t(1) << 40) / (wpr_ * 8 + 1))
        throw std::overflow_error("BinMatrix: storage limit exceeded");
    w_.assign(rows_ * wpr_, 0);
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BinMatrix::row_xor(std::size_t dst, std::size_t src) {
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BinMatrix::row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + a * wpr_, w_.begin() + (a + 1) * wpr_, w_.begin() + b * wpr_);
}

std::size_t BinMatrix::row_weight(std::size_t i) const {
    std::size_t c = 0;
    for (auto x : row(i)) c += std::popcount(x);
    return c;
}

std::vector<std::size_t> BinMatrix::row_support(std::size_t i) const {
    std::vector<std::size_t> s;
    auto r = row(i);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
        std::uint64_t x = r[wi];
        while (x) {
            s.push_back(wi * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return s;
}

BinVec BinMatrix::row_vec(std::size_t i) const {
    BinVec v(cols_);
    std::copy_n(w_.data() + i * wpr_, wpr_, v.words().data());
    return v;
}

void BinMatrix::set_row(std::size_t i, const BinVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BinMatrix::set_row: length mismatch");
    std::copy_n(v.words().data(), wpr_, w_.data() + i * wpr_);
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j : row_support(i)) t.set(j, i, true);
    return t;
}

BinMatrix BinMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
    std::vector<std::ptrdiff_t> col_map(cols_, -1);
    for (std::size_t j = 0; j < col_idx.size(); ++j) col_map[col_idx[j]] = std::ptrdiff_t(j);
    BinMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j : row_support(row_idx[i]))
            if (col_map[j] >= 0) s.set(i, std::size_t(col_map[j]), true);
    return s;
}

BinMatrix BinMatrix::take_rows(std::span<const std::size_t> row_idx) const {
    BinMatrix s(row_idx.size(), cols_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        std::copy_n(w_.data() + row_idx[i] * wpr_, wpr_, s.w_.data() + i * wpr_);
    return s;
}

bool BinMatrix::is_zero() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

std::string BinMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BinMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = c.row(i);
        for (std::size_t j : a.row_support(i)) {
            auto src = b.row(j);
            for (std::size_t wi = 0; wi < dst.size(); ++wi) dst[wi] ^= src[wi];
        }
    }
    return c;
}

BinMatrix kron(const BinMatrix& a, const BinMatrix& b) {
    BinMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j : a.row_support(i)) {
            for (std::size_t bi = 0; bi < b.rows(); ++bi)
                for (std::size_t bj : b.row_support(bi))
                    k.set(i * b.rows() + bi, j * b.cols() + bj, true);
        }
    }
    return k;
}

BinMatrix hstack(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    BinMatrix h(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j : a.row_support(i)) h.set(i, j, true);
        for (std::size_t j : b.row_support(i)) h.set(i, a.cols() + j, true);
    }
    return h;
}

BinMatrix vstack(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    BinMatrix v(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j : a.row_support(i)) v.set(i, j, true);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j : b.row_support(i)) v.set(a.rows() + i, j, true);
    return v;
}

BinVec mat_vec(const BinMatrix& m, const BinVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    BinVec out(m.rows());
    auto vw = v.words();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        std::uint64_t acc = 0;
        for (std::size_t wi = 0; wi < r.size(); ++wi) acc ^= r[wi] & vw[wi];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

RankKernels rank_and_kernels(const BinMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Augment with identity to track row operations: left kernel falls out.
    BinMatrix work = m;
    BinMatrix ops = BinMatrix::identity(rows);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (work.get(i, c)) {
                p = i;
                break;
            }
        if (p == rows) continue;
        work.row_swap(r, p);
        ops.row_swap(r, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && work.get(i, c)) {
                work.row_xor(i, r);
                ops.row_xor(i, r);
            }
        pivot_cols.push_back(c);
        ++r;
    }

    RankKernels out;
    out.rank = r;

    out.left_kernel = BinMatrix(rows - r, rows);
    for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            if (ops.get(i, j)) out.left_kernel.set(i - r, j, true);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    out.right_kernel = BinMatrix(cols - r, cols);
    std::size_t kr = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        out.right_kernel.set(kr, f, true);
        for (std::size_t pi = 0; pi < pivot_cols.size(); ++pi)
            if (work.get(pi, f)) out.right_kernel.set(kr, pivot_cols[pi], true);
        ++kr;
    }
    return out;
}

std::size_t rank_of(const BinMatrix& m) {
    BinMatrix work = m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (work.get(i, c)) {
                p = i;
                break;
            }
        if (p == rows) continue;
        work.row_swap(r, p);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (work.get(i, c)) work.row_xor(i, r);
        ++r;
    }
    return r;
}

RowBasis::RowBasis(const BinMatrix& m) {
    BinMatrix work = m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (work.get(i, c)) {
                p = i;
                break;
            }
        if (p == rows) continue;
        work.row_swap(r, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && work.get(i, c)) work.row_xor(i, r);
        pivots_.push_back(c);
        ++r;
    }
    std::vector<std::size_t> keep(r);
    std::iota(keep.begin(), keep.end(), 0);
    rref_ = work.take_rows(keep);
}

BinVec RowBasis::reduce(BinVec v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (v.get(pivots_[i])) {
            auto r = rref_.row(i);
            auto w = v.words();
            for (std::size_t wi = 0; wi < r.size(); ++wi) w[wi] ^= r[wi];
        }
    return v;
}

OrderedEchelon echelon_solve(const BinMatrix& h, const BinVec& rhs,
                             std::span<const std::size_t> col_order) {
    if (rhs.size() != h.rows()) throw std::invalid_argument("echelon_solve: rhs length mismatch");
    OrderedEchelon out;
    out.reduced = h;
    out.rhs = rhs;
    const std::size_t rows = h.rows();
    std::size_t r = 0;
    for (std::size_t c : col_order) {
        if (r == rows) break;
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (out.reduced.get(i, c)) {
                p = i;
                break;
            }
        if (p == rows) continue;
        out.reduced.row_swap(r, p);
        if (out.rhs.get(r) != out.rhs.get(p)) {
            out.rhs.flip(r);
            out.rhs.flip(p);
        }
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && out.reduced.get(i, c)) {
                out.reduced.row_xor(i, r);
                if (out.rhs.get(r)) out.rhs.flip(i);
            }
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(r);
        ++r;
    }
    out.consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (out.rhs.get(i)) {
            out.consistent = false;
            break;
        }
    return out;
}

}  // namespace gb
