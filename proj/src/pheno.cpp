#include "gb/pheno.hpp"

#include <stdexcept>

namespace gb {

std::pair<std::size_t, SpacetimeCode::ColKind> SpacetimeCode::column_round(
    std::size_t col) const {
    if (col < n_rounds * n_data) return {col / n_data, ColKind::data};
    std::size_t s = col - n_rounds * n_data;
    return {s / n_checks, ColKind::syndrome};
}

SpacetimeCode build_spacetime(const CssCode& code, std::size_t n_rounds) {
    if (n_rounds == 0) throw std::invalid_argument("build_spacetime: zero rounds");
    const std::size_t n = code.n();
    const std::size_t r = code.hx.rows();
    const std::size_t l = code.ell();
    const std::size_t N = n_rounds;

    SpacetimeCode st;
    st.n_rounds = N;
    st.n_data = n;
    st.n_checks = r;

    // H = ( I_N x Hx | R_N^T x I_r ): round t checks see the round-t data
    // error and the difference of adjacent measurement errors.
    st.h = BinMatrix(N * r, N * n + (N - 1) * r);
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t row = t * r + i;
            for (std::size_t j : code.hx.row_support(i)) st.h.set(row, st.data_col(t, j), true);
            if (t < N - 1) st.h.set(row, st.synd_col(t, i), true);
            if (t > 0) st.h.set(row, st.synd_col(t - 1, i), true);
        }

    // G rows: (i) a data error repeated in adjacent rounds plus the measurement
    // flips hiding it, (ii) Z stabilizers of the full code in each round.
    st.g = BinMatrix((N - 1) * n + N * l, st.h.cols());
    for (std::size_t t = 0; t + 1 < N; ++t)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t row = t * n + q;
            st.g.set(row, st.data_col(t, q), true);
            st.g.set(row, st.data_col(t + 1, q), true);
            for (std::size_t i = 0; i < r; ++i)
                if (code.hx.get(i, q)) st.g.set(row, st.synd_col(t, i), true);
        }
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t i = 0; i < l; ++i) {
            const std::size_t row = (N - 1) * n + t * l + i;
            for (std::size_t j : code.hz.row_support(i)) st.g.set(row, st.data_col(t, j), true);
        }

    // L = ( 1_N x Lx | 0 ): only the net accumulated data error matters.
    st.l = BinMatrix(code.k, st.h.cols());
    for (std::size_t i = 0; i < code.k; ++i)
        for (std::size_t j : code.lx.row_support(i))
            for (std::size_t t = 0; t < N; ++t) st.l.set(i, st.data_col(t, j), true);

    return st;
}

BinVec sample_error(const SpacetimeCode& st, double p, double q, std::mt19937_64& rng) {
    if (p < 0 || p > 1 || q < 0 || q > 1)
        throw std::invalid_argument("sample_error: probability out of range");
    BinVec e(st.cols());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t n_data_cols = st.n_rounds * st.n_data;
    for (std::size_t j = 0; j < n_data_cols; ++j)
        if (u(rng) < p) e.set(j, true);
    for (std::size_t j = n_data_cols; j < st.cols(); ++j)
        if (u(rng) < q) e.set(j, true);
    return e;
}

BinVec detectors(const SpacetimeCode& st, const BinVec& e) {
    if (e.size() != st.cols()) throw std::invalid_argument("detectors: length mismatch");
    return mat_vec(st.h, e);
}

BinVec observables(const SpacetimeCode& st, const BinVec& e) {
    if (e.size() != st.cols()) throw std::invalid_argument("observables: length mismatch");
    return mat_vec(st.l, e);
}

}  // namespace gb
