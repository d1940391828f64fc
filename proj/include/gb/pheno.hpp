#pragma once

#include <random>

#include "gb/css_code.hpp"

namespace gb {

// CSS data for N rounds of noisy X-generator measurement. Columns hold all
// per-round data errors first, then the per-round syndrome errors of rounds
// 0..N-2 (the last round is measured without error).
struct SpacetimeCode {
    BinMatrix h;  // (N r) x (N n + (N-1) r): detector check matrix
    BinMatrix g;  // degeneracy generators
    BinMatrix l;  // k observables
    std::size_t n_rounds = 0;
    std::size_t n_data = 0;    // qubits per round
    std::size_t n_checks = 0;  // measured checks per round (after row removal)

    std::size_t cols() const { return h.cols(); }
    std::size_t data_col(std::size_t round, std::size_t qubit) const {
        return round * n_data + qubit;
    }
    std::size_t synd_col(std::size_t round, std::size_t check) const {
        return n_rounds * n_data + round * n_checks + check;
    }

    enum class ColKind { data, syndrome };
    std::pair<std::size_t, ColKind> column_round(std::size_t col) const;
};

SpacetimeCode build_spacetime(const CssCode& code, std::size_t n_rounds);

// iid data flips with probability p, syndrome flips (rounds 0..N-2) with q.
BinVec sample_error(const SpacetimeCode& st, double p, double q, std::mt19937_64& rng);

BinVec detectors(const SpacetimeCode& st, const BinVec& e);    // e H^T
BinVec observables(const SpacetimeCode& st, const BinVec& e);  // e L^T

}  // namespace gb
