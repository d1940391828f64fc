#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gb/analysis.hpp"
#include "gb/pheno.hpp"

using namespace gb;

namespace {

CssCode gb15() {
    return build_css(GroupSpec{15, 1}, BinPoly::univariate({0, 6, 13}),
                     BinPoly::univariate({0, 1, 4}));
}

}  // namespace

TEST_CASE("spacetime dimensions for l=15, N=6") {
    auto st = build_spacetime(gb15(), 6);
    CHECK(st.h.rows() == 90);
    CHECK(st.h.cols() == 255);
    CHECK(st.g.cols() == 255);
    CHECK(st.l.rows() == 8);
}

TEST_CASE("a single round reduces to the code itself") {
    auto code = gb15();
    auto st = build_spacetime(code, 1);
    CHECK(st.h == code.hx);
    CHECK_THROWS(build_spacetime(code, 0));
}

TEST_CASE("spacetime code keeps the dimension and distance of the base code") {
    auto code = gb15();
    auto st = build_spacetime(code, 6);
    CHECK(mat_mul(st.h, st.g.transpose()).is_zero());
    std::size_t k = st.cols() - rank_of(st.h) - rank_of(st.g);
    CHECK(k == 8);
    CHECK(rank_of(vstack(st.h, st.l)) == rank_of(st.h) + 8);
    auto d = min_distance_exhaustive(st.h, st.g, 4);
    REQUIRE(d.distance.has_value());
    CHECK(*d.distance == 4);
}

TEST_CASE("orthogonality holds with removed rows and several N") {
    auto code = gb15();
    for (std::size_t m : {std::size_t(0), std::size_t(2), std::size_t(4)}) {
        auto cut = drop_redundant_rows(code, m);
        for (std::size_t N : {std::size_t(1), std::size_t(2), std::size_t(6)}) {
            auto st = build_spacetime(cut, N);
            CHECK(mat_mul(st.h, st.g.transpose()).is_zero());
            CHECK(mat_mul(st.l, st.g.transpose()).is_zero());
        }
    }
}

TEST_CASE("sampling edge cases") {
    auto st = build_spacetime(gb15(), 3);
    std::mt19937_64 rng(1);
    auto zero = sample_error(st, 0.0, 0.0, rng);
    CHECK_FALSE(zero.any());

    auto all_data = sample_error(st, 1.0, 0.0, rng);
    CHECK(all_data.weight() == st.n_rounds * st.n_data);
    for (std::size_t t = 0; t + 1 < st.n_rounds; ++t)
        for (std::size_t i = 0; i < st.n_checks; ++i) CHECK_FALSE(all_data.get(st.synd_col(t, i)));
}

TEST_CASE("sample mean weight sits inside 3 sigma of the binomial") {
    auto st = build_spacetime(gb15(), 2);
    const double p = 0.05, q = 0.02;
    const std::size_t shots = 100000;
    std::mt19937_64 rng(7);
    double total = 0;
    for (std::size_t s = 0; s < shots; ++s) total += double(sample_error(st, p, q, rng).weight());
    const double nd = double(st.n_rounds * st.n_data);
    const double ns = double((st.n_rounds - 1) * st.n_checks);
    const double mean = nd * p + ns * q;
    const double var = (nd * p * (1 - p) + ns * q * (1 - q)) / double(shots);
    CHECK(std::abs(total / double(shots) - mean) < 3 * std::sqrt(var));
}

TEST_CASE("detector pattern of single errors") {
    auto code = gb15();
    auto st = build_spacetime(code, 4);
    // data error in round t triggers only round-t checks, one column of Hx
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t qb : {std::size_t(0), std::size_t(17)}) {
            BinVec e(st.cols());
            e.set(st.data_col(t, qb), true);
            auto sig = detectors(st, e);
            CHECK(sig.weight() == 3);
            for (auto row : sig.support()) CHECK(row / st.n_checks == t);
        }
    // measurement error in round t < N-1 triggers the same check in t and t+1
    for (std::size_t t = 0; t + 1 < 4; ++t) {
        BinVec e(st.cols());
        e.set(st.synd_col(t, 5), true);
        auto sig = detectors(st, e);
        auto sup = sig.support();
        REQUIRE(sup.size() == 2);
        CHECK(sup[0] == t * st.n_checks + 5);
        CHECK(sup[1] == (t + 1) * st.n_checks + 5);
    }
}

TEST_CASE("observables ignore syndrome errors and degeneracy") {
    auto st = build_spacetime(gb15(), 4);
    BinVec e(st.cols());
    e.set(st.synd_col(1, 3), true);
    CHECK_FALSE(observables(st, e).any());

    // identical data error in two rounds cancels
    BinVec e2(st.cols());
    e2.set(st.data_col(0, 9), true);
    e2.set(st.data_col(1, 9), true);
    CHECK_FALSE(observables(st, e2).any());

    // rows of G never flip an observable and never trigger a detector
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        BinVec comb(st.cols());
        for (std::size_t i = 0; i < st.g.rows(); ++i)
            if (rng() & 1) comb.xor_with(st.g.row_vec(i));
        CHECK_FALSE(observables(st, comb).any());
        CHECK_FALSE(detectors(st, comb).any());
    }
}

TEST_CASE("detectors and observables are invariant under adding G rows") {
    auto st = build_spacetime(gb15(), 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto e = sample_error(st, 0.05, 0.05, rng);
        BinVec g(st.cols());
        for (std::size_t i = 0; i < st.g.rows(); ++i)
            if (rng() & 1) g.xor_with(st.g.row_vec(i));
        BinVec eg = e;
        eg.xor_with(g);
        CHECK(detectors(st, eg) == detectors(st, e));
        CHECK(observables(st, eg) == observables(st, e));
    }
}

TEST_CASE("noiseless-measurement differences are valid syndromes") {
    auto code = gb15();
    auto st = build_spacetime(code, 4);
    auto [mx, mz] = metacheck_matrices(code);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto e = sample_error(st, 0.1, 0.0, rng);
        auto sig = detectors(st, e);
        for (std::size_t t = 0; t < st.n_rounds; ++t) {
            BinVec round_sig(st.n_checks);
            for (std::size_t i = 0; i < st.n_checks; ++i)
                round_sig.set(i, sig.get(t * st.n_checks + i));
            CHECK_FALSE(mat_vec(mx, round_sig).any());
        }
    }
}
