#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gb/bin_matrix.hpp"
#include "gb/bin_poly.hpp"

using namespace gb;

namespace {

BinMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    BinMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) m.set(i, j, true);
    return m;
}

BinPoly random_poly(int max_deg, std::size_t weight, std::mt19937_64& rng) {
    std::vector<Mono> m;
    std::uniform_int_distribution<int> d(0, max_deg);
    for (std::size_t i = 0; i < weight; ++i) m.push_back({d(rng), 0});
    return BinPoly(std::move(m));
}

// Schoolbook convolution over GF(2), reduced mod x^l - 1. Oracle for circulant products.
std::vector<int> naive_cyclic_mul(const BinPoly& p, const BinPoly& q, int l) {
    std::vector<int> out(l, 0);
    for (const auto& a : p.monomials())
        for (const auto& b : q.monomials()) out[(a.ex + b.ex) % l] ^= 1;
    return out;
}

// Independent elimination sweeping columns right-to-left. Oracle for rank.
std::size_t rank_rtl(BinMatrix m) {
    std::size_t r = 0;
    for (std::size_t cc = m.cols(); cc-- > 0 && r < m.rows();) {
        std::size_t p = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.get(i, cc)) {
                p = i;
                break;
            }
        if (p == m.rows()) continue;
        m.row_swap(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (m.get(i, cc)) m.row_xor(i, r);
        ++r;
    }
    return r;
}

// Long division on exponent vectors. Oracle for gcd divisibility.
bool divides_exactly(const BinPoly& g, const BinPoly& a) {
    std::vector<int> rem(std::max(a.max_ex(), g.max_ex()) + 1, 0);
    for (const auto& m : a.monomials()) rem[m.ex] ^= 1;
    int dg = g.max_ex();
    auto deg = [&]() {
        for (int i = int(rem.size()) - 1; i >= 0; --i)
            if (rem[i]) return i;
        return -1;
    };
    int dr = deg();
    while (dr >= dg) {
        for (const auto& m : g.monomials()) rem[m.ex + dr - dg] ^= 1;
        dr = deg();
    }
    return dr < 0;
}

}  // namespace

TEST_CASE("circulant of the constant polynomial is the identity") {
    CHECK(circulant(BinPoly::univariate({0}), 5) == BinMatrix::identity(5));
}

TEST_CASE("circulant row structure for 1+x+x^4 at l=15") {
    auto m = circulant(BinPoly::univariate({0, 1, 4}), 15);
    REQUIRE(m.rows() == 15);
    REQUIRE(m.cols() == 15);
    for (std::size_t i = 0; i < 15; ++i) CHECK(m.row_weight(i) == 3);
    CHECK(m.row_support(0) == std::vector<std::size_t>{0, 1, 4});
}

TEST_CASE("circulant rejects zero block size") {
    CHECK_THROWS(circulant(BinPoly::one(), 0));
}

TEST_CASE("circulant multiplication matches cyclic polynomial product") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        int l = 2 + int(rng() % 15);
        auto p = random_poly(l - 1, 1 + rng() % 4, rng);
        auto q = random_poly(l - 1, 1 + rng() % 4, rng);
        auto prod = mat_mul(circulant(p, l), circulant(q, l));
        auto oracle = naive_cyclic_mul(p, q, l);
        for (int e = 0; e < l; ++e) CHECK(prod.get(0, e) == (oracle[e] != 0));
        // circulant structure preserved under product
        for (int i = 0; i < l; ++i)
            for (int e = 0; e < l; ++e) CHECK(prod.get(i, (i + e) % l) == prod.get(0, e));
    }
}

TEST_CASE("circulants commute") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int l = 2 + int(rng() % 30);
        auto p = random_poly(l - 1, 1 + rng() % 5, rng);
        auto q = random_poly(l - 1, 1 + rng() % 5, rng);
        CHECK(mat_mul(circulant(p, l), circulant(q, l)) ==
              mat_mul(circulant(q, l), circulant(p, l)));
    }
}

TEST_CASE("kron with identity factors") {
    std::mt19937_64 rng(5);
    auto m = random_matrix(3, 4, rng);
    auto k = kron(BinMatrix::identity(2), m);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 8);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(k.get(i, j) == m.get(i, j));
            CHECK(k.get(3 + i, 4 + j) == m.get(i, j));
            CHECK_FALSE(k.get(i, 4 + j));
            CHECK_FALSE(k.get(3 + i, j));
        }

    BinMatrix r2(1, 2);
    r2.set(0, 0, true);
    r2.set(0, 1, true);
    auto k2 = kron(r2, BinMatrix::identity(1));
    REQUIRE(k2.rows() == 1);
    REQUIRE(k2.cols() == 2);
    CHECK(k2.get(0, 0));
    CHECK(k2.get(0, 1));
}

TEST_CASE("kron entries follow the index formula") {
    std::mt19937_64 rng(11);
    auto a = random_matrix(3, 3, rng);
    auto b = random_matrix(3, 3, rng);
    auto k = kron(a, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t u = 0; u < 3; ++u)
                for (std::size_t v = 0; v < 3; ++v)
                    CHECK(k.get(i * 3 + u, j * 3 + v) == (a.get(i, j) && b.get(u, v)));
}

TEST_CASE("kron is associative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(1 + rng() % 3, 1 + rng() % 3, rng);
        auto b = random_matrix(1 + rng() % 3, 1 + rng() % 3, rng);
        auto c = random_matrix(1 + rng() % 3, 1 + rng() % 3, rng);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("rank and kernels of the identity") {
    auto rk = rank_and_kernels(BinMatrix::identity(4));
    CHECK(rk.rank == 4);
    CHECK(rk.right_kernel.rows() == 0);
    CHECK(rk.left_kernel.rows() == 0);
}

TEST_CASE("rank agrees with an independent elimination order") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(6, 10, rng);
        CHECK(rank_of(m) == rank_rtl(m));
    }
}

TEST_CASE("rank is transpose invariant") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(1 + rng() % 12, 1 + rng() % 12, rng);
        CHECK(rank_of(m) == rank_of(m.transpose()));
    }
}

TEST_CASE("kernels annihilate and have the right dimensions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(2 + rng() % 10, 2 + rng() % 10, rng);
        auto rk = rank_and_kernels(m);
        CHECK(rk.right_kernel.rows() == m.cols() - rk.rank);
        CHECK(rk.left_kernel.rows() == m.rows() - rk.rank);
        for (std::size_t i = 0; i < rk.right_kernel.rows(); ++i)
            CHECK_FALSE(mat_vec(m, rk.right_kernel.row_vec(i)).any());
        if (rk.left_kernel.rows() > 0) CHECK(mat_mul(rk.left_kernel, m).is_zero());
        CHECK(rank_of(rk.right_kernel) == rk.right_kernel.rows());
        CHECK(rank_of(rk.left_kernel) == rk.left_kernel.rows());
    }
}

TEST_CASE("gcd collapses repeated factors over GF(2)") {
    auto g = poly_gcd({BinPoly::univariate({0, 1}), BinPoly::univariate({0, 1}),
                       BinPoly::univariate({0, 2})});
    CHECK(g == BinPoly::univariate({0, 1}));
}

TEST_CASE("gcd of the l=15 pair with x^15+1 has degree 4") {
    auto g = poly_gcd({BinPoly::univariate({0, 6, 13}), BinPoly::univariate({0, 1, 4}),
                       BinPoly::univariate({0, 15})});
    CHECK(g.max_ex() == 4);
}

TEST_CASE("gcd divides its inputs") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_poly(20, 1 + rng() % 6, rng);
        auto b = random_poly(20, 1 + rng() % 6, rng);
        if (a.is_zero() && b.is_zero()) continue;
        auto g = poly_gcd({a, b});
        if (!a.is_zero()) CHECK(divides_exactly(g, a));
        if (!b.is_zero()) CHECK(divides_exactly(g, b));
    }
}

TEST_CASE("gcd rejects all-zero input") {
    CHECK_THROWS(poly_gcd({BinPoly(), BinPoly()}));
}

TEST_CASE("dense polynomial division round-trips") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = DensePoly::from_binpoly(random_poly(25, 1 + rng() % 8, rng));
        auto b = DensePoly::from_binpoly(random_poly(12, 1 + rng() % 5, rng));
        if (b.is_zero()) continue;
        auto [q, r] = DensePoly::divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("polynomial exponent reduction") {
    auto p = BinPoly::univariate({17}).reduced(15, 1);
    CHECK(p == BinPoly::univariate({2}));
}

TEST_CASE("echelon_solve solves consistent systems") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = random_matrix(5 + rng() % 6, 8 + rng() % 8, rng);
        BinVec e(h.cols());
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (rng() % 4 == 0) e.set(j, true);
        auto sigma = mat_vec(h, e);
        std::vector<std::size_t> order(h.cols());
        for (std::size_t j = 0; j < h.cols(); ++j) order[j] = j;
        std::shuffle(order.begin(), order.end(), rng);
        auto ech = echelon_solve(h, sigma, order);
        REQUIRE(ech.consistent);
        BinVec x(h.cols());
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            x.set(ech.pivot_cols[i], ech.rhs.get(ech.pivot_rows[i]));
        CHECK(mat_vec(h, x) == sigma);
    }
}
