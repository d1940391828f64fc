#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gb/bin_matrix.hpp"

namespace gb {

struct Mono {
    int ex = 0;
    int ey = 0;
    auto operator<=>(const Mono&) const = default;
};

// Binary multivariate polynomial as a sorted set of exponent tuples.
// Duplicate monomials cancel (GF(2) coefficients).
class BinPoly {
public:
    BinPoly() = default;
    explicit BinPoly(std::vector<Mono> monos);
    static BinPoly one() { return BinPoly({Mono{0, 0}}); }
    static BinPoly univariate(std::initializer_list<int> exps);

    const std::vector<Mono>& monomials() const { return monos_; }
    std::size_t weight() const { return monos_.size(); }
    bool is_zero() const { return monos_.empty(); }
    bool is_univariate() const;
    int max_ex() const;

    // Exponents reduced modulo the generator orders; collisions cancel.
    BinPoly reduced(int nx, int ny) const;

    std::string to_string() const;  // e.g. "1 + x y^2 + x^3"

    bool operator==(const BinPoly&) const = default;

private:
    std::vector<Mono> monos_;
};

// Dense univariate polynomial over GF(2), little-endian bit-packed.
class DensePoly {
public:
    DensePoly() = default;
    static DensePoly from_binpoly(const BinPoly& p);  // requires univariate
    static DensePoly x_power_plus_one(int l);         // x^l + 1
    static DensePoly monomial(int e);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    bool get(int e) const;
    void flip(int e);

    BinPoly to_binpoly() const;

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    // Quotient and remainder; divisor must be nonzero.
    static std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);

    bool operator==(const DensePoly&) const;

private:
    std::vector<std::uint64_t> w_;
    void trim();
};

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b);
// GCD of a list of univariate polynomials; at least one must be nonzero.
BinPoly poly_gcd(const std::vector<BinPoly>& ps);

// p(P_l) with P_l the cyclic shift: row i has ones at columns (i+e) mod l.
BinMatrix circulant(const BinPoly& p, std::size_t ell);

// p(P_X, P_Y) over the abelian group C_nx x C_ny; element (i,j) has index i*ny+j.
BinMatrix group_algebra_matrix(const BinPoly& p, int nx, int ny);

}  // namespace gb
