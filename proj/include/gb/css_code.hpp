#pragma once

#include <string>
#include <utility>

#include "gb/bin_matrix.hpp"
#include "gb/bin_poly.hpp"

namespace gb {

// Two-generator abelian group <x,y | x^nx = y^ny = [x,y] = 1>; ny = 1 is the cyclic case.
struct GroupSpec {
    int nx = 1;
    int ny = 1;
    int order() const { return nx * ny; }
    bool is_cyclic() const { return ny == 1; }
    bool operator==(const GroupSpec&) const = default;
};

struct CodeSpec {
    GroupSpec group;
    BinPoly a, b;
};

// Two-block CSS code with H_X = (A|B), H_Z = (B^T|A^T).
// hx may be punctured (rows_removed > 0); hz always carries all l rows.
struct CssCode {
    GroupSpec group;
    BinPoly a, b;
    BinMatrix hx;
    BinMatrix hz;
    BinMatrix lx, lz;  // k x n logical generators
    std::size_t k = 0;
    std::size_t kappa = 0;
    std::size_t rows_removed = 0;

    std::size_t n() const { return hz.cols(); }
    std::size_t ell() const { return hz.rows(); }
};

// Line-oriented spec text: "group = nx ny", "a = (ex[,ey])(...)...", "b = ...".
// '#' starts a comment. Exponents are reduced modulo the generator orders.
CodeSpec parse_code_spec(const std::string& text);
CodeSpec load_code_spec(const std::string& path);

CssCode build_css(const GroupSpec& group, const BinPoly& a, const BinPoly& b);
CssCode build_css(const CodeSpec& spec);

// k from the rank route; for cyclic groups cross-checked against 2 deg gcd(a,b,x^l-1).
std::size_t dimension_checked(const CssCode& code);

// Full-row-rank k x n pairs satisfying L_X Hz^T = 0, L_Z Hx^T = 0, rank(L_X L_Z^T) = k.
std::pair<BinMatrix, BinMatrix> logical_generators(const BinMatrix& hx, const BinMatrix& hz);

// (M_X, M_Z): checks on the X- and Z-syndrome codes. Cyclic full codes use the
// quotient polynomial g = (x^l - 1)/h; otherwise a left-kernel basis.
std::pair<BinMatrix, BinMatrix> metacheck_matrices(const CssCode& code);

// X-metachecks valid for the current (possibly punctured) hx: left-kernel basis.
BinMatrix metachecks_for_decoding(const CssCode& code);

// Remove m redundant rows from hx, highest index first, skipping any row whose
// removal would reduce the rank. Quantum code data (k, L matrices) unchanged.
CssCode drop_redundant_rows(const CssCode& code, std::size_t m);

}  // namespace gb
