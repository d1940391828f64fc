#include "gb/css_code.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gb {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

BinPoly parse_poly(const std::string& text, int line_no) {
    std::vector<Mono> monos;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(')
            throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                     ": expected '(' in monomial list");
        std::size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                     ": unterminated monomial");
        std::string body = text.substr(i + 1, close - i - 1);
        Mono m;
        std::size_t comma = body.find(',');
        try {
            if (comma == std::string::npos) {
                m.ex = std::stoi(strip(body));
            } else {
                m.ex = std::stoi(strip(body.substr(0, comma)));
                m.ey = std::stoi(strip(body.substr(comma + 1)));
            }
        } catch (const std::exception&) {
            throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                     ": bad exponent tuple '(" + body + ")'");
        }
        monos.push_back(m);
        i = close + 1;
    }
    if (monos.empty())
        throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                 ": empty monomial list");
    return BinPoly(std::move(monos));
}

}  // namespace

CodeSpec parse_code_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_group = false, have_a = false, have_b = false;
    GroupSpec group;
    BinPoly a, b;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (key == "group") {
            std::istringstream vs(val);
            if (!(vs >> group.nx >> group.ny))
                throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                         ": group needs two generator orders");
            if (group.nx < 1 || group.ny < 1)
                throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                         ": generator order < 1");
            have_group = true;
        } else if (key == "a") {
            a = parse_poly(val, line_no);
            have_a = true;
        } else if (key == "b") {
            b = parse_poly(val, line_no);
            have_b = true;
        } else {
            throw std::runtime_error("code spec line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    if (!have_group || !have_a || !have_b)
        throw std::runtime_error("code spec: missing group, a, or b");
    a = a.reduced(group.nx, group.ny);
    b = b.reduced(group.nx, group.ny);
    if (a.is_zero() || b.is_zero()) throw std::runtime_error("code spec: zero polynomial");
    return {group, a, b};
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code spec: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_spec(ss.str());
}

std::pair<BinMatrix, BinMatrix> logical_generators(const BinMatrix& hx, const BinMatrix& hz) {
    const std::size_t n = hx.cols();
    auto pick = [n](const BinMatrix& h_same, const BinMatrix& h_other) {
        // Complement of rowspace(h_same) inside the right kernel of h_other.
        // Kernel rows are reduced against a growing pivot basis seeded with
        // h_same; the nonzero remainders (lowest-index pivots first) are kept.
        std::vector<std::pair<std::size_t, BinVec>> basis;  // (pivot col, row)
        auto reduce = [&](BinVec v) {
            for (const auto& [piv, row] : basis)
                if (v.get(piv)) v.xor_with(row);
            return v;
        };
        auto absorb = [&](const BinVec& v) {
            std::size_t piv = v.support().front();
            for (auto& [p, row] : basis)
                if (row.get(piv)) row.xor_with(v);
            basis.emplace_back(piv, v);
        };
        for (std::size_t i = 0; i < h_same.rows(); ++i) {
            BinVec v = reduce(h_same.row_vec(i));
            if (v.any()) absorb(v);
        }
        std::vector<BinVec> logicals;
        auto ker = rank_and_kernels(h_other).right_kernel;
        for (std::size_t i = 0; i < ker.rows(); ++i) {
            BinVec v = reduce(ker.row_vec(i));
            if (!v.any()) continue;
            absorb(v);
            logicals.push_back(v);
        }
        BinMatrix out(logicals.size(), n);
        for (std::size_t i = 0; i < logicals.size(); ++i) out.set_row(i, logicals[i]);
        return out;
    };
    BinMatrix lx = pick(hx, hz);
    BinMatrix lz = pick(hz, hx);
    if (lx.rows() != lz.rows()) throw std::logic_error("logical_generators: rank mismatch");
    if (lx.rows() > 0 && rank_of(mat_mul(lx, lz.transpose())) != lx.rows())
        throw std::logic_error("logical_generators: degenerate logical pairing");
    return {lx, lz};
}

CssCode build_css(const GroupSpec& group, const BinPoly& a_in, const BinPoly& b_in) {
    if (group.nx < 1 || group.ny < 1) throw std::invalid_argument("build_css: generator order < 1");
    BinPoly a = a_in.reduced(group.nx, group.ny);
    BinPoly b = b_in.reduced(group.nx, group.ny);
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("build_css: zero polynomial");

    BinMatrix A = group_algebra_matrix(a, group.nx, group.ny);
    BinMatrix B = group_algebra_matrix(b, group.nx, group.ny);
    if (mat_mul(A, B) != mat_mul(B, A)) throw std::logic_error("build_css: AB != BA");

    CssCode code;
    code.group = group;
    code.a = a;
    code.b = b;
    code.hx = hstack(A, B);
    code.hz = hstack(B.transpose(), A.transpose());
    if (!mat_mul(code.hx, code.hz.transpose()).is_zero())
        throw std::logic_error("build_css: Hx Hz^T != 0");

    const std::size_t l = code.ell();
    std::size_t r = rank_of(code.hx);
    code.kappa = l - r;
    code.k = 2 * code.kappa;
    std::tie(code.lx, code.lz) = logical_generators(code.hx, code.hz);
    if (code.lx.rows() != code.k) throw std::logic_error("build_css: logical count mismatch");
    return code;
}

CssCode build_css(const CodeSpec& spec) { return build_css(spec.group, spec.a, spec.b); }

std::size_t dimension_checked(const CssCode& code) {
    std::size_t k_rank = code.n() - rank_of(code.hx) - rank_of(code.hz);
    if (k_rank != code.k) throw std::logic_error("dimension_checked: rank route disagrees");
    if (code.group.is_cyclic()) {
        auto h = poly_gcd({code.a, code.b,
                           DensePoly::x_power_plus_one(code.group.nx).to_binpoly()});
        std::size_t k_gcd = 2 * std::size_t(h.max_ex());
        if (k_gcd != code.k)
            throw std::logic_error("dimension_checked: gcd route gives k=" +
                                   std::to_string(k_gcd) + ", rank route k=" +
                                   std::to_string(code.k));
    }
    return code.k;
}

std::pair<BinMatrix, BinMatrix> metacheck_matrices(const CssCode& code) {
    if (code.rows_removed != 0)
        throw std::invalid_argument("metacheck_matrices: code has removed rows");
    if (code.kappa == 0) return {BinMatrix(0, code.ell()), BinMatrix(0, code.ell())};
    if (code.group.is_cyclic()) {
        const int l = code.group.nx;
        auto h = poly_gcd({code.a, code.b, DensePoly::x_power_plus_one(l).to_binpoly()});
        auto [g, rem] = DensePoly::divmod(DensePoly::x_power_plus_one(l),
                                          DensePoly::from_binpoly(h));
        if (!rem.is_zero()) throw std::logic_error("metacheck_matrices: h does not divide x^l-1");
        BinMatrix mx = circulant(g.to_binpoly(), std::size_t(l));
        return {mx, mx.transpose()};
    }
    BinMatrix mx = rank_and_kernels(code.hx).left_kernel;
    BinMatrix mz = rank_and_kernels(code.hz).left_kernel;
    return {mx, mz};
}

BinMatrix metachecks_for_decoding(const CssCode& code) {
    if (code.rows_removed == 0 && code.group.is_cyclic()) return metacheck_matrices(code).first;
    return rank_and_kernels(code.hx).left_kernel;
}

CssCode drop_redundant_rows(const CssCode& code, std::size_t m) {
    if (code.rows_removed + m > code.kappa)
        throw std::invalid_argument("drop_redundant_rows: m exceeds row redundancy");
    if (m == 0) return code;

    const std::size_t full_rank = rank_of(code.hx);
    std::vector<std::size_t> keep(code.hx.rows());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;

    std::size_t removed = 0;
    std::size_t idx = keep.size();
    while (removed < m && idx-- > 0) {
        std::vector<std::size_t> trial;
        trial.reserve(keep.size() - 1);
        for (std::size_t r : keep)
            if (r != keep[idx]) trial.push_back(r);
        if (rank_of(code.hx.take_rows(trial)) == full_rank) {
            keep = std::move(trial);
            ++removed;
        }
    }
    if (removed < m) throw std::logic_error("drop_redundant_rows: no rank-preserving removal left");

    CssCode out = code;
    out.hx = code.hx.take_rows(keep);
    out.rows_removed = code.rows_removed + m;
    return out;
}

}  // namespace gb
