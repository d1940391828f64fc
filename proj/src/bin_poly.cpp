#include "gb/bin_poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gb {

namespace {

int mod_norm(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

BinPoly::BinPoly(std::vector<Mono> monos) : monos_(std::move(monos)) {
    std::sort(monos_.begin(), monos_.end());
    // XOR semantics: monomials appearing an even number of times cancel.
    std::vector<Mono> out;
    for (std::size_t i = 0; i < monos_.size();) {
        std::size_t j = i;
        while (j < monos_.size() && monos_[j] == monos_[i]) ++j;
        if ((j - i) & 1) out.push_back(monos_[i]);
        i = j;
    }
    monos_ = std::move(out);
}

BinPoly BinPoly::univariate(std::initializer_list<int> exps) {
    std::vector<Mono> m;
    for (int e : exps) m.push_back({e, 0});
    return BinPoly(std::move(m));
}

bool BinPoly::is_univariate() const {
    for (const auto& m : monos_)
        if (m.ey != 0) return false;
    return true;
}

int BinPoly::max_ex() const {
    int mx = 0;
    for (const auto& m : monos_) mx = std::max(mx, m.ex);
    return mx;
}

BinPoly BinPoly::reduced(int nx, int ny) const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("BinPoly::reduced: order < 1");
    std::vector<Mono> m;
    m.reserve(monos_.size());
    for (const auto& mo : monos_) m.push_back({mod_norm(mo.ex, nx), mod_norm(mo.ey, ny)});
    return BinPoly(std::move(m));
}

std::string BinPoly::to_string() const {
    if (monos_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < monos_.size(); ++i) {
        if (i) s += " + ";
        const auto& m = monos_[i];
        if (m.ex == 0 && m.ey == 0) {
            s += "1";
            continue;
        }
        if (m.ex > 0) {
            s += "x";
            if (m.ex > 1) s += "^" + std::to_string(m.ex);
        }
        if (m.ey > 0) {
            if (m.ex > 0) s += " ";
            s += "y";
            if (m.ey > 1) s += "^" + std::to_string(m.ey);
        }
    }
    return s;
}

DensePoly DensePoly::from_binpoly(const BinPoly& p) {
    if (!p.is_univariate()) throw std::invalid_argument("DensePoly: polynomial is not univariate");
    DensePoly d;
    for (const auto& m : p.monomials()) d.flip(m.ex);
    return d;
}

DensePoly DensePoly::x_power_plus_one(int l) {
    DensePoly d;
    d.flip(0);
    d.flip(l);
    return d;
}

DensePoly DensePoly::monomial(int e) {
    DensePoly d;
    d.flip(e);
    return d;
}

int DensePoly::degree() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return int(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
}

bool DensePoly::get(int e) const {
    std::size_t wi = std::size_t(e) >> 6;
    if (wi >= w_.size()) return false;
    return (w_[wi] >> (e & 63)) & 1;
}

void DensePoly::flip(int e) {
    std::size_t wi = std::size_t(e) >> 6;
    if (wi >= w_.size()) w_.resize(wi + 1, 0);
    w_[wi] ^= std::uint64_t(1) << (e & 63);
}

void DensePoly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

BinPoly DensePoly::to_binpoly() const {
    std::vector<Mono> m;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t x = w_[wi];
        while (x) {
            m.push_back({int(wi * 64 + std::countr_zero(x)), 0});
            x &= x - 1;
        }
    }
    return BinPoly(std::move(m));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly c = a;
    if (b.w_.size() > c.w_.size()) c.w_.resize(b.w_.size(), 0);
    for (std::size_t i = 0; i < b.w_.size(); ++i) c.w_[i] ^= b.w_[i];
    c.trim();
    return c;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly c;
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return c;
    c.w_.assign(std::size_t(da + db) / 64 + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (!a.get(i)) continue;
        for (std::size_t wi = 0; wi < b.w_.size(); ++wi) {
            std::uint64_t x = b.w_[wi];
            std::size_t base = wi * 64 + std::size_t(i);
            std::size_t word = base >> 6, off = base & 63;
            c.w_[word] ^= x << off;
            if (off && word + 1 < c.w_.size()) c.w_[word + 1] ^= x >> (64 - off);
        }
    }
    c.trim();
    return c;
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& a, const DensePoly& b) {
    int db = b.degree();
    if (db < 0) throw std::invalid_argument("DensePoly::divmod: division by zero");
    DensePoly q, r = a;
    int dr = r.degree();
    while (dr >= db) {
        int shift = dr - db;
        q.flip(shift);
        // r -= b * x^shift
        for (int i = 0; i <= db; ++i)
            if (b.get(i)) r.flip(i + shift);
        dr = r.degree();
    }
    q.trim();
    r.trim();
    return {q, r};
}

bool DensePoly::operator==(const DensePoly& o) const {
    DensePoly a = *this, b = o;
    a.trim();
    b.trim();
    return a.w_ == b.w_;
}

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
    DensePoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = DensePoly::divmod(x, y);
        x = y;
        y = r;
    }
    return x;
}

BinPoly poly_gcd(const std::vector<BinPoly>& ps) {
    DensePoly g;
    bool any_nonzero = false;
    for (const auto& p : ps) {
        DensePoly d = DensePoly::from_binpoly(p);
        if (!d.is_zero()) any_nonzero = true;
        g = g.is_zero() ? d : poly_gcd(g, d);
    }
    if (!any_nonzero) throw std::invalid_argument("poly_gcd: all inputs zero");
    return g.to_binpoly();
}

BinMatrix circulant(const BinPoly& p, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("circulant: zero block size");
    BinPoly r = p.reduced(int(ell), 1);
    BinMatrix m(ell, ell);
    for (std::size_t i = 0; i < ell; ++i)
        for (const auto& mo : r.monomials()) m.flip(i, (i + std::size_t(mo.ex)) % ell);
    return m;
}

BinMatrix group_algebra_matrix(const BinPoly& p, int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("group_algebra_matrix: order < 1");
    BinPoly r = p.reduced(nx, ny);
    const std::size_t l = std::size_t(nx) * std::size_t(ny);
    BinMatrix m(l, l);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            std::size_t row = std::size_t(i) * ny + j;
            for (const auto& mo : r.monomials()) {
                std::size_t col = std::size_t((i + mo.ex) % nx) * ny + (j + mo.ey) % ny;
                m.flip(row, col);
            }
        }
    return m;
}

}  // namespace gb
