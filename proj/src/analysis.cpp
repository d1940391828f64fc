#include "gb/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <tuple>

namespace gb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4a08ead90bd6fULL;
    return x ^ (x >> 31);
}

struct TannerAdj {
    std::vector<std::vector<std::uint32_t>> check_vars;
    std::vector<std::vector<std::uint32_t>> var_checks;
    std::size_t max_col_weight = 1;
};

TannerAdj tanner_adjacency(const BinMatrix& h) {
    TannerAdj adj;
    adj.check_vars.resize(h.rows());
    adj.var_checks.resize(h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j : h.row_support(i)) {
            adj.check_vars[i].push_back(std::uint32_t(j));
            adj.var_checks[j].push_back(std::uint32_t(i));
        }
    for (const auto& vc : adj.var_checks)
        adj.max_col_weight = std::max(adj.max_col_weight, vc.size());
    return adj;
}

// Depth-first growth of connected clusters on the Tanner graph of h.
// Growth is driven by the lowest unsatisfied check; sibling branches exclude
// the variables already tried for that check, so every irreducible codeword
// with min(support) == root and weight <= w_max is emitted exactly once.
template <typename Emit>
class ClusterWalker {
public:
    ClusterWalker(const TannerAdj& adj, std::size_t n_checks, std::size_t w_max,
                  std::atomic<std::uint64_t>* budget_left, Emit& emit)
        : adj_(adj),
          w_max_(w_max),
          budget_left_(budget_left),
          emit_(emit),
          syndrome_((n_checks + 63) / 64, 0),
          in_set_(adj.var_checks.size(), false),
          excluded_(adj.var_checks.size(), false) {}

    bool budget_hit() const { return budget_hit_; }
    std::uint64_t nodes() const { return nodes_; }

    void run_root(std::uint32_t root) {
        root_ = root;
        add_var(root);
        grow();
        remove_var(root);
    }

private:
    void toggle(std::uint32_t v) {
        for (auto c : adj_.var_checks[v]) {
            std::uint64_t mask = std::uint64_t(1) << (c & 63);
            if (syndrome_[c >> 6] & mask)
                --unsat_;
            else
                ++unsat_;
            syndrome_[c >> 6] ^= mask;
        }
    }
    void add_var(std::uint32_t v) {
        in_set_[v] = true;
        cluster_.push_back(v);
        toggle(v);
    }
    void remove_var(std::uint32_t v) {
        in_set_[v] = false;
        cluster_.pop_back();
        toggle(v);
    }

    std::size_t lowest_unsat() const {
        for (std::size_t wi = 0; wi < syndrome_.size(); ++wi)
            if (syndrome_[wi]) return wi * 64 + std::size_t(std::countr_zero(syndrome_[wi]));
        return std::size_t(-1);
    }

    bool consume_budget() {
        if (!budget_left_) return true;
        if ((++nodes_ & 0xfff) == 0) {
            if (budget_left_->fetch_sub(0x1000, std::memory_order_relaxed) < 0x1000) {
                budget_hit_ = true;
                return false;
            }
        }
        return true;
    }

    void grow() {
        if (budget_hit_ || !consume_budget()) return;
        if (unsat_ == 0) {
            emit_(cluster_);  // never extend a codeword: any superset decomposes
            return;
        }
        if (cluster_.size() >= w_max_) return;
        if (unsat_ > (w_max_ - cluster_.size()) * adj_.max_col_weight) return;

        std::size_t c = lowest_unsat();
        std::size_t mark = tried_.size();
        for (auto v : adj_.check_vars[c]) {
            if (v <= root_ || in_set_[v] || excluded_[v]) continue;
            add_var(v);
            grow();
            remove_var(v);
            excluded_[v] = true;
            tried_.push_back(v);
            if (budget_hit_) break;
        }
        while (tried_.size() > mark) {
            excluded_[tried_.back()] = false;
            tried_.pop_back();
        }
    }

    const TannerAdj& adj_;
    std::size_t w_max_;
    std::atomic<std::uint64_t>* budget_left_;
    Emit& emit_;

    std::vector<std::uint64_t> syndrome_;
    std::vector<char> in_set_, excluded_;
    std::vector<std::uint32_t> cluster_, tried_;
    std::size_t unsat_ = 0;
    std::uint32_t root_ = 0;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t t = comb.size();
    std::size_t i = t;
    while (i-- > 0) {
        if (comb[i] < n - t + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

DistanceResult min_distance_exhaustive(const BinMatrix& h, const BinMatrix& g,
                                       std::size_t w_max, const EnumOptions& opts) {
    if (g.rows() > 0 && g.cols() != h.cols())
        throw std::invalid_argument("min_distance_exhaustive: column mismatch");
    if (g.rows() > 0 && !mat_mul(h, g.transpose()).is_zero())
        throw std::invalid_argument("min_distance_exhaustive: inputs not orthogonal");
    RowBasis triv(g);
    TannerAdj adj = tanner_adjacency(h);
    const std::size_t n = h.cols();
    DistanceResult out;

    // Iterative deepening: exhausting weight w proves nothing lighter exists,
    // so the first weight with a nontrivial hit is the distance.
    for (std::size_t w = 1; w <= w_max; ++w) {
        std::atomic<std::uint64_t> budget_left{opts.node_budget ? opts.node_budget
                                                                : ~std::uint64_t(0)};
        std::atomic<std::uint64_t>* budget_ptr = opts.node_budget ? &budget_left : nullptr;
        std::atomic<std::size_t> best{std::size_t(-1)};
        BinVec best_witness(n);
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> budget_hit{false};

#pragma omp parallel if (opts.parallel)
        {
            auto emit = [&](const std::vector<std::uint32_t>& cluster) {
                BinVec v(n);
                for (auto j : cluster) v.set(j, true);
                if (triv.contains(v)) return;
#pragma omp critical(gb_dist_best)
                {
                    if (cluster.size() < best.load()) {
                        best.store(cluster.size());
                        best_witness = v;
                    }
                }
            };
            ClusterWalker walker(adj, h.rows(), w, budget_ptr, emit);
#pragma omp for schedule(dynamic)
            for (std::ptrdiff_t root = 0; root < std::ptrdiff_t(n); ++root)
                if (!walker.budget_hit()) walker.run_root(std::uint32_t(root));
            nodes += walker.nodes();
            if (walker.budget_hit()) budget_hit.store(true);
        }

        out.nodes_visited += nodes.load();
        if (budget_hit.load()) {
            out.exact = false;
            if (best.load() != std::size_t(-1)) {
                out.distance = best.load();
                out.witness = best_witness;
            }
            return out;
        }
        if (best.load() != std::size_t(-1)) {
            out.distance = best.load();
            out.witness = best_witness;
            return out;
        }
    }
    return out;  // nothing found up to w_max; exact
}

WeightSpectrum count_irreducible_codewords(const BinMatrix& h, const BinMatrix& g,
                                           std::size_t w_max, const EnumOptions& opts) {
    if (g.rows() > 0 && !mat_mul(h, g.transpose()).is_zero())
        throw std::invalid_argument("count_irreducible_codewords: inputs not orthogonal");
    RowBasis triv(g);
    TannerAdj adj = tanner_adjacency(h);
    const std::size_t n = h.cols();
    const std::size_t syn_words = (h.rows() + 63) / 64;

    std::atomic<bool> budget_hit{false};
    std::atomic<std::uint64_t> budget_left{opts.node_budget ? opts.node_budget : ~std::uint64_t(0)};
    std::atomic<std::uint64_t>* budget_ptr = opts.node_budget ? &budget_left : nullptr;

    std::vector<std::array<std::uint64_t, 32>> partial;
    if (w_max >= 32) throw std::invalid_argument("count_irreducible_codewords: w_max too large");

#pragma omp parallel if (opts.parallel)
    {
#pragma omp single
        partial.assign(std::size_t(omp_get_num_threads()), {});
        auto& mine = partial[std::size_t(omp_get_thread_num())];

        // Gray-code sweep over support bipartitions: v splits iff some proper
        // nonempty subset of its support is itself a codeword.
        std::vector<std::uint64_t> syn(syn_words);
        auto decomposable = [&](const std::vector<std::uint32_t>& sup) {
            const std::size_t wt = sup.size();
            if (wt < 2) return false;
            std::fill(syn.begin(), syn.end(), 0);
            std::uint64_t prev = 0;
            for (std::uint64_t i = 1; i < (std::uint64_t(1) << (wt - 1)); ++i) {
                std::uint64_t gray = i ^ (i >> 1);
                std::uint64_t diff = gray ^ prev;
                prev = gray;
                std::uint32_t v = sup[std::size_t(std::countr_zero(diff)) + 1];
                for (auto c : adj.var_checks[v]) syn[c >> 6] ^= std::uint64_t(1) << (c & 63);
                bool zero = true;
                for (auto wd : syn)
                    if (wd) {
                        zero = false;
                        break;
                    }
                if (zero) return true;
            }
            return false;
        };

        auto emit = [&](const std::vector<std::uint32_t>& cluster) {
            BinVec v(n);
            for (auto j : cluster) v.set(j, true);
            if (triv.contains(v)) return;
            if (decomposable(cluster)) return;
            mine[cluster.size()] += 1;
        };
        ClusterWalker walker(adj, h.rows(), w_max, budget_ptr, emit);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t root = 0; root < std::ptrdiff_t(n); ++root)
            if (!walker.budget_hit()) walker.run_root(std::uint32_t(root));
        if (walker.budget_hit()) budget_hit.store(true);
    }

    if (budget_hit.load())
        throw std::runtime_error("count_irreducible_codewords: node budget exceeded");

    WeightSpectrum spec;
    for (std::size_t w = 1; w <= w_max; ++w) spec.counts[w] = 0;
    for (const auto& arr : partial)
        for (std::size_t w = 1; w <= w_max; ++w) spec.counts[w] += arr[w];
    return spec;
}

std::optional<std::size_t> min_weight_ris(const BinMatrix& h, const BinMatrix& g,
                                          std::size_t iterations, std::uint64_t seed,
                                          bool parallel, BinVec* witness, bool pair_sums) {
    if (iterations == 0) return std::nullopt;
    auto ker = rank_and_kernels(h).right_kernel;
    if (ker.rows() == 0) return std::nullopt;
    RowBasis triv(g);
    const std::size_t n = h.cols(), kr = ker.rows();

    std::size_t global_best = std::size_t(-1);
    BinVec global_witness(n);

#pragma omp parallel if (parallel)
    {
        std::size_t best = std::size_t(-1);
        BinVec best_vec(n);
        std::vector<std::size_t> order(n);

#pragma omp for schedule(static)
        for (std::ptrdiff_t it = 0; it < std::ptrdiff_t(iterations); ++it) {
            std::mt19937_64 rng(splitmix64(seed ^ std::uint64_t(it)));
            for (std::size_t i = 0; i < n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);

            BinMatrix work = ker;
            std::size_t r = 0;
            for (std::size_t c : order) {
                if (r == kr) break;
                std::size_t p = kr;
                for (std::size_t i = r; i < kr; ++i)
                    if (work.get(i, c)) {
                        p = i;
                        break;
                    }
                if (p == kr) continue;
                work.row_swap(r, p);
                for (std::size_t i = 0; i < kr; ++i)
                    if (i != r && work.get(i, c)) work.row_xor(i, r);
                ++r;
            }
            for (std::size_t i = 0; i < kr; ++i) {
                std::size_t w = work.row_weight(i);
                if (w > 0 && w < best) {
                    BinVec v = work.row_vec(i);
                    if (!triv.contains(v)) {
                        best = w;
                        best_vec = v;
                    }
                }
            }
            if (pair_sums) {
                for (std::size_t i = 0; i < kr; ++i)
                    for (std::size_t j = i + 1; j < kr; ++j) {
                        BinVec v = work.row_vec(i);
                        v.xor_with(work.row_vec(j));
                        std::size_t w = v.weight();
                        if (w > 0 && w < best && !triv.contains(v)) {
                            best = w;
                            best_vec = v;
                        }
                    }
            }
        }

#pragma omp critical(gb_ris_reduce)
        {
            if (best < global_best) {
                global_best = best;
                global_witness = best_vec;
            }
        }
    }

    if (global_best == std::size_t(-1)) return std::nullopt;
    if (witness) *witness = global_witness;
    return global_best;
}

std::size_t syndrome_distance(const CssCode& code) {
    BinMatrix checks = metachecks_for_decoding(code);
    if (checks.rows() == 0) return 1;  // full-rank hx: every vector is a valid syndrome
    std::size_t w_cap = std::min(code.a.weight(), code.b.weight());
    auto res = min_distance_exhaustive(checks, BinMatrix(0, checks.cols()), w_cap,
                                       {.parallel = false});
    if (!res.distance)
        throw std::logic_error("syndrome_distance: no codeword below the column-weight bound");
    return *res.distance;
}

ConfinementProfile confinement_profile(const CssCode& code, std::size_t t_max, bool parallel) {
    if (t_max > 3) throw std::invalid_argument("confinement_profile: t_max exceeds desk budget");
    const std::size_t n = code.n();

    // Low-weight stabilizer-space elements: an error of weight t <= t_max is
    // reducible iff adding one of them lowers its weight, which only elements
    // of weight < 2 t_max can do. Disconnected trivial elements split into two
    // codewords of weight >= d each, too heavy to matter at this budget.
    std::vector<BinVec> small_trivials;
    if (t_max >= 2) {
        RowBasis triv(code.hz);
        TannerAdj adj_hx = tanner_adjacency(code.hx);
        std::size_t w_cap = 2 * t_max - 1;
#pragma omp parallel if (parallel)
        {
            auto emit = [&](const std::vector<std::uint32_t>& cluster) {
                BinVec v(n);
                for (auto j : cluster) v.set(j, true);
                if (!triv.contains(v)) return;
#pragma omp critical(gb_conf_triv)
                small_trivials.push_back(v);
            };
            ClusterWalker walker(adj_hx, code.hx.rows(), w_cap, nullptr, emit);
#pragma omp for schedule(dynamic)
            for (std::ptrdiff_t root = 0; root < std::ptrdiff_t(n); ++root)
                walker.run_root(std::uint32_t(root));
        }
    }

    auto irreducible = [&](const BinVec& e) {
        for (const auto& g : small_trivials) {
            BinVec v = e;
            v.xor_with(g);
            if (v.weight() < e.weight()) return false;
        }
        return true;
    };

    ConfinementProfile prof;
    for (std::size_t t = 1; t <= t_max; ++t) {
        std::size_t best = std::size_t(-1);
        std::vector<std::size_t> comb(t);
        for (std::size_t i = 0; i < t; ++i) comb[i] = i;
        do {
            BinVec e(n);
            for (auto j : comb) e.set(j, true);
            if (!irreducible(e)) continue;
            best = std::min(best, mat_vec(code.hx, e).weight());
        } while (next_combination(comb, n));
        prof.entries.emplace_back(t, best);
    }
    return prof;
}

namespace {

// Lexicographically smallest translate of p (optionally with all exponents
// negated). Translation multiplies by a monomial: a code equivalence.
std::vector<Mono> normalize_translates(const GroupSpec& g, const BinPoly& p, bool negate) {
    std::vector<Mono> base;
    for (auto m : p.monomials()) {
        if (negate) {
            m.ex = (g.nx - m.ex) % g.nx;
            m.ey = (g.ny - m.ey) % g.ny;
        }
        base.push_back(m);
    }
    std::vector<Mono> best;
    for (const auto& t : base) {
        std::vector<Mono> shifted;
        for (const auto& m : base)
            shifted.push_back({(m.ex - t.ex + g.nx) % g.nx, (m.ey - t.ey + g.ny) % g.ny});
        std::sort(shifted.begin(), shifted.end());
        if (best.empty() || shifted < best) best = std::move(shifted);
    }
    return best;
}

std::string encode_monos(const std::vector<Mono>& m) {
    std::string s;
    for (const auto& mo : m) s += std::to_string(mo.ex) + "," + std::to_string(mo.ey) + ";";
    return s;
}

std::vector<BinPoly> weight_w_polys(const GroupSpec& g, std::size_t w) {
    const std::size_t l = std::size_t(g.order());
    std::vector<Mono> monos;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) monos.push_back({i, j});
    std::vector<BinPoly> out;
    if (w > l || w == 0) return out;
    std::vector<std::size_t> comb(w);
    for (std::size_t i = 0; i < w; ++i) comb[i] = i;
    do {
        std::vector<Mono> pick;
        for (auto c : comb) pick.push_back(monos[c]);
        out.push_back(BinPoly(std::move(pick)));
    } while (next_combination(comb, l));
    return out;
}

}  // namespace

std::vector<SearchHit> search_codes(const std::vector<GroupSpec>& groups, std::size_t wa,
                                    std::size_t wb, const SearchFilters& filters, bool parallel) {
    std::vector<SearchHit> hits;
    std::set<std::array<std::size_t, 4>> params_seen;
    for (const auto& g : groups) {
        auto polys_a = weight_w_polys(g, wa);
        auto polys_b = (wa == wb) ? polys_a : weight_w_polys(g, wb);

        // Intern the translation-normalized form of every polynomial (plain
        // and negated); a pair key is then two small integers.
        std::unordered_map<std::string, std::uint32_t> form_ids;
        auto intern = [&](const BinPoly& p, bool neg) {
            std::string s = encode_monos(normalize_translates(g, p, neg));
            auto [it, fresh] = form_ids.try_emplace(s, std::uint32_t(form_ids.size()));
            (void)fresh;
            return it->second;
        };
        auto ids_of = [&](const std::vector<BinPoly>& ps) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> ids(ps.size());
            for (std::size_t i = 0; i < ps.size(); ++i)
                ids[i] = {intern(ps[i], false), intern(ps[i], true)};
            return ids;
        };
        auto ids_a = ids_of(polys_a);
        auto ids_b = (wa == wb) ? ids_a : ids_of(polys_b);

        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<BinPoly, BinPoly>> candidates;
        for (std::size_t ai = 0; ai < polys_a.size(); ++ai)
            for (std::size_t bi = 0; bi < polys_b.size(); ++bi) {
                auto [ap, an] = ids_a[ai];
                auto [bp, bn] = ids_b[bi];
                auto pack = [](std::uint32_t x, std::uint32_t y) {
                    return (std::uint64_t(x) << 32) | y;
                };
                std::uint64_t key = std::min(std::min(pack(ap, bp), pack(an, bn)),
                                             std::min(pack(bp, ap), pack(bn, an)));
                if (seen.insert(key).second) candidates.emplace_back(polys_a[ai], polys_b[bi]);
            }

        std::vector<SearchHit> found(candidates.size());
        std::vector<char> ok(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::ptrdiff_t ci = 0; ci < std::ptrdiff_t(candidates.size()); ++ci) {
            const auto& [a, b] = candidates[std::size_t(ci)];
            if (g.is_cyclic()) {
                auto h = poly_gcd({a, b, DensePoly::x_power_plus_one(g.nx).to_binpoly()});
                if (h.max_ex() == 0) continue;  // k = 0
            }
            CssCode code = build_css(g, a, b);
            if (code.k == 0) continue;
            std::size_t ds = syndrome_distance(code);
            if (ds != filters.d_s_required) continue;
            auto dres = min_distance_exhaustive(code.hx, code.hz,
                                                std::max<std::size_t>(filters.d_min + 5, 10),
                                                {.parallel = false});
            if (!dres.distance || *dres.distance < filters.d_min) continue;
            found[std::size_t(ci)] = SearchHit{g, a, b, code.n(), code.k, *dres.distance, ds};
            ok[std::size_t(ci)] = 1;
        }
        // candidate order is deterministic, so the chosen representative is too
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            if (!ok[ci]) continue;
            const auto& hit = found[ci];
            if (params_seen.insert({hit.n, hit.k, hit.d, hit.d_s}).second) hits.push_back(hit);
        }
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
        return std::tie(x.n, x.k, x.d, x.d_s) < std::tie(y.n, y.k, y.d, y.d_s);
    });
    return hits;
}

}  // namespace gb
