#include "gb/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gb {

namespace {

std::string encode_support(const std::vector<std::uint32_t>& sup) {
    std::string key(sup.size() * 4, '\0');
    std::memcpy(key.data(), sup.data(), sup.size() * 4);
    return key;
}

double clamp_mag(double x, double m) { return x > m ? m : (x < -m ? -m : x); }

}  // namespace

Channel Channel::uniform(std::size_t n, double p) {
    std::vector<double> priors(n, p);
    return from_priors(std::move(priors));
}

Channel Channel::from_priors(std::vector<double> priors) {
    Channel ch;
    ch.prior = std::move(priors);
    ch.llr.resize(ch.prior.size());
    for (std::size_t i = 0; i < ch.prior.size(); ++i) {
        double p = std::min(std::max(ch.prior[i], 1e-12), 1.0 - 1e-12);
        ch.prior[i] = p;
        ch.llr[i] = std::log((1.0 - p) / p);
    }
    return ch;
}

double energy_of(const BinVec& e, const Channel& ch) {
    if (e.size() != ch.size()) throw std::invalid_argument("energy_of: length mismatch");
    double s = 0;
    for (std::size_t j : e.support()) s += ch.llr[j];
    return s;
}

DecoderContext::DecoderContext(BinMatrix h, Channel ch, DecoderConfig cfg)
    : h_(std::move(h)), ch_(std::move(ch)), cfg_(cfg) {
    if (ch_.size() != h_.cols()) throw std::invalid_argument("DecoderContext: channel size");
    if (cfg_.bp_max_iters < 1 || cfg_.avg_window < 1)
        throw std::invalid_argument("DecoderContext: bad config");
    check_vars_.resize(h_.rows());
    var_checks_.resize(h_.cols());
    for (std::size_t i = 0; i < h_.rows(); ++i)
        for (std::size_t j : h_.row_support(i)) {
            check_vars_[i].push_back(std::uint32_t(j));
            var_checks_[j].push_back(std::uint32_t(i));
        }

    if (cfg_.predecoder_weight > 2)
        throw std::invalid_argument("DecoderContext: lookup depth above 2 not supported");
    if (cfg_.predecoder_weight >= 1) {
        auto insert = [&](std::vector<std::uint32_t> sup, std::vector<std::uint32_t> cols,
                          double energy) {
            if (sup.empty()) return;  // zero-syndrome errors never match a cluster
            auto key = encode_support(sup);
            auto it = lut_.find(key);
            if (it == lut_.end())
                lut_.emplace(std::move(key), LutEntry{std::move(cols), energy});
            else if (energy < it->second.energy)
                it->second = LutEntry{std::move(cols), energy};
        };
        for (std::uint32_t j = 0; j < h_.cols(); ++j)
            insert(var_checks_[j], {j}, ch_.llr[j]);
        if (cfg_.predecoder_weight >= 2) {
            for (std::uint32_t j = 0; j < h_.cols(); ++j) {
                // connected partners only: sharing at least one check
                std::vector<std::uint32_t> partners;
                for (auto c : var_checks_[j])
                    for (auto j2 : check_vars_[c])
                        if (j2 > j) partners.push_back(j2);
                std::sort(partners.begin(), partners.end());
                partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
                for (auto j2 : partners) {
                    std::vector<std::uint32_t> sup;
                    std::set_symmetric_difference(var_checks_[j].begin(), var_checks_[j].end(),
                                                  var_checks_[j2].begin(), var_checks_[j2].end(),
                                                  std::back_inserter(sup));
                    insert(std::move(sup), {j, j2}, ch_.llr[j] + ch_.llr[j2]);
                }
            }
        }
    }
}

std::optional<BinVec> cluster_predecode(const DecoderContext& ctx, const BinVec& syndrome) {
    if (syndrome.size() != ctx.h().rows())
        throw std::invalid_argument("cluster_predecode: syndrome length");
    BinVec estimate(ctx.h().cols());
    auto sup = syndrome.support();
    if (sup.empty()) return estimate;

    std::vector<char> visited(ctx.h().rows(), false);
    std::vector<std::uint32_t> cluster, frontier;
    for (std::size_t seed : sup) {
        if (visited[seed]) continue;
        cluster.clear();
        frontier.assign(1, std::uint32_t(seed));
        visited[seed] = true;
        while (!frontier.empty()) {
            std::uint32_t c = frontier.back();
            frontier.pop_back();
            cluster.push_back(c);
            for (auto v : ctx.check_vars()[c])
                for (auto c2 : ctx.var_checks()[v])
                    if (!visited[c2] && syndrome.get(c2)) {
                        visited[c2] = true;
                        frontier.push_back(c2);
                    }
        }
        std::sort(cluster.begin(), cluster.end());
        auto it = ctx.lookup().find(encode_support(cluster));
        if (it == ctx.lookup().end()) return std::nullopt;
        for (auto col : it->second.cols) estimate.flip(col);
    }
    return estimate;
}

DecodeOutcome bp_decode(const DecoderContext& ctx, const BinVec& syndrome,
                        std::vector<double>* soft_out) {
    const BinMatrix& h = ctx.h();
    if (syndrome.size() != h.rows()) throw std::invalid_argument("bp_decode: syndrome length");
    const auto& cfg = ctx.config();
    const std::size_t n = h.cols();
    const auto& var_checks = ctx.var_checks();
    const auto& check_vars = ctx.check_vars();

    // edge storage in variable-major order
    std::vector<std::size_t> var_edge_base(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) var_edge_base[v + 1] = var_edge_base[v] + var_checks[v].size();
    const std::size_t n_edges = var_edge_base[n];
    std::vector<double> msg_cv(n_edges, 0.0);
    // check -> (var, edge) lists for the extrinsic products
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> check_edges(h.rows());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < var_checks[v].size(); ++k)
            check_edges[var_checks[v][k]].push_back(
                {std::uint32_t(v), std::uint32_t(var_edge_base[v] + k)});

    std::vector<double> lam(ctx.channel().llr);
    const int W = cfg.avg_window;
    std::vector<double> hist;    // ring buffer of posteriors, W x n
    std::vector<double> avg_acc; // running sum of the last min(iter, W) sweeps
    if (cfg.llr_mode == LlrMode::averaged) {
        hist.assign(std::size_t(W) * n, 0.0);
        avg_acc.assign(n, 0.0);
    }

    BinVec est(n);
    auto syndrome_matches = [&](const BinVec& e) {
        for (std::size_t c = 0; c < h.rows(); ++c) {
            bool parity = false;
            for (auto v : check_vars[c]) parity ^= e.get(v);
            if (parity != syndrome.get(c)) return false;
        }
        return true;
    };

    DecodeOutcome out;
    out.stage = DecodeStage::bp;
    int filled = 0;

    for (int iter = 1; iter <= cfg.bp_max_iters; ++iter) {
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < var_checks[v].size(); ++k) {
                const std::size_t c = var_checks[v][k];
                const std::size_t e = var_edge_base[v] + k;
                double prod = 1.0;
                for (auto [v2, e2] : check_edges[c]) {
                    if (e2 == e) continue;
                    prod *= std::tanh(0.5 * (lam[v2] - msg_cv[e2]));
                }
                prod = clamp_mag(prod, 1.0 - 1e-12);
                double m_new = (syndrome.get(c) ? -2.0 : 2.0) * std::atanh(prod);
                m_new = clamp_mag(m_new, cfg.msg_clamp);
                lam[v] += m_new - msg_cv[e];
                msg_cv[e] = m_new;
            }
        }

        const double* decide = lam.data();
        if (cfg.llr_mode == LlrMode::averaged) {
            double* slot = hist.data() + std::size_t((iter - 1) % W) * n;
            if (filled == W)
                for (std::size_t v = 0; v < n; ++v) avg_acc[v] -= slot[v];
            else
                ++filled;
            for (std::size_t v = 0; v < n; ++v) {
                slot[v] = lam[v];
                avg_acc[v] += lam[v];
            }
            decide = avg_acc.data();  // common positive scale, sign only
        }

        for (std::size_t v = 0; v < n; ++v) est.set(v, decide[v] < 0.0);
        if (syndrome_matches(est)) {
            out.estimate = est;
            out.converged = true;
            out.energy = energy_of(est, ctx.channel());
            if (soft_out) {
                soft_out->assign(decide, decide + n);
                if (cfg.llr_mode == LlrMode::averaged && filled > 0)
                    for (auto& x : *soft_out) x /= double(filled);
            }
            return out;
        }
    }

    out.estimate = est;  // last hard decision; does not match the syndrome
    out.converged = false;
    out.energy = energy_of(est, ctx.channel());
    if (soft_out) {
        if (cfg.llr_mode == LlrMode::averaged && filled > 0) {
            soft_out->assign(avg_acc.begin(), avg_acc.end());
            for (auto& x : *soft_out) x /= double(filled);
        } else {
            *soft_out = lam;
        }
    }
    return out;
}

BinVec osd_postprocess(const DecoderContext& ctx, const BinVec& syndrome,
                       const std::vector<double>& soft_llrs, int level) {
    const BinMatrix& h = ctx.h();
    if (soft_llrs.size() != h.cols()) throw std::invalid_argument("osd_postprocess: soft size");
    if (level < 0 || level > 1) throw std::invalid_argument("osd_postprocess: level");

    // most-likely-error first; stable ties by column index
    std::vector<std::size_t> order(h.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return soft_llrs[a] < soft_llrs[b]; });

    auto ech = echelon_solve(h, syndrome, order);
    if (!ech.consistent)
        throw std::invalid_argument("osd_postprocess: syndrome outside the column space");

    BinVec base(h.cols());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
        base.set(ech.pivot_cols[i], ech.rhs.get(ech.pivot_rows[i]));
    if (level == 0) return base;

    const double base_energy = energy_of(base, ctx.channel());
    double best_energy = base_energy;
    BinVec best = base;

    std::vector<char> is_pivot(h.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < h.cols(); ++f) {
        if (is_pivot[f]) continue;
        BinVec cand = base;
        cand.flip(f);
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            if (ech.reduced.get(ech.pivot_rows[i], f)) cand.flip(ech.pivot_cols[i]);
        double en = energy_of(cand, ctx.channel());
        if (en < best_energy) {
            best_energy = en;
            best = cand;
        }
    }
    return best;
}

BinVec ris_min_weight_decode(const DecoderContext& ctx, const BinVec& syndrome,
                             std::size_t iters, std::mt19937_64& rng) {
    const BinMatrix& h = ctx.h();
    BinVec best(h.cols());
    double best_energy = 0.0;
    bool have = false;
    std::vector<std::size_t> order(h.cols());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t it = 0; it < iters || !have; ++it) {
        auto ech = echelon_solve(h, syndrome, order);
        if (!ech.consistent)
            throw std::invalid_argument("ris_min_weight_decode: inconsistent syndrome");
        BinVec x(h.cols());
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            x.set(ech.pivot_cols[i], ech.rhs.get(ech.pivot_rows[i]));
        double en = energy_of(x, ctx.channel());
        if (!have || en < best_energy) {
            best_energy = en;
            best = x;
            have = true;
        }
        if (it + 1 >= iters && have) break;
        std::shuffle(order.begin(), order.end(), rng);
    }
    return best;
}

DecodeOutcome decode_pipeline(const DecoderContext& ctx, const BinVec& syndrome) {
    const auto& cfg = ctx.config();
    if (!syndrome.any()) {
        DecodeOutcome out;
        out.estimate = BinVec(ctx.h().cols());
        out.converged = true;
        out.stage = DecodeStage::predecoder;
        return out;
    }
    if (cfg.predecoder_weight >= 1) {
        if (auto hit = cluster_predecode(ctx, syndrome)) {
            DecodeOutcome out;
            out.estimate = std::move(*hit);
            out.converged = true;
            out.stage = DecodeStage::predecoder;
            out.energy = energy_of(out.estimate, ctx.channel());
            return out;
        }
    }
    std::vector<double> soft;
    DecodeOutcome out = bp_decode(ctx, syndrome, &soft);
    if (!out.converged) {
        out.estimate = osd_postprocess(ctx, syndrome, soft, cfg.osd_level);
        out.stage = DecodeStage::osd;
        out.energy = energy_of(out.estimate, ctx.channel());
    }
    if (cfg.ris_iters > 0) {
        std::mt19937_64 rng(cfg.seed);
        BinVec cand = ris_min_weight_decode(ctx, syndrome, std::size_t(cfg.ris_iters), rng);
        double en = energy_of(cand, ctx.channel());
        if (en < out.energy) {
            out.estimate = std::move(cand);
            out.stage = DecodeStage::ris;
            out.energy = en;
        }
    }
    return out;
}

}  // namespace gb
