#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "gb/bin_matrix.hpp"

namespace gb {

// Per-column Bernoulli priors and their log-likelihood ratios.
struct Channel {
    std::vector<double> prior;
    std::vector<double> llr;  // ln((1-p)/p)

    static Channel uniform(std::size_t n, double p);
    static Channel from_priors(std::vector<double> priors);
    std::size_t size() const { return prior.size(); }
};

enum class LlrMode { instantaneous, averaged };

struct DecoderConfig {
    int bp_max_iters = 50;
    LlrMode llr_mode = LlrMode::averaged;  // hard decisions and OSD input
    int avg_window = 5;                    // sweeps in the running average
    int osd_level = 1;                     // 0 or 1
    int predecoder_weight = 1;             // lookup depth; 0 disables
    int ris_iters = 0;                     // extra minimum-energy search; 0 disables
    double msg_clamp = 25.0;
    std::uint64_t seed = 0;                // stream for the RIS stage
};

enum class DecodeStage { predecoder, bp, osd, ris };

struct DecodeOutcome {
    BinVec estimate;
    bool converged = false;  // satisfied the syndrome before post-processing
    DecodeStage stage = DecodeStage::predecoder;
    double energy = 0.0;
};

double energy_of(const BinVec& e, const Channel& ch);

// Immutable decoding context: matrix adjacency, channel, and the pre-decoder
// lookup. Shared freely across threads; decode calls keep their own state.
class DecoderContext {
public:
    DecoderContext(BinMatrix h, Channel ch, DecoderConfig cfg);

    const BinMatrix& h() const { return h_; }
    const Channel& channel() const { return ch_; }
    const DecoderConfig& config() const { return cfg_; }
    const std::vector<std::vector<std::uint32_t>>& check_vars() const { return check_vars_; }
    const std::vector<std::vector<std::uint32_t>>& var_checks() const { return var_checks_; }

    // Pre-decoder lookup: full syndrome support of an error -> the error.
    struct LutEntry {
        std::vector<std::uint32_t> cols;
        double energy = 0.0;
    };
    const std::unordered_map<std::string, LutEntry>& lookup() const { return lut_; }

private:
    BinMatrix h_;
    Channel ch_;
    DecoderConfig cfg_;
    std::vector<std::vector<std::uint32_t>> check_vars_, var_checks_;
    std::unordered_map<std::string, LutEntry> lut_;
};

// Match the syndrome as isolated pre-tabulated errors, one per cluster of set
// syndrome bits. Declining (empty result) is a normal outcome.
std::optional<BinVec> cluster_predecode(const DecoderContext& ctx, const BinVec& syndrome);

// Sum-product BP, serial variable-node schedule. On convergence the outcome
// holds the matching estimate; otherwise soft posteriors are left for OSD.
DecodeOutcome bp_decode(const DecoderContext& ctx, const BinVec& syndrome,
                        std::vector<double>* soft_out = nullptr);

// Reliability-sorted elimination. Level 1 additionally sweeps single flips of
// the non-pivot coordinates and keeps the lowest-energy candidate.
BinVec osd_postprocess(const DecoderContext& ctx, const BinVec& syndrome,
                       const std::vector<double>& soft_llrs, int level);

// Lowest-energy syndrome match over random information sets.
BinVec ris_min_weight_decode(const DecoderContext& ctx, const BinVec& syndrome,
                             std::size_t iters, std::mt19937_64& rng);

// predecoder -> BP -> OSD (-> optional RIS refinement).
DecodeOutcome decode_pipeline(const DecoderContext& ctx, const BinVec& syndrome);

}  // namespace gb
