#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gb/css_code.hpp"

namespace gb {

// Result of bounded codeword enumeration. `exact` means the search space
// below the reported weight was fully exhausted (or up to w_max when nothing
// was found); it is false only when a node budget cut the sweep short.
struct DistanceResult {
    std::optional<std::size_t> distance;  // empty: nothing found up to w_max
    bool exact = true;
    BinVec witness;
    std::uint64_t nodes_visited = 0;
};

struct EnumOptions {
    std::uint64_t node_budget = 0;  // 0 = unlimited
    bool parallel = true;
};

// Minimum weight of v with H v^T = 0 and v outside rowspace(G), found by
// growing connected clusters on the Tanner graph of H. Iterative deepening:
// codes with small distance terminate early.
DistanceResult min_distance_exhaustive(const BinMatrix& h, const BinMatrix& g,
                                       std::size_t w_max, const EnumOptions& opts = {});

struct WeightSpectrum {
    std::map<std::size_t, std::uint64_t> counts;  // w -> A_w
    std::uint64_t at(std::size_t w) const {
        auto it = counts.find(w);
        return it == counts.end() ? 0 : it->second;
    }
};

// Count nontrivial codewords of weight <= w_max whose Tanner support is
// connected and which do not split into two disjoint-support codewords.
WeightSpectrum count_irreducible_codewords(const BinMatrix& h, const BinMatrix& g,
                                           std::size_t w_max, const EnumOptions& opts = {});

// Random-information-set upper bound on the minimum nontrivial weight.
// Empty result when iterations == 0. Deterministic for a fixed seed.
std::optional<std::size_t> min_weight_ris(const BinMatrix& h, const BinMatrix& g,
                                          std::size_t iterations, std::uint64_t seed,
                                          bool parallel = true, BinVec* witness = nullptr,
                                          bool pair_sums = false);

// Distance of the code formed by valid X-syndrome vectors {e Hx^T}.
std::size_t syndrome_distance(const CssCode& code);

struct ConfinementProfile {
    // (error weight t, min syndrome weight over irreducible weight-t errors)
    std::vector<std::pair<std::size_t, std::size_t>> entries;
};

// Exhaustive profile for t <= t_max (t_max <= 3). An error counts as weight t
// only if no stabilizer-equivalent error has lower weight.
ConfinementProfile confinement_profile(const CssCode& code, std::size_t t_max,
                                       bool parallel = true);

struct SearchFilters {
    std::size_t d_min = 3;          // keep codes with d >= d_min
    std::size_t d_s_required = 3;   // exact syndrome distance required
};

struct SearchHit {
    GroupSpec group;
    BinPoly a, b;
    std::size_t n = 0, k = 0, d = 0, d_s = 0;
};

// Exhaustive scan over weight-(wa, wb) polynomial pairs, deduplicated by the
// translation / negation / swap equivalences; one representative per distinct
// (n, k, d, d_s) tuple.
std::vector<SearchHit> search_codes(const std::vector<GroupSpec>& groups, std::size_t wa,
                                    std::size_t wb, const SearchFilters& filters,
                                    bool parallel = true);

}  // namespace gb
