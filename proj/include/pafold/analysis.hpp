#pragma once

// Statistical reduction of simulation output plus the slowdown / leak
// accounting table for the published schemes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pafold/channel_sim.hpp"

namespace pafold {

struct SimulationReport {
    std::string scheme;
    double p;
    double fidelity;
    int k;
    std::uint64_t final_bits; // L per trial
    std::uint64_t trials;
    std::uint64_t total_final_bits;
    std::uint64_t eve_correct_final_bits;
    double empirical_eve_rate;
    double bound_rate; // P^k(p)
    double std_devs;   // signed distance of empirical from bound, in
                       // binomial standard deviations under the bound
    SiftStats sift;
    double slowdown;      // 2^k
    double raw_per_final; // 2^k / fidelity
    std::uint64_t seed;
};

/// Aggregate trial outputs into a report.
SimulationReport summarize(std::span<const TrialResult> trials,
                           const SchemePreset& preset, const KeyRequest& req,
                           std::uint64_t seed);

/// Report serialized as a single JSON object with fixed key order and no
/// timestamps, so identical runs are byte-identical.
std::string report_json(const SimulationReport& report);

/// Short human-readable rendering of the same report.
std::string report_summary(const SimulationReport& report);

struct SlowdownRow {
    double p;
    int published_k; // k as printed in the source experiments' table
    int k;           // minimal k computed here
    std::uint64_t block_size;
    double p_final;
    double residual_leak;
    bool flagged; // computed k disagrees with the published one
};

/// Plans for the ten published p values at the given epsilon, flagging
/// rows where the minimal fold count disagrees with the printed table
/// (at eps = 0.0006 that is p = 0.90 and p = 0.70).
std::vector<SlowdownRow> slowdown_table(Epsilon eps);

} // namespace pafold
