#pragma once

// Monte-Carlo model of raw-bit exchange for the classical key
// distribution schemes: Alice/Bob agreement with finite fidelity,
// broadcast-compare sifting that discards every detected mismatch, and
// a passive Eve who guesses each retained raw bit correctly with
// probability p.
//
// Randomness is a counter-based stream: every (seed, record index,
// slot) triple maps through a SplitMix64 finalizer chain to one 64-bit
// word, so results are independent of chunking and execution order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pafold/bitstring.hpp"
#include "pafold/pa_math.hpp"

namespace pafold {

struct SchemePreset {
    std::string name;
    GuessProbability p;
    double fidelity; // in (0, 1]

    SchemePreset(std::string name, GuessProbability p, double fidelity);
};

SchemePreset kljn_preset();   // p = 0.525, fidelity 99.98%
SchemePreset ufl_preset();    // p = 0.65,  fidelity 99.4%
SchemePreset liu_preset();    // p = 0.573, fidelity 91.8%
SchemePreset custom_preset(GuessProbability p, double fidelity);

/// Lookup by lower-case name ("kljn", "ufl", "liu"); throws on unknown.
SchemePreset preset_by_name(std::string_view name);

struct RawExchangeRecord {
    bool alice_bit;
    bool bob_bit;
    bool eve_guess;
    bool kept;
};

struct SiftStats {
    std::uint64_t generated = 0;
    std::uint64_t kept = 0;
    std::uint64_t discarded = 0;
};

/// Extra discard hook for high-risk bits; return true to drop a record
/// that sifting alone would have kept.
using DiscardPredicate = std::function<bool(const RawExchangeRecord&)>;

/// The record at a given stream index; pure in (preset, seed, index).
RawExchangeRecord make_record(const SchemePreset& preset, std::uint64_t seed,
                              std::uint64_t index);

/// Generate n raw exchange attempts from stream indices 0..n-1.
std::pair<std::vector<RawExchangeRecord>, SiftStats>
exchange_raw(const SchemePreset& preset, std::uint64_t n, std::uint64_t seed,
             const DiscardPredicate& extra_discard = {});

/// Eve's best passive guess for a folded block: XOR of her per-bit
/// guesses, correct exactly when an even number of them are wrong.
bool eve_folded_guess(const std::vector<RawExchangeRecord>& block, int k);

struct TrialResult {
    BitString alice_key;
    BitString bob_key;
    BitString eve_key;
    SiftStats sift;
};

/// Keep exchanging raw bits until L * 2^k survive sifting, then distill
/// Alice's bits, Bob's bits, and Eve's guesses into final keys.
/// Alice's and Bob's keys are always identical.
TrialResult run_trial(const SchemePreset& preset, const KeyRequest& req,
                      std::uint64_t seed);

} // namespace pafold
