#include "pafold/channel_sim.hpp"

#include <utility>

namespace pafold {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One word per (seed, index, slot); slots 0..2 cover Alice's bit, Bob's
// agreement draw and Eve's guess draw.
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t slot) {
    return mix64(mix64(mix64(seed) ^ index) ^ (slot * 0xd1342543de82ef95ULL));
}

double uniform01(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

} // namespace

SchemePreset::SchemePreset(std::string n, GuessProbability prob, double fid)
    : name(std::move(n)), p(prob), fidelity(fid) {
    if (!(fid > 0.0 && fid <= 1.0))
        throw std::domain_error("fidelity must lie in (0, 1]");
}

SchemePreset kljn_preset() {
    return SchemePreset{"kljn", GuessProbability(0.525), 0.9998};
}

SchemePreset ufl_preset() {
    return SchemePreset{"ufl", GuessProbability(0.65), 0.994};
}

SchemePreset liu_preset() {
    return SchemePreset{"liu", GuessProbability(0.573), 0.918};
}

SchemePreset custom_preset(GuessProbability p, double fidelity) {
    return SchemePreset{"custom", p, fidelity};
}

SchemePreset preset_by_name(std::string_view name) {
    if (name == "kljn")
        return kljn_preset();
    if (name == "ufl")
        return ufl_preset();
    if (name == "liu")
        return liu_preset();
    throw std::domain_error("unknown scheme preset: " + std::string(name));
}

RawExchangeRecord make_record(const SchemePreset& preset, std::uint64_t seed,
                              std::uint64_t index) {
    bool alice = stream_word(seed, index, 0) & 1;
    bool agree = uniform01(stream_word(seed, index, 1)) < preset.fidelity;
    bool eve_right = uniform01(stream_word(seed, index, 2)) < preset.p.value();
    bool bob = agree ? alice : !alice;
    return RawExchangeRecord{
        alice,
        bob,
        eve_right ? alice : !alice,
        alice == bob, // every mismatch is detected by the broadcast compare
    };
}

std::pair<std::vector<RawExchangeRecord>, SiftStats>
exchange_raw(const SchemePreset& preset, std::uint64_t n, std::uint64_t seed,
             const DiscardPredicate& extra_discard) {
    if (n == 0)
        throw std::invalid_argument("at least one exchange attempt required");
    std::vector<RawExchangeRecord> records;
    records.reserve(n);
    SiftStats stats;
    for (std::uint64_t i = 0; i < n; ++i) {
        RawExchangeRecord r = make_record(preset, seed, i);
        if (r.kept && extra_discard && extra_discard(r))
            r.kept = false;
        ++stats.generated;
        (r.kept ? stats.kept : stats.discarded)++;
        records.push_back(r);
    }
    return {std::move(records), stats};
}

bool eve_folded_guess(const std::vector<RawExchangeRecord>& block, int k) {
    if (k < 0 || k > kMaxFoldCount ||
        block.size() != (std::uint64_t{1} << k))
        throw std::length_error("block size must be exactly 2^k");
    bool g = false;
    for (const auto& r : block)
        g ^= r.eve_guess;
    return g;
}

TrialResult run_trial(const SchemePreset& preset, const KeyRequest& req,
                      std::uint64_t seed) {
    std::uint64_t needed = req.raw_bits_needed();
    BitString alice_raw, bob_raw, eve_raw;
    SiftStats stats;
    for (std::uint64_t index = 0; stats.kept < needed; ++index) {
        RawExchangeRecord r = make_record(preset, seed, index);
        ++stats.generated;
        if (!r.kept) {
            ++stats.discarded;
            continue;
        }
        ++stats.kept;
        alice_raw.append(r.alice_bit);
        bob_raw.append(r.bob_bit);
        eve_raw.append(r.eve_guess);
    }
    TrialResult out;
    out.alice_key = distill(alice_raw, req).key;
    out.bob_key = distill(bob_raw, req).key;
    out.eve_key = distill(eve_raw, req).key;
    out.sift = stats;
    return out;
}

} // namespace pafold
