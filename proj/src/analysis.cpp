#include "pafold/analysis.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace pafold {

SimulationReport summarize(std::span<const TrialResult> trials,
                           const SchemePreset& preset, const KeyRequest& req,
                           std::uint64_t seed) {
    if (trials.empty())
        throw std::invalid_argument("summarize needs at least one trial");

    SimulationReport rep;
    rep.scheme = preset.name;
    rep.p = preset.p.value();
    rep.fidelity = preset.fidelity;
    rep.k = req.fold_count;
    rep.final_bits = req.final_bits;
    rep.trials = trials.size();
    rep.seed = seed;

    rep.total_final_bits = 0;
    rep.eve_correct_final_bits = 0;
    rep.sift = SiftStats{};
    for (const TrialResult& t : trials) {
        rep.total_final_bits += t.alice_key.size();
        for (std::uint64_t i = 0; i < t.alice_key.size(); ++i)
            if (t.eve_key.bit(i) == t.alice_key.bit(i))
                ++rep.eve_correct_final_bits;
        rep.sift.generated += t.sift.generated;
        rep.sift.kept += t.sift.kept;
        rep.sift.discarded += t.sift.discarded;
    }

    rep.empirical_eve_rate = static_cast<double>(rep.eve_correct_final_bits) /
                             static_cast<double>(rep.total_final_bits);
    rep.bound_rate = closed_form_iterate(preset.p, req.fold_count).value();
    double sigma = std::sqrt(rep.bound_rate * (1.0 - rep.bound_rate) /
                             static_cast<double>(rep.total_final_bits));
    rep.std_devs = (rep.empirical_eve_rate - rep.bound_rate) / sigma;
    rep.slowdown = static_cast<double>(req.block_size());
    rep.raw_per_final = rep.slowdown / preset.fidelity;
    return rep;
}

std::string report_json(const SimulationReport& r) {
    nlohmann::ordered_json j;
    j["scheme"] = r.scheme;
    j["p"] = r.p;
    j["fidelity"] = r.fidelity;
    j["k"] = r.k;
    j["final_bits"] = r.final_bits;
    j["trials"] = r.trials;
    j["total_final_bits"] = r.total_final_bits;
    j["eve_correct_final_bits"] = r.eve_correct_final_bits;
    j["empirical_eve_rate"] = r.empirical_eve_rate;
    j["bound_rate"] = r.bound_rate;
    j["std_devs"] = r.std_devs;
    j["sift_generated"] = r.sift.generated;
    j["sift_kept"] = r.sift.kept;
    j["sift_discarded"] = r.sift.discarded;
    j["slowdown"] = r.slowdown;
    j["raw_per_final"] = r.raw_per_final;
    j["seed"] = r.seed;
    return j.dump(2) + "\n";
}

std::string report_summary(const SimulationReport& r) {
    std::ostringstream os;
    os.precision(6);
    os << "scheme " << r.scheme << "  p=" << r.p << "  fidelity=" << r.fidelity
       << "  k=" << r.k << "  slowdown=" << r.slowdown << "\n"
       << "final bits: " << r.total_final_bits
       << "  Eve correct: " << r.eve_correct_final_bits << " ("
       << r.empirical_eve_rate << ")\n"
       << "bound P^k(p) = " << r.bound_rate << "  distance "
       << r.std_devs << " binomial std devs\n"
       << "sift: kept " << r.sift.kept << " / " << r.sift.generated
       << " generated (" << r.sift.discarded << " discarded)\n";
    return os.str();
}

std::vector<SlowdownRow> slowdown_table(Epsilon eps) {
    // p values and fold counts as printed in the published table.
    static constexpr struct { double p; int k; } published[] = {
        {0.99, 9}, {0.90, 6}, {0.85, 5}, {0.80, 4}, {0.70, 4},
        {0.65, 3}, {0.60, 3}, {0.573, 2}, {0.55, 2}, {0.525, 2},
    };
    std::vector<SlowdownRow> rows;
    rows.reserve(std::size(published));
    for (const auto& entry : published) {
        PlanResult pl = plan(GuessProbability(entry.p), eps);
        rows.push_back(SlowdownRow{
            entry.p,
            entry.k,
            pl.k,
            pl.block_size,
            pl.p_final,
            pl.residual_leak,
            pl.k != entry.k,
        });
    }
    return rows;
}

} // namespace pafold
