#include "pafold.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "pafold/analysis.hpp"
#include "pafold/bitstring.hpp"
#include "pafold/channel_sim.hpp"
#include "pafold/keyfile.hpp"
#include "pafold/pa_math.hpp"

struct pa_bitstring {
    pafold::BitString value;
};

struct pa_report {
    pafold::SimulationReport report;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

pa_status fail(pa_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

template <typename Fn>
pa_status guarded(Fn&& fn) {
    try {
        fn();
        return PA_OK;
    } catch (const pafold::ShortageError& e) {
        return fail(PA_ERR_SHORTAGE, e.what());
    } catch (const pafold::KeyFileError& e) {
        return fail(PA_ERR_IO, e.what());
    } catch (const std::length_error& e) {
        return fail(PA_ERR_LENGTH, e.what());
    } catch (const std::domain_error& e) {
        return fail(PA_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(PA_ERR_USAGE, e.what());
    }
}

pa_status require(bool ok, const char* msg) {
    return ok ? PA_OK : fail(PA_ERR_USAGE, msg);
}

} // namespace

extern "C" {

const char* pa_status_name(pa_status s) {
    switch (s) {
    case PA_OK: return "ok";
    case PA_ERR_USAGE: return "usage";
    case PA_ERR_DOMAIN: return "domain";
    case PA_ERR_IO: return "io";
    case PA_ERR_SHORTAGE: return "shortage";
    case PA_ERR_LENGTH: return "length";
    }
    return "unknown";
}

const char* pa_last_error(void) { return g_last_error.c_str(); }

pa_status pa_fold_polynomial(double x, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::fold_polynomial(pafold::GuessProbability(x)).value();
    });
}

pa_status pa_iterate_fold(double p, int l, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::iterate_fold(pafold::GuessProbability(p), l).value();
    });
}

pa_status pa_closed_form_iterate(double p, int l, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::closed_form_iterate(pafold::GuessProbability(p), l).value();
    });
}

pa_status pa_delta_gap(double x, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::delta_gap(pafold::GuessProbability(x));
    });
}

pa_status pa_k_min(double p, double eps, int* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::k_min(pafold::GuessProbability(p), pafold::Epsilon(eps));
    });
}

pa_status pa_k_bound(double p, double eps, int* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        *out = pafold::k_bound(pafold::GuessProbability(p), pafold::Epsilon(eps));
    });
}

pa_status pa_leak(double p, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] { *out = pafold::leak_fraction(p); });
}

pa_status pa_leak_rate(double fs, double p, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] { *out = pafold::leak_rate(fs, p); });
}

pa_status pa_invert_leak(double target, double* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] { *out = pafold::invert_leak(target); });
}

pa_status pa_plan(double p, double eps, pa_plan_result* out) {
    if (pa_status s = require(out != nullptr, "null out"); s != PA_OK) return s;
    return guarded([&] {
        pafold::PlanResult pl =
            pafold::plan(pafold::GuessProbability(p), pafold::Epsilon(eps));
        *out = pa_plan_result{pl.k, pl.block_size, pl.p_final, pl.residual_leak};
    });
}

pa_status pa_bitstring_create(const unsigned char* bits, uint64_t count,
                              pa_bitstring** out) {
    if (pa_status s = require(out && (bits || count == 0), "null argument");
        s != PA_OK)
        return s;
    return guarded([&] {
        auto handle = std::make_unique<pa_bitstring>();
        for (uint64_t i = 0; i < count; ++i) {
            if (bits[i] > 1)
                throw std::domain_error("bit values must be 0 or 1");
            handle->value.append(bits[i] != 0);
        }
        *out = handle.release();
    });
}

void pa_bitstring_free(pa_bitstring* s) { delete s; }

uint64_t pa_bitstring_size(const pa_bitstring* s) {
    return s ? s->value.size() : 0;
}

pa_status pa_bitstring_bit(const pa_bitstring* s, uint64_t index, int* out) {
    if (pa_status st = require(s && out, "null argument"); st != PA_OK)
        return st;
    if (index >= s->value.size())
        return fail(PA_ERR_LENGTH, "bit index out of range");
    *out = s->value.bit(index) ? 1 : 0;
    return PA_OK;
}

pa_status pa_xor_fold(const pa_bitstring* s, pa_bitstring** out) {
    if (pa_status st = require(s && out, "null argument"); st != PA_OK)
        return st;
    return guarded([&] {
        *out = new pa_bitstring{pafold::xor_fold(s->value)};
    });
}

pa_status pa_fold_times(const pa_bitstring* s, int k, pa_bitstring** out) {
    if (pa_status st = require(s && out, "null argument"); st != PA_OK)
        return st;
    return guarded([&] {
        *out = new pa_bitstring{pafold::fold_times(s->value, k)};
    });
}

pa_status pa_distill(const pa_bitstring* raw, uint64_t final_bits, int k,
                     pa_bitstring** key_out, uint64_t* surplus_out) {
    if (pa_status st = require(raw && key_out, "null argument"); st != PA_OK)
        return st;
    return guarded([&] {
        pafold::DistillResult res =
            pafold::distill(raw->value, pafold::KeyRequest(final_bits, k));
        if (surplus_out)
            *surplus_out = res.surplus_bits;
        *key_out = new pa_bitstring{std::move(res.key)};
    });
}

pa_status pa_keyfile_read(const char* path, pa_bitstring** out) {
    if (pa_status st = require(path && out, "null argument"); st != PA_OK)
        return st;
    return guarded([&] {
        *out = new pa_bitstring{pafold::read_keyfile(path)};
    });
}

pa_status pa_keyfile_write(const char* path, const pa_bitstring* s) {
    if (pa_status st = require(path && s, "null argument"); st != PA_OK)
        return st;
    return guarded([&] { pafold::write_keyfile(path, s->value); });
}

pa_status pa_bitstring_hex(const pa_bitstring* s, char* buf, size_t cap) {
    if (pa_status st = require(s && buf, "null argument"); st != PA_OK)
        return st;
    std::string hex = pafold::to_hex(s->value);
    if (cap < hex.size() + 1)
        return fail(PA_ERR_LENGTH, "hex buffer too small");
    std::memcpy(buf, hex.c_str(), hex.size() + 1);
    return PA_OK;
}

pa_status pa_preset(const char* name, double* p_out, double* fidelity_out) {
    if (pa_status st = require(name && p_out && fidelity_out, "null argument");
        st != PA_OK)
        return st;
    return guarded([&] {
        pafold::SchemePreset preset = pafold::preset_by_name(name);
        *p_out = preset.p.value();
        *fidelity_out = preset.fidelity;
    });
}

pa_status pa_simulate(const char* scheme, double p, double fidelity,
                      uint64_t final_bits, int k, uint64_t seed,
                      pa_report** out) {
    if (pa_status st = require(scheme && out, "null argument"); st != PA_OK)
        return st;
    return guarded([&] {
        pafold::SchemePreset preset =
            std::string_view(scheme) == "custom"
                ? pafold::custom_preset(pafold::GuessProbability(p), fidelity)
                : pafold::preset_by_name(scheme);
        pafold::KeyRequest req(final_bits, k);
        pafold::TrialResult trial = pafold::run_trial(preset, req, seed);
        auto rep = std::make_unique<pa_report>();
        rep->report = pafold::summarize({&trial, 1}, preset, req, seed);
        rep->json = pafold::report_json(rep->report);
        rep->text = pafold::report_summary(rep->report);
        *out = rep.release();
    });
}

const char* pa_report_json(const pa_report* r) {
    return r ? r->json.c_str() : "";
}

const char* pa_report_text(const pa_report* r) {
    return r ? r->text.c_str() : "";
}

pa_status pa_report_value(const pa_report* r, const char* key, double* out) {
    if (pa_status st = require(r && key && out, "null argument"); st != PA_OK)
        return st;
    const pafold::SimulationReport& rep = r->report;
    std::string_view k(key);
    if (k == "p") *out = rep.p;
    else if (k == "fidelity") *out = rep.fidelity;
    else if (k == "k") *out = rep.k;
    else if (k == "final_bits") *out = static_cast<double>(rep.final_bits);
    else if (k == "trials") *out = static_cast<double>(rep.trials);
    else if (k == "total_final_bits") *out = static_cast<double>(rep.total_final_bits);
    else if (k == "eve_correct_final_bits") *out = static_cast<double>(rep.eve_correct_final_bits);
    else if (k == "empirical_eve_rate") *out = rep.empirical_eve_rate;
    else if (k == "bound_rate") *out = rep.bound_rate;
    else if (k == "std_devs") *out = rep.std_devs;
    else if (k == "sift_generated") *out = static_cast<double>(rep.sift.generated);
    else if (k == "sift_kept") *out = static_cast<double>(rep.sift.kept);
    else if (k == "sift_discarded") *out = static_cast<double>(rep.sift.discarded);
    else if (k == "slowdown") *out = rep.slowdown;
    else if (k == "raw_per_final") *out = rep.raw_per_final;
    else if (k == "seed") *out = static_cast<double>(rep.seed);
    else return fail(PA_ERR_USAGE, "unknown report field");
    return PA_OK;
}

void pa_report_free(pa_report* r) { delete r; }

pa_status pa_table(double eps, pa_table_row* rows, int capacity,
                   int* count_out) {
    if (pa_status st = require(rows != nullptr || capacity == 0, "null rows");
        st != PA_OK)
        return st;
    return guarded([&] {
        std::vector<pafold::SlowdownRow> table =
            pafold::slowdown_table(pafold::Epsilon(eps));
        int n = static_cast<int>(table.size());
        for (int i = 0; i < n && i < capacity; ++i) {
            const pafold::SlowdownRow& r = table[static_cast<size_t>(i)];
            rows[i] = pa_table_row{r.p,       r.published_k, r.k,
                                   r.block_size, r.p_final,  r.residual_leak,
                                   r.flagged ? 1 : 0};
        }
        if (count_out)
            *count_out = n;
    });
}

} // extern "C"
