/*
 * pafold — C API for the XOR-fold privacy amplification toolkit.
 *
 * All functions return a pa_status code (PA_OK on success) and deliver
 * results through out-parameters. Handles (pa_bitstring, pa_report) are
 * opaque and must be released with the matching _free call. The library
 * keeps a thread-local message for the last failure, readable via
 * pa_last_error().
 */
#ifndef PAFOLD_H
#define PAFOLD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
    PA_OK = 0,
    PA_ERR_USAGE = 1,    /* bad call: null pointer, unknown name, ...   */
    PA_ERR_DOMAIN = 2,   /* numeric argument outside its valid range     */
    PA_ERR_IO = 3,       /* file unreadable, unwritable or malformed     */
    PA_ERR_SHORTAGE = 4, /* not enough raw bits for the request          */
    PA_ERR_LENGTH = 5    /* bit-count constraint violated (parity, 2^k)  */
} pa_status;

const char* pa_status_name(pa_status s);

/* Message describing the most recent failure on this thread. */
const char* pa_last_error(void);

/* ---- numerical core ------------------------------------------------ */

/* P(x) = 2x^2 - 2x + 1 for x in [0.5, 1). */
pa_status pa_fold_polynomial(double x, double* out);

/* l-th iterate P^l(p). */
pa_status pa_iterate_fold(double p, int l, double* out);

/* Closed form (1 + (2p-1)^(2^l))/2; independent check of the iterate. */
pa_status pa_closed_form_iterate(double p, int l, double* out);

/* Delta(x) = x - P(x). */
pa_status pa_delta_gap(double x, double* out);

/* Smallest k with P^k(p) <= 0.5 + eps. */
pa_status pa_k_min(double p, double eps, int* out);

/* Analytic upper bound on the fold count; >= pa_k_min. */
pa_status pa_k_bound(double p, double eps, int* out);

/* Leak fraction 1 + p log2 p + (1-p) log2 (1-p), p in [0.5, 1]. */
pa_status pa_leak(double p, double* out);

/* fs * leak(p), fs > 0 in bits per second. */
pa_status pa_leak_rate(double fs, double p, double* out);

/* Unique p in [0.5, 1] with leak(p) == target. */
pa_status pa_invert_leak(double target, double* out);

typedef struct pa_plan_result {
    int k;
    uint64_t block_size;
    double p_final;
    double residual_leak;
} pa_plan_result;

pa_status pa_plan(double p, double eps, pa_plan_result* out);

/* ---- bit strings and key files ------------------------------------- */

typedef struct pa_bitstring pa_bitstring;

/* bits[i] must be 0 or 1; count may be 0 (bits may then be NULL). */
pa_status pa_bitstring_create(const unsigned char* bits, uint64_t count,
                              pa_bitstring** out);
void pa_bitstring_free(pa_bitstring* s);

uint64_t pa_bitstring_size(const pa_bitstring* s);
pa_status pa_bitstring_bit(const pa_bitstring* s, uint64_t index, int* out);

pa_status pa_xor_fold(const pa_bitstring* s, pa_bitstring** out);
pa_status pa_fold_times(const pa_bitstring* s, int k, pa_bitstring** out);

/* Distill final_bits key bits from raw blocks of 2^k; surplus_out (may
 * be NULL) receives the ignored raw-bit count. */
pa_status pa_distill(const pa_bitstring* raw, uint64_t final_bits, int k,
                     pa_bitstring** key_out, uint64_t* surplus_out);

/* Key file: "PAK1" magic, u64 LE bit count, MSB-first packed payload. */
pa_status pa_keyfile_read(const char* path, pa_bitstring** out);
pa_status pa_keyfile_write(const char* path, const pa_bitstring* s);

/* Hex of the packed payload; buf receives a NUL-terminated string and
 * needs ceil(bits/8)*2 + 1 bytes. */
pa_status pa_bitstring_hex(const pa_bitstring* s, char* buf, size_t cap);

/* ---- schemes, simulation, reports ---------------------------------- */

/* "kljn", "ufl" or "liu"; fills the preset's p and fidelity. */
pa_status pa_preset(const char* name, double* p_out, double* fidelity_out);

typedef struct pa_report pa_report;

/* Run one Monte-Carlo trial of final_bits key bits with fold count k.
 * scheme is "kljn", "ufl", "liu" or "custom"; p/fidelity are only read
 * for "custom". Deterministic in (scheme, p, fidelity, final_bits, k,
 * seed). */
pa_status pa_simulate(const char* scheme, double p, double fidelity,
                      uint64_t final_bits, int k, uint64_t seed,
                      pa_report** out);

/* JSON object with fixed key order; owned by the report handle. */
const char* pa_report_json(const pa_report* r);

/* Human-readable summary; owned by the report handle. */
const char* pa_report_text(const pa_report* r);

/* Numeric field lookup by JSON key name. */
pa_status pa_report_value(const pa_report* r, const char* key, double* out);

void pa_report_free(pa_report* r);

/* ---- published-table reproduction ---------------------------------- */

typedef struct pa_table_row {
    double p;
    int published_k;
    int k;
    uint64_t block_size;
    double p_final;
    double residual_leak;
    int flagged; /* computed k differs from the published one */
} pa_table_row;

#define PA_TABLE_ROWS 10

/* Fills up to capacity rows; *count_out receives PA_TABLE_ROWS. */
pa_status pa_table(double eps, pa_table_row* rows, int capacity,
                   int* count_out);

#ifdef __cplusplus
}
#endif

#endif /* PAFOLD_H */
