#pragma once

// Numerical core of the XOR-fold privacy amplification scheme: the
// eavesdropper success recurrence P(x) = 2x^2 - 2x + 1, its iterates,
// the fold-count planner, the analytic convergence bound, and the
// Shannon leak fraction with its inversion.
//
// Probabilities near 0.5 are handled in "excess" form d = 2p - 1.
// One fold squares the excess (d -> d^2), so iterates stay accurate
// even when P^l(p) - 0.5 is far below machine epsilon.

#include <cstdint>
#include <stdexcept>

namespace pafold {

/// Eve's per-bit correct-guess probability, constrained to [0.5, 1).
/// Stored internally as the excess d = 2p - 1.
class GuessProbability {
public:
    explicit GuessProbability(double value)
        : excess_(2.0 * value - 1.0) {
        if (!(value >= 0.5 && value < 1.0))
            throw std::domain_error("guess probability must lie in [0.5, 1)");
    }

    static GuessProbability from_excess(double d) {
        if (!(d >= 0.0 && d < 1.0))
            throw std::domain_error("excess must lie in [0, 1)");
        GuessProbability g;
        g.excess_ = d;
        return g;
    }

    double value() const noexcept { return 0.5 + 0.5 * excess_; }
    double excess() const noexcept { return excess_; }

    friend bool operator==(GuessProbability a, GuessProbability b) noexcept {
        return a.excess_ == b.excess_;
    }

private:
    GuessProbability() = default;
    double excess_ = 0.0;
};

/// Tolerated distance of Eve's final per-bit success probability above 0.5.
class Epsilon {
public:
    explicit Epsilon(double value) : value_(value) {
        if (!(value > 0.0 && value < 0.5))
            throw std::domain_error("epsilon must lie in (0, 0.5)");
    }
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Fold iteration counts are plain ints; block sizes 2^k must fit in a
// 64-bit unsigned, hence the cap.
inline constexpr int kMaxFoldCount = 62;

struct PlanResult {
    int k;                      // fold iterations
    std::uint64_t block_size;   // 2^k raw bits per final bit
    double p_final;             // P^k(p)
    double residual_leak;       // leak_fraction(p_final)
};

/// One application of the success recurrence: P(x) = 2x^2 - 2x + 1.
/// Computed as d -> d^2 on the excess, so P(x) - 0.5 never cancels.
GuessProbability fold_polynomial(GuessProbability x);

/// l-fold iterate P^l(p), by repeated squaring of the excess.
GuessProbability iterate_fold(GuessProbability p, int l);

/// Closed form of the iterate, (1 + (2p-1)^(2^l)) / 2, evaluated in the
/// log domain. Independent cross-check for iterate_fold.
GuessProbability closed_form_iterate(GuessProbability p, int l);

/// Per-step progress toward the fixpoint: Delta(x) = x - P(x).
double delta_gap(GuessProbability x);

/// Smallest k with P^k(p) <= 0.5 + eps, equivalently (2p-1)^(2^k) <= 2 eps.
/// Solved in the log domain so it is exact even where direct iteration
/// would underflow.
int k_min(GuessProbability p, Epsilon eps);

/// Analytic upper bound on the required fold count, from the Lipschitz
/// constant q = 4 P^(l0)(p) - 2 of the recurrence below 0.75:
///   ceil( max(0, (p - 0.75)/Delta(p)) + log_q((1-q) eps / Delta(P^(l0)(p))) )
/// Always >= k_min and the iterate at the bound meets the target.
int k_bound(GuessProbability p, Epsilon eps);

/// Fraction of information leaked per exchanged key bit toward Eve:
/// 1 + p log2 p + (1-p) log2 (1-p), with the 0 log 0 = 0 convention.
/// Accepts the closed interval [0.5, 1]; strictly increasing on it.
double leak_fraction(double p);

/// Leak rate in bits per second at key-exchange frequency fs.
double leak_rate(double fs, double p);

/// Unique p in [0.5, 1] with leak_fraction(p) == target, by bisection to
/// 1e-12 in p.
///
/// Note: the source experiments quote p ~ 0.5006 for a 1e-8 leak target,
/// but inverting the leak formula gives p ~ 0.50006 (leak(0.5006) is
/// about 1.04e-6). This function returns the formula's inversion.
double invert_leak(double target);

/// Full plan for reaching the target: minimal k, block size 2^k, the
/// resulting P^k(p) and its residual leak.
PlanResult plan(GuessProbability p, Epsilon eps);

} // namespace pafold
