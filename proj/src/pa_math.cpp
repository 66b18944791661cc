#include "pafold/pa_math.hpp"

#include <algorithm>
#include <cmath>

namespace pafold {

GuessProbability fold_polynomial(GuessProbability x) {
    double d = x.excess();
    return GuessProbability::from_excess(d * d);
}

GuessProbability iterate_fold(GuessProbability p, int l) {
    if (l < 0)
        throw std::domain_error("fold count must be nonnegative");
    double d = p.excess();
    for (int i = 0; i < l && d > 0.0; ++i)
        d *= d;
    return GuessProbability::from_excess(d);
}

GuessProbability closed_form_iterate(GuessProbability p, int l) {
    if (l < 0)
        throw std::domain_error("fold count must be nonnegative");
    double d = p.excess();
    if (d == 0.0 || l == 0)
        return l == 0 ? p : GuessProbability::from_excess(0.0);
    // d^(2^l) = exp2(2^l * log2 d); ldexp keeps the scaling exact and the
    // exponent saturates harmlessly for large l.
    double e = std::exp2(std::ldexp(std::log2(d), l));
    return GuessProbability::from_excess(std::min(e, p.excess()));
}

double delta_gap(GuessProbability x) {
    double v = x.value();
    return -2.0 * v * v + 3.0 * v - 1.0;
}

int k_min(GuessProbability p, Epsilon eps) {
    double d = p.excess();
    double bound = 2.0 * eps.value();
    if (d <= bound)
        return 0;
    // Smallest k with 2^k * ln d <= ln(2 eps).
    double log_d = std::log(d);
    double target = std::log(bound);
    int k = 0;
    while (std::ldexp(log_d, k) > target && k < kMaxFoldCount)
        ++k;
    // Settle boundary rounding against the iterate itself, which is what
    // the planner's guarantee is stated in terms of.
    while (iterate_fold(p, k).excess() > bound && k < kMaxFoldCount)
        ++k;
    while (k > 0 && iterate_fold(p, k - 1).excess() <= bound)
        --k;
    return k;
}

int k_bound(GuessProbability p, Epsilon eps) {
    if (p.excess() == 0.0)
        return 0;
    // l0: first iterate strictly below 0.75, where the recurrence becomes
    // a contraction. (Folding at exactly 0.75 too, else q = 1.)
    GuessProbability x = p;
    while (x.value() >= 0.75)
        x = fold_polynomial(x);
    double q = 4.0 * x.value() - 2.0;
    double head = std::max(0.0, (p.value() - 0.75) / delta_gap(p));
    double tail = std::log((1.0 - q) * eps.value() / delta_gap(x)) / std::log(q);
    double b = std::ceil(head + tail);
    return static_cast<int>(std::max(0.0, b));
}

double leak_fraction(double p) {
    if (!(p >= 0.5 && p <= 1.0))
        throw std::domain_error("leak is defined for p in [0.5, 1]");
    double miss = 1.0 - p;
    double acc = 1.0 + p * std::log2(p);
    if (miss > 0.0)
        acc += miss * std::log2(miss);
    return acc;
}

double leak_rate(double fs, double p) {
    if (!(fs > 0.0))
        throw std::domain_error("key-exchange frequency must be positive");
    return fs * leak_fraction(p);
}

double invert_leak(double target) {
    if (!(target >= 0.0 && target <= 1.0))
        throw std::domain_error("leak target must lie in [0, 1]");
    if (target == 0.0)
        return 0.5;
    if (target == 1.0)
        return 1.0;
    double lo = 0.5, hi = 1.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (leak_fraction(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

PlanResult plan(GuessProbability p, Epsilon eps) {
    int k = k_min(p, eps);
    GuessProbability p_final = iterate_fold(p, k);
    return PlanResult{
        k,
        std::uint64_t{1} << k,
        p_final.value(),
        leak_fraction(p_final.value()),
    };
}

} // namespace pafold
