#pragma once

#include <cstdint>
#include <string>

namespace lqn {

// Monte Carlo estimate of the per-edge failure calculus over fresh uniform
// t-colorings of the doubled square. Trial t colors with seed base_seed + t,
// so trials are independent and the totals are integer sums, identical for
// any thread count.
struct McStats {
    unsigned long q = 0, n = 0;
    unsigned long trials = 0;
    std::uint64_t base_seed = 0;

    // (a-edge, ordered (t_i,t_j)) needs with no witness, over all trials.
    std::uint64_t att_unmet = 0;
    std::uint64_t att_unmet_sq = 0;  // sum of squared per-trial counts
    std::uint64_t att_per_trial = 0; // #a-edges * n^2
    // (t-edge, (a_k,t_j)) first-orientation needs with no witness.
    std::uint64_t tatta_unmet = 0;
    std::uint64_t tatta_unmet_sq = 0;
    std::uint64_t tatta_per_trial = 0;  // #t-edges * (q+1) * n
    // Trials in which some edge fails any need (both conditions, both
    // orientations).
    std::uint64_t trials_with_failure = 0;

    double union_bound = 0;  // analytic bound on any_fail_freq

    double att_freq() const;            // mean per-trial fraction
    double att_sigma() const;           // standard error of that mean
    double tatta_freq() const;
    double tatta_sigma() const;
    double any_fail_freq() const;
    double any_fail_sigma() const;

    double att_analytic() const;    // (1 - 1/n^2)^{q^2}
    double tatta_analytic() const;  // (1 - 1/n)^{q-1}

    std::string to_json() const;
};

McStats mc_estimate(unsigned long q, unsigned long n, unsigned long trials,
                    std::uint64_t base_seed, unsigned threads = 1);

}  // namespace lqn
