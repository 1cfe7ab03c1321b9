#include "lqn/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lqn/bounds.hpp"
#include "lqn/coloring.hpp"
#include "lqn/geometry.hpp"

namespace lqn {

namespace {

double mean_of(std::uint64_t total, std::uint64_t trials, std::uint64_t denom) {
    return static_cast<double>(total) / (static_cast<double>(trials) * static_cast<double>(denom));
}

// Standard error of the mean per-trial fraction from integer sums.
double sigma_of(std::uint64_t total, std::uint64_t total_sq, std::uint64_t trials,
                std::uint64_t denom) {
    if (trials < 2) return 0.0;
    const double t = static_cast<double>(trials);
    const double mean = static_cast<double>(total) / t;
    double var = (static_cast<double>(total_sq) - t * mean * mean) / (t - 1.0);
    if (var < 0) var = 0;
    return std::sqrt(var / t) / static_cast<double>(denom);
}

}  // namespace

double McStats::att_freq() const { return mean_of(att_unmet, trials, att_per_trial); }
double McStats::att_sigma() const { return sigma_of(att_unmet, att_unmet_sq, trials, att_per_trial); }
double McStats::tatta_freq() const { return mean_of(tatta_unmet, trials, tatta_per_trial); }
double McStats::tatta_sigma() const {
    return sigma_of(tatta_unmet, tatta_unmet_sq, trials, tatta_per_trial);
}
double McStats::any_fail_freq() const {
    return static_cast<double>(trials_with_failure) / static_cast<double>(trials);
}
double McStats::any_fail_sigma() const {
    const double p = any_fail_freq();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double McStats::att_analytic() const {
    const double nd = static_cast<double>(n);
    return std::pow(1.0 - 1.0 / (nd * nd), static_cast<double>(q * q));
}
double McStats::tatta_analytic() const {
    const double nd = static_cast<double>(n);
    return std::pow(1.0 - 1.0 / nd, static_cast<double>(q - 1));
}

std::string McStats::to_json() const {
    nlohmann::json j{{"q", q},
                     {"n", n},
                     {"trials", trials},
                     {"seed", base_seed},
                     {"att", {{"empirical", att_freq()},
                              {"analytic", att_analytic()},
                              {"sigma", att_sigma()}}},
                     {"tatta", {{"empirical", tatta_freq()},
                                {"analytic", tatta_analytic()},
                                {"sigma", tatta_sigma()}}},
                     {"any_fail", {{"empirical", any_fail_freq()},
                                   {"sigma", any_fail_sigma()},
                                   {"union_bound", union_bound}}}};
    return j.dump();
}

McStats mc_estimate(unsigned long q, unsigned long n, unsigned long trials,
                    std::uint64_t base_seed, unsigned threads) {
    if (n < 2) throw std::invalid_argument("mc_estimate needs n >= 2");
    if (trials < 1) throw std::invalid_argument("mc_estimate needs trials >= 1");
    const LabelMatrix base = build_doubled(q);
    const AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), static_cast<unsigned>(n));
    const unsigned sq = static_cast<unsigned>(q * q);

    McStats st;
    st.q = q;
    st.n = n;
    st.trials = trials;
    st.base_seed = base_seed;
    st.att_per_trial = static_cast<std::uint64_t>(sq) * (sq - 1) * n * n;  // 2 C(sq,2) n^2
    st.tatta_per_trial = static_cast<std::uint64_t>(sq) * sq * (q + 1) * n;
    st.union_bound = union_bound_value(q, n);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads > trials) threads = static_cast<unsigned>(trials);

    struct Tally {
        std::uint64_t att = 0, att_sq = 0, tatta = 0, tatta_sq = 0, failed = 0;
    };
    std::vector<Tally> tallies(threads);

    auto worker = [&](unsigned tid) {
        Tally& tl = tallies[tid];
        for (unsigned long t = tid; t < trials; t += threads) {
            LabelMatrix m = randomize_t_colors(base, static_cast<unsigned>(n),
                                               base_seed + t);
            ColoringEngine eng(m, s);
            // Counting pass: scan every need directly off the engine masks.
            std::uint64_t att = 0, tatta1 = 0;
            bool any = false;
            for (unsigned c = 0; c < 2; ++c) {
                const unsigned b = c * sq;
                for (unsigned u = b; u < b + sq; ++u)
                    for (unsigned v = u + 1; v < b + sq; ++v)
                        att += eng.count_unmet_att(u, v);
            }
            for (unsigned u = 0; u < sq; ++u)
                for (unsigned v = sq; v < 2 * sq; ++v) {
                    auto [o1, o2] = eng.count_unmet_tatta(u, v);
                    tatta1 += o1;
                    if (o1 || o2) any = true;
                }
            if (att) any = true;
            tl.att += att;
            tl.att_sq += att * att;
            tl.tatta += tatta1;
            tl.tatta_sq += tatta1 * tatta1;
            if (any) ++tl.failed;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& tl : tallies) {
        st.att_unmet += tl.att;
        st.att_unmet_sq += tl.att_sq;
        st.tatta_unmet += tl.tatta;
        st.tatta_unmet_sq += tl.tatta_sq;
        st.trials_with_failure += tl.failed;
    }
    return st;
}

}  // namespace lqn
