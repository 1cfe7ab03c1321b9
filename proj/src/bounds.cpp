#include "lqn/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lqn/gf.hpp"

namespace lqn {

double union_bound_value(unsigned long q, unsigned long n) {
    if (q < 2 || n < 1) throw std::invalid_argument("union_bound_value needs q >= 2, n >= 1");
    const long double lq = static_cast<long double>(q);
    const long double ln = static_cast<long double>(n);
    // log of 2 C(q^2,2) n^2 (1-1/n^2)^{q^2}; the leading 2 cancels the /2 in
    // the binomial.
    long double log_att = 2 * std::log(lq) + std::log(lq * lq - 1) + 2 * std::log(ln) +
                          lq * lq * std::log1p(-1.0L / (ln * ln));
    // log of q^4 2n(q+1) (1-1/n)^{q-1}
    long double log_tatta = 4 * std::log(lq) + std::log(2.0L * ln) + std::log(lq + 1) +
                            (lq - 1) * std::log1p(-1.0L / ln);
    long double value = std::exp(log_att) + std::exp(log_tatta);
    return static_cast<double>(value);
}

LllCheck lll_satisfied(unsigned long q, unsigned long n) {
    const double lhs = 1.0 + std::log(8.0) + std::log(static_cast<double>(n)) +
                       2.0 * std::log(static_cast<double>(q)) +
                       std::log(static_cast<double>(q) + 1.0);
    const double rhs = (static_cast<double>(q) - 1.0) *
                       (std::log(static_cast<double>(n)) - std::log(static_cast<double>(n) - 1.0));
    return {lhs <= rhs, lhs, rhs};
}

bool lll_product_ok(unsigned long q, unsigned long n) {
    const double qd = static_cast<double>(q), nd = static_cast<double>(n);
    const double p = 2.0 * nd * (qd + 1.0) * std::pow(1.0 - 1.0 / nd, qd - 1.0);
    return std::exp(1.0) * 4.0 * qd * qd * p <= 1.0;
}

bool lll_pmax_ok(unsigned long q, unsigned long n) {
    const long double qd = static_cast<long double>(q), nd = static_cast<long double>(n);
    const long double log_tatta =
        std::log(2.0L * nd) + std::log(qd + 1.0L) + (qd - 1.0L) * std::log1p(-1.0L / nd);
    const long double log_att = 2.0L * std::log(nd) + qd * qd * std::log1p(-1.0L / (nd * nd));
    const long double log_p = std::max(log_tatta, log_att);
    return 1.0L + std::log(4.0L * qd * qd) + log_p <= 0.0L;
}

BoundsReport bounds_report(unsigned long q, unsigned long n) {
    BoundsReport r;
    r.q = q;
    r.n = n;
    r.union_bound = union_bound_value(q, n);
    LllCheck c = lll_satisfied(q, n);
    r.lll_lhs = c.lhs;
    r.lll_rhs = c.rhs;
    r.union_ok = r.union_bound < 1.0;
    r.lll_ok = c.ok;
    r.legacy_ok = q > 2304 * n * n + 1;
    r.infeasible = 2 * n > q;
    return r;
}

std::string BoundsReport::to_json() const {
    nlohmann::json j{{"q", q},
                     {"n", n},
                     {"union_bound_value", union_bound},
                     {"lll_lhs", lll_lhs},
                     {"lll_rhs", lll_rhs},
                     {"union_ok", union_ok},
                     {"lll_ok", lll_ok},
                     {"legacy_ok", legacy_ok},
                     {"infeasible", infeasible}};
    return j.dump();
}

std::vector<ThresholdRow> threshold_table(unsigned long n_min, unsigned long n_max) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("need 2 <= n_min <= n_max");
    constexpr unsigned long kScanCap = 1000000;
    std::vector<ThresholdRow> rows;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        ThresholdRow row{n, 0, 0};
        for (unsigned long q = 2; !(row.q_union && row.q_lll); q = next_prime_power(q)) {
            if (q > kScanCap) throw std::runtime_error("prime power scan cap exceeded");
            if (!row.q_union && union_bound_value(q, n) < 1.0) row.q_union = q;
            if (!row.q_lll && lll_satisfied(q, n).ok) row.q_lll = q;
        }
        rows.push_back(row);
    }
    return rows;
}

std::optional<unsigned long> min_n_for_epsilon(double eps, unsigned long cap) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const unsigned long kPersist = 100;
    auto holds = [eps](unsigned long n) {
        double nd = static_cast<double>(n);
        double qd = std::ceil(nd * std::pow(std::log(nd), 1.0 + eps));
        if (qd < 1.0) return false;
        // Beyond any representable q the rhs (q-1)log(n/(n-1)) >= (q-1)/n
        // dwarfs the logarithmic lhs.
        if (qd > 1e15) return true;
        return lll_satisfied(static_cast<unsigned long>(qd), n).ok;
    };
    unsigned long run_start = 0, run_len = 0;
    for (unsigned long n = 2; n <= cap + kPersist; ++n) {
        if (holds(n)) {
            if (run_len == 0) run_start = n;
            if (++run_len == kPersist + 1) return run_start;
        } else {
            run_len = 0;
            if (n > cap) break;
        }
    }
    return std::nullopt;
}

std::string figure1_csv(unsigned long n_min, unsigned long n_max) {
    std::ostringstream out;
    out << "n,q_union,q_lll\n";
    if (n_min > n_max) return out.str();
    for (const auto& row : threshold_table(n_min, n_max))
        out << row.n << "," << row.q_union << "," << row.q_lll << "\n";
    return out.str();
}

std::string figure2_csv(const std::vector<double>& eps_grid, unsigned long cap) {
    std::ostringstream out;
    out << "epsilon,n_min\n";
    for (double eps : eps_grid) {
        auto n = min_n_for_epsilon(eps, cap);
        out << eps << ",";
        if (n)
            out << *n;
        else
            out << "NA";
        out << "\n";
    }
    return out.str();
}

}  // namespace lqn
