#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lqn {

// Value of the union-bound expression over all edges of the doubled square:
//
//   2 C(q^2,2) n^2 (1 - 1/n^2)^{q^2}  +  q^4 2n(q+1) (1 - 1/n)^{q-1}
//
// Addends are evaluated in log space and summed in extended precision, so
// neither C(q^2,2) nor the powers overflow/underflow on the way. n = 1 gives
// exactly 0 (both per-edge probabilities vanish).
double union_bound_value(unsigned long q, unsigned long n);

struct LllCheck {
    bool ok;     // lhs <= rhs
    double lhs;  // 1 + log 8 + log n + 2 log q + log(q+1)
    double rhs;  // (q-1) log(n/(n-1))
};

// The local-lemma condition e * 4q^2 * 2n(q+1)(1-1/n)^{q-1} <= 1 in its log
// form; natural logarithms throughout.
LllCheck lll_satisfied(unsigned long q, unsigned long n);

// Same condition evaluated as a direct floating-point product; agrees with
// the log form away from |lhs-rhs| ~ 1e-9 borderlines.
bool lll_product_ok(unsigned long q, unsigned long n);

// Variant with the event probability max of both edge types (the Att bound
// n^2 (1-1/n^2)^{q^2} and the Tatta bound); exists to confirm that using
// only the Tatta probability never changes a threshold.
bool lll_pmax_ok(unsigned long q, unsigned long n);

struct BoundsReport {
    unsigned long q, n;
    double union_bound;
    double lll_lhs, lll_rhs;
    bool union_ok;   // union_bound < 1
    bool lll_ok;     // lll_lhs <= lll_rhs
    bool legacy_ok;  // q > 2304 n^2 + 1
    bool infeasible; // 2n > q: not representable

    std::string to_json() const;
};

BoundsReport bounds_report(unsigned long q, unsigned long n);

struct ThresholdRow {
    unsigned long n;
    unsigned long q_union;  // smallest prime power with union_bound < 1
    unsigned long q_lll;    // smallest prime power satisfying the local lemma
};

// One row per n in [n_min, n_max], scanning prime powers in increasing
// order.
std::vector<ThresholdRow> threshold_table(unsigned long n_min, unsigned long n_max);

// Smallest q-threshold variant behind fig2: least n >= 2 such that
// q = ceil(n (log n)^{1+eps}) satisfies the local lemma at n and at the next
// 100 consecutive n (persistence guard against isolated sign flips near the
// threshold). nullopt when no such n <= cap exists.
std::optional<unsigned long> min_n_for_epsilon(double eps, unsigned long cap = 1000000);

std::string figure1_csv(unsigned long n_min, unsigned long n_max);     // n,q_union,q_lll
std::string figure2_csv(const std::vector<double>& eps_grid,
                        unsigned long cap = 1000000);                  // epsilon,n_min

}  // namespace lqn
