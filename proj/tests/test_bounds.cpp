#include <cmath>

#include "doctest.h"
#include "lqn/bounds.hpp"
#include "lqn/gf.hpp"

using namespace lqn;

namespace {

// Table of smallest prime powers, n = 2..20: first column union bound,
// second column local lemma.
const unsigned long kUnionCol[] = {27,  59,  89,  121, 157, 191, 227, 263, 307, 343,
                                   379, 419, 461, 503, 547, 587, 631, 673, 719};
const unsigned long kLllCol[] = {23,  41,  61,  83,  107, 131, 157, 179, 211, 233,
                                 257, 289, 311, 343, 367, 397, 431, 457, 487};

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("prime power utilities") {
    CHECK(is_prime_power(27));
    CHECK_FALSE(is_prime_power(26));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(0));
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(289));  // 17^2
    CHECK_FALSE(is_prime_power(100));
    CHECK(next_prime_power(24) == 25);
    CHECK(next_prime_power(719) == 727);
    CHECK(next_prime_power(1) == 2);
    unsigned long expect[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
    unsigned long q = 1;
    for (unsigned long e : expect) {
        q = next_prime_power(q);
        CHECK(q == e);
    }
}

TEST_CASE("union bound values at the documented thresholds") {
    CHECK(union_bound_value(25, 2) >= 1.0);
    CHECK(union_bound_value(27, 2) < 1.0);
    CHECK(union_bound_value(719, 20) < 1.0);
    CHECK(union_bound_value(709, 20) >= 1.0);  // largest prime power below 719
    for (unsigned long q : {2ul, 5ul, 23ul}) CHECK(union_bound_value(q, 1) == 0.0);
}

TEST_CASE("local lemma check at the documented thresholds") {
    CHECK(lll_satisfied(23, 2).ok);
    CHECK_FALSE(lll_satisfied(19, 2).ok);
    CHECK(lll_satisfied(211, 10).ok);
    CHECK_FALSE(lll_satisfied(199, 10).ok);
    LllCheck tiny = lll_satisfied(2, 2);
    CHECK_FALSE(tiny.ok);
    CHECK(tiny.rhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("threshold table reproduces both documented columns") {
    auto rows = threshold_table(2, 20);
    REQUIRE(rows.size() == 19);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].n);
        CHECK(rows[i].n == i + 2);
        CHECK(rows[i].q_union == kUnionCol[i]);
        CHECK(rows[i].q_lll == kLllCol[i]);
        CHECK(rows[i].q_lll < rows[i].q_union);
        CHECK(rows[i].q_lll <= 2304 * rows[i].n * rows[i].n + 1);  // beats the legacy bound
    }
}

TEST_CASE("non-prime prime powers appear in the scan") {
    auto rows = threshold_table(13, 13);
    CHECK(rows[0].q_lll == 289);  // 17^2
    rows = threshold_table(5, 5);
    CHECK(rows[0].q_union == 121);  // 11^2
}

TEST_CASE("union bound decreases once q clears the polynomial hump") {
    // The value rises polynomially before the exponential terms take over
    // (e.g. value(3,2) > value(2,2)), so monotonicity starts around q ~ 6n.
    CHECK(union_bound_value(3, 2) > union_bound_value(2, 2));
    for (unsigned long n = 2; n <= 50; ++n) {
        unsigned long start = std::max<unsigned long>(2, 6 * n);
        double prev = union_bound_value(start, n);
        for (unsigned long q = start + 1; q <= 2000; ++q) {
            double cur = union_bound_value(q, n);
            if (prev > 1e-300) {
                CAPTURE(n);
                CAPTURE(q);
                CHECK(cur < prev);
            }
            prev = cur;
        }
    }
}

TEST_CASE("log form and product form of the lemma agree away from borderlines") {
    for (unsigned long n = 2; n <= 30; ++n)
        for (unsigned long q = 2; q <= 300; ++q) {
            LllCheck c = lll_satisfied(q, n);
            if (std::abs(c.lhs - c.rhs) < 1e-9) continue;
            CAPTURE(q);
            CAPTURE(n);
            CHECK(c.ok == lll_product_ok(q, n));
        }
}

TEST_CASE("using the max of both event probabilities changes nothing") {
    for (unsigned long n = 2; n <= 20; ++n) {
        unsigned long q_tatta = 0, q_both = 0;
        for (unsigned long q = 2; !q_tatta || !q_both; q = next_prime_power(q)) {
            if (!q_tatta && lll_satisfied(q, n).ok) q_tatta = q;
            if (!q_both && lll_pmax_ok(q, n)) q_both = q;
        }
        CHECK(q_tatta == q_both);
    }
}

TEST_CASE("bounds report fields") {
    BoundsReport r = bounds_report(23, 2);
    CHECK(r.lll_ok);
    CHECK_FALSE(r.union_ok);
    CHECK_FALSE(r.legacy_ok);
    CHECK_FALSE(r.infeasible);
    CHECK(r.union_bound >= 1.0);
    BoundsReport inf = bounds_report(4, 3);
    CHECK(inf.infeasible);
    BoundsReport legacy = bounds_report(9221, 2);
    CHECK(legacy.legacy_ok);  // 9221 > 2304*4 + 1
    CHECK(r.to_json().find("\"lll_ok\":true") != std::string::npos);
}

TEST_CASE("figure 1 serialization") {
    std::string csv = figure1_csv(2, 4);
    CHECK(csv == "n,q_union,q_lll\n2,27,23\n3,59,41\n4,89,61\n");
    CHECK(figure1_csv(5, 4) == "n,q_union,q_lll\n");
    // strictly increasing columns over the documented range
    auto rows = threshold_table(2, 20);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].q_union > rows[i - 1].q_union);
        CHECK(rows[i].q_lll > rows[i - 1].q_lll);
    }
}

TEST_CASE("epsilon thresholds") {
    auto n2 = min_n_for_epsilon(2.0);
    REQUIRE(n2.has_value());
    CHECK(*n2 <= 18);
    {
        // the predicate itself holds at n = 18
        unsigned long q = static_cast<unsigned long>(
            std::ceil(18.0 * std::pow(std::log(18.0), 3.0)));
        CHECK(q == 435);
        CHECK(lll_satisfied(q, 18).ok);
        CHECK_FALSE(lll_satisfied(
            static_cast<unsigned long>(std::ceil(17.0 * std::pow(std::log(17.0), 3.0))), 17).ok);
    }
    auto n15 = min_n_for_epsilon(1.5);
    auto n10 = min_n_for_epsilon(1.0);
    auto n05 = min_n_for_epsilon(0.5, 200000);
    REQUIRE(n15.has_value());
    REQUIRE(n10.has_value());
    CHECK_FALSE(n05.has_value());  // threshold lies around n ~ 8e9, far past any desk cap
    CHECK(*n15 >= *n2);
    CHECK(*n10 >= *n15);
    CHECK_THROWS_AS(min_n_for_epsilon(0.0), std::invalid_argument);
}

TEST_CASE("figure 2 serialization") {
    std::string csv = figure2_csv({2.0});
    CHECK(csv.rfind("epsilon,n_min\n", 0) == 0);
    CHECK(csv.find("2,18\n") != std::string::npos);
    std::string na = figure2_csv({0.5}, 50000);
    CHECK(na.find("0.5,NA\n") != std::string::npos);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(threshold_table(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(threshold_table(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(union_bound_value(1, 2), std::invalid_argument);
}

TEST_SUITE_END();
