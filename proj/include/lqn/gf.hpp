#pragma once

#include <cstdint>
#include <vector>

#include "lqn/errors.hpp"

namespace lqn {

// Elements of GF(p^k) are integers in [0, q) encoding polynomials over F_p
// base p (digit i = coefficient of x^i), so an element is directly usable as
// an array index.
using FieldElem = std::uint32_t;

// Exact arithmetic in GF(q), q = p^k a prime power. For k >= 2 the field is
// F_p[x] modulo the smallest monic irreducible polynomial of degree k
// (coefficient tuples compared low-degree-first). Full multiplication and
// inverse tables are precomputed for q <= 4096; larger orders fall back to
// direct polynomial arithmetic. Immutable after construction.
class Field {
public:
    static Field make(unsigned long q);  // throws NotAPrimePower

    unsigned long p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned long q() const { return q_; }

    // Monic, degree k, coefficients low-degree-first (size k+1, last = 1).
    const std::vector<unsigned long>& reduction_polynomial() const { return reduction_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws DivisionByZero for a = 0

private:
    Field() = default;

    FieldElem mul_direct(FieldElem a, FieldElem b) const;

    unsigned long p_ = 0;
    unsigned k_ = 0;
    unsigned long q_ = 0;
    std::vector<unsigned long> reduction_;
    std::vector<FieldElem> mul_table_;  // q*q entries when tabulated, else empty
    std::vector<FieldElem> inv_table_;  // q entries when tabulated ([0] unused)
};

// Prime-power utilities shared with the bounds module.
bool is_prime_power(unsigned long q);
bool is_prime_power(unsigned long q, unsigned long& p_out, unsigned& k_out);
unsigned long next_prime_power(unsigned long q);  // smallest prime power > q

}  // namespace lqn
