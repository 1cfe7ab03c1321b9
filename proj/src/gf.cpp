#include "lqn/gf.hpp"

#include <algorithm>

namespace lqn {

namespace {

// Polynomials over F_p as coefficient vectors, low degree first, no trailing
// zeros (the zero polynomial is the empty vector).

using Poly = std::vector<unsigned long>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic.
Poly poly_mod(Poly a, const Poly& b, unsigned long p) {
    trim(a);
    while (a.size() >= b.size()) {
        unsigned long c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned long t = (c * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, unsigned long p) {
    return poly_mod(a, d, p).empty();
}

bool is_irreducible(const Poly& f, unsigned long p) {
    unsigned k = static_cast<unsigned>(f.size() - 1);
    if (!f.empty() && f[0] == 0) return false;  // divisible by x
    // Trial division by every monic polynomial of degree 1..k/2.
    for (unsigned d = 1; 2 * d <= k; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long enc = 0; enc < count; ++enc) {
            Poly g(d + 1, 0);
            g[d] = 1;
            unsigned long e = enc;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = e % p;
                e /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_power(unsigned long q, unsigned long& p_out, unsigned& k_out) {
    if (q < 2) return false;
    unsigned long m = q;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            unsigned k = 0;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) return false;
            p_out = d;
            k_out = k;
            return true;
        }
    }
    p_out = q;  // q itself is prime
    k_out = 1;
    return true;
}

bool is_prime_power(unsigned long q) {
    unsigned long p;
    unsigned k;
    return is_prime_power(q, p, k);
}

unsigned long next_prime_power(unsigned long q) {
    unsigned long c = q + 1;
    if (c < 2) c = 2;
    while (!is_prime_power(c)) ++c;
    return c;
}

Field Field::make(unsigned long q) {
    unsigned long p;
    unsigned k;
    if (!is_prime_power(q, p, k)) throw NotAPrimePower(q);

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;

    if (k == 1) {
        f.reduction_ = {0, 1};  // x
    } else {
        // Smallest monic irreducible of degree k, coefficient tuples
        // (c_0,...,c_{k-1}) compared low-degree-first.
        bool found = false;
        unsigned long total = 1;
        for (unsigned i = 0; i < k; ++i) total *= p;
        for (unsigned long w = 0; w < total && !found; ++w) {
            Poly cand(k + 1, 0);
            cand[k] = 1;
            unsigned long e = w;
            // c_0 is the most significant digit of w so that increasing w
            // enumerates tuples in lexicographic order.
            for (unsigned i = 0; i < k; ++i) {
                unsigned long base = 1;
                for (unsigned j = 0; j + i + 1 < k; ++j) base *= p;
                cand[i] = (e / base) % p;
                if (i + 1 < k) e %= base;
            }
            if (is_irreducible(cand, p)) {
                f.reduction_ = cand;
                found = true;
            }
        }
        // A monic irreducible of every degree exists over every F_p.
    }

    if (q <= 4096) {
        f.mul_table_.assign(q * q, 0);
        for (FieldElem a = 0; a < q; ++a)
            for (FieldElem b = a; b < q; ++b) {
                FieldElem r = f.mul_direct(a, b);
                f.mul_table_[a * q + b] = r;
                f.mul_table_[b * q + a] = r;
            }
        f.inv_table_.assign(q, 0);
        for (FieldElem a = 1; a < q; ++a)
            for (FieldElem b = 1; b < q; ++b)
                if (f.mul_table_[a * q + b] == 1) {
                    f.inv_table_[a] = b;
                    break;
                }
    }
    return f;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (k_ == 1) return static_cast<FieldElem>((static_cast<unsigned long>(a) + b) % p_);
    // Digit-wise addition base p.
    FieldElem r = 0;
    unsigned long mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned long da = (a / mult) % p_;
        unsigned long db = (b / mult) % p_;
        r += static_cast<FieldElem>(((da + db) % p_) * mult);
        mult *= p_;
    }
    return r;
}

FieldElem Field::neg(FieldElem a) const {
    if (k_ == 1) return static_cast<FieldElem>((p_ - a) % p_);
    FieldElem r = 0;
    unsigned long mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned long da = (a / mult) % p_;
        r += static_cast<FieldElem>(((p_ - da) % p_) * mult);
        mult *= p_;
    }
    return r;
}

FieldElem Field::mul_direct(FieldElem a, FieldElem b) const {
    if (k_ == 1) return static_cast<FieldElem>((static_cast<unsigned long>(a) * b) % p_);
    // Schoolbook product of the digit vectors, then reduce.
    Poly pa(k_, 0), pb(k_, 0);
    {
        unsigned long ea = a, eb = b;
        for (unsigned i = 0; i < k_; ++i) {
            pa[i] = ea % p_;
            ea /= p_;
            pb[i] = eb % p_;
            eb /= p_;
        }
    }
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (pa[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    Poly rem = poly_mod(std::move(prod), reduction_, p_);
    FieldElem r = 0;
    unsigned long mult = 1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        r += static_cast<FieldElem>(rem[i] * mult);
        mult *= p_;
    }
    return r;
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

FieldElem Field::inv(FieldElem a) const {
    if (a == 0) throw DivisionByZero();
    if (!inv_table_.empty()) return inv_table_[a];
    // a^(q-2) by square and multiply.
    FieldElem result = 1, base = a;
    unsigned long e = q_ - 2;
    while (e) {
        if (e & 1) result = mul_direct(result, base);
        base = mul_direct(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace lqn
