#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lqn/errors.hpp"

namespace lqn {

enum class AtomKind : std::uint8_t { Identity, A, T };

// One atom of L(q,n): the identity 1', an affine atom a_i (0 <= i <= q), or a
// split atom t_k (1 <= k <= n).
struct Atom {
    AtomKind kind;
    unsigned index;  // i for A, k for T, unused for Identity

    static Atom identity() { return {AtomKind::Identity, 0}; }
    static Atom a(unsigned i) { return {AtomKind::A, i}; }
    static Atom t(unsigned k) { return {AtomKind::T, k}; }

    bool operator==(const Atom&) const = default;
};

// Atom index type within a fixed structure: 0 = 1', 1..q+1 = a_0..a_q,
// q+2..q+n+1 = t_1..t_n.
using AtomIdx = std::uint16_t;

// The symmetric integral atom structure of L(q,n): atoms 1', a_0..a_q,
// t_1..t_n with composition (i != j, k != l)
//
//   a_i;a_i = 1' + a_i        a_i;a_j = A - (a_i + a_j)    a_i;t_k = T
//   t_k;t_k = 1' + A          t_k;t_l = A
//
// where A = a_0+..+a_q and T = t_1+..+t_n. Rows are stored as bitmasks over
// the fixed atom ordering so membership queries are single word tests.
// Immutable after construction.
class AtomStructure {
public:
    static AtomStructure build(unsigned q, unsigned n);  // q >= 1

    unsigned q() const { return q_; }
    unsigned n() const { return n_; }
    unsigned atom_count() const { return q_ + n_ + 2; }

    static constexpr AtomIdx kIdentityIdx = 0;
    AtomIdx index_of(Atom a) const;
    Atom atom_at(AtomIdx i) const;
    bool is_diversity(AtomIdx i) const { return i != kIdentityIdx; }
    bool is_a_atom(AtomIdx i) const { return i >= 1 && i <= q_ + 1; }
    bool is_t_atom(AtomIdx i) const { return i >= q_ + 2 && i < atom_count(); }

    AtomIdx a_idx(unsigned i) const { return static_cast<AtomIdx>(1 + i); }
    AtomIdx t_idx(unsigned k) const { return static_cast<AtomIdx>(q_ + 1 + k); }

    // z in comp(x, y)?
    bool contains(AtomIdx x, AtomIdx y, AtomIdx z) const {
        const std::uint64_t* row = comp_row(x, y);
        return (row[z >> 6] >> (z & 63)) & 1u;
    }
    bool contains(Atom x, Atom y, Atom z) const {
        return contains(index_of(x), index_of(y), index_of(z));
    }

    std::vector<AtomIdx> comp_set(AtomIdx x, AtomIdx y) const;

    // All ordered pairs (d, e) with c in comp(d, e), in row order. These are
    // the compositions a c-labelled edge must witness (identity pairs are
    // witnessed trivially by an endpoint).
    std::vector<std::pair<Atom, Atom>> mandatory_witness_pairs(Atom c) const;

    // Same restricted to diversity d, e and as flat index pairs; precomputed,
    // this is what the verifier iterates.
    const std::vector<std::pair<AtomIdx, AtomIdx>>& diversity_witness_pairs(AtomIdx c) const {
        return mandatory_pairs_[c];
    }

    std::string atom_name(AtomIdx i) const;
    // Parses "1'", "a<i>", "t<k>"; returns atom_count() if not a valid atom
    // name for this structure.
    AtomIdx parse_atom(const std::string& name) const;

    std::string comp_json() const;  // {"q":..,"n":..,"comp":{"a0,a1":["a2",..],..}}

private:
    AtomStructure() = default;

    const std::uint64_t* comp_row(AtomIdx x, AtomIdx y) const {
        return comp_.data() + (static_cast<std::size_t>(x) * atom_count() + y) * row_words_;
    }
    void row_set(AtomIdx x, AtomIdx y, AtomIdx z) {
        comp_[(static_cast<std::size_t>(x) * atom_count() + y) * row_words_ + (z >> 6)] |=
            std::uint64_t{1} << (z & 63);
    }

    unsigned q_ = 0, n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> comp_;
    std::vector<std::vector<std::pair<AtomIdx, AtomIdx>>> mandatory_pairs_;
};

}  // namespace lqn
