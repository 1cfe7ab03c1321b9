#pragma once

#include <cstdint>
#include <vector>

#include "lqn/atoms.hpp"
#include "lqn/bitset.hpp"
#include "lqn/gf.hpp"

namespace lqn {

// A point of the (possibly doubled) affine square: copy 0 is the primary
// square D = F_q x F_q, copy 1 its disjoint mirror D'.
struct Point {
    std::uint8_t copy;  // 0 or 1
    FieldElem a, b;

    bool operator==(const Point&) const = default;
};

// Symmetric V x V assignment of one atom index per ordered pair of points,
// diagonal fixed to 1'. Point u = (copy, a, b) lives at index
// copy*q^2 + a*q + b. Storage is one byte per ordered pair, so the atom
// count q+n+2 must stay <= 255.
class LabelMatrix {
public:
    LabelMatrix(unsigned q, unsigned n, bool doubled);

    unsigned q() const { return q_; }
    unsigned n() const { return n_; }
    unsigned vertex_count() const { return V_; }
    bool doubled() const { return doubled_; }

    unsigned index_of(Point pt) const {
        return pt.copy * q_ * q_ + static_cast<unsigned>(pt.a) * q_ + pt.b;
    }
    Point point_at(unsigned v) const {
        unsigned sq = q_ * q_;
        return {static_cast<std::uint8_t>(v / sq), (v % sq) / q_, v % q_};
    }
    std::uint8_t copy_of(unsigned v) const { return static_cast<std::uint8_t>(v / (q_ * q_)); }

    AtomIdx label(unsigned u, unsigned v) const { return labels_[idx(u, v)]; }
    // Symmetric setter; invalidates the neighbor cache.
    void set_label(unsigned u, unsigned v, AtomIdx a);
    // Writes a single ordered cell; only the file reader should need this.
    void set_label_raw(unsigned u, unsigned v, AtomIdx a);

    unsigned atom_count() const { return q_ + n_ + 2; }

    // Per-vertex, per-atom neighbor bitsets: bit z of neighbors(v, c) is set
    // iff label(v, z) = c. Built on first use, dropped on mutation.
    const Bitset& neighbors(unsigned v, AtomIdx c) const;
    void build_neighbor_cache() const;

    bool same_labels(const LabelMatrix& other) const { return labels_ == other.labels_; }

private:
    std::size_t idx(unsigned u, unsigned v) const {
        return static_cast<std::size_t>(u) * V_ + v;
    }

    unsigned q_, n_, V_;
    bool doubled_;
    std::vector<std::uint8_t> labels_;
    mutable std::vector<Bitset> nbr_cache_;  // V * atom_count when built
    mutable bool cache_valid_ = false;
};

// a_i with i the slope of the line through p1 and p2, or a_q for vertical
// pairs. Symmetric in its arguments; p1, p2 must be distinct points of the
// same copy.
Atom slope_label(const Field& f, Point p1, Point p2);

// The slope representation of L(q,0) on q^2 points. q must be a prime power
// >= 2 (q = 1 has no two distinct slope classes to compose).
LabelMatrix build_lyndon(unsigned long q);

// Two disjoint copies of the slope representation with every cross-copy pair
// labelled t_1: the representation of L(q,1) on 2q^2 points.
LabelMatrix build_doubled(unsigned long q);

}  // namespace lqn
