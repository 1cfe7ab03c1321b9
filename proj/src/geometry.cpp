#include "lqn/geometry.hpp"

#include <cassert>
#include <stdexcept>

namespace lqn {

LabelMatrix::LabelMatrix(unsigned q, unsigned n, bool doubled)
    : q_(q), n_(n), V_((doubled ? 2 : 1) * q * q), doubled_(doubled) {
    if (q + n + 2 > 255)
        throw std::invalid_argument("atom count q+n+2 exceeds byte-per-pair storage");
    labels_.assign(static_cast<std::size_t>(V_) * V_, AtomStructure::kIdentityIdx);
}

void LabelMatrix::set_label(unsigned u, unsigned v, AtomIdx a) {
    assert(u != v || a == AtomStructure::kIdentityIdx);
    labels_[idx(u, v)] = static_cast<std::uint8_t>(a);
    labels_[idx(v, u)] = static_cast<std::uint8_t>(a);
    cache_valid_ = false;
}

void LabelMatrix::set_label_raw(unsigned u, unsigned v, AtomIdx a) {
    labels_[idx(u, v)] = static_cast<std::uint8_t>(a);
    cache_valid_ = false;
}

void LabelMatrix::build_neighbor_cache() const {
    const unsigned atoms = atom_count();
    nbr_cache_.assign(static_cast<std::size_t>(V_) * atoms, Bitset(V_));
    for (unsigned u = 0; u < V_; ++u)
        for (unsigned v = 0; v < V_; ++v) {
            if (u == v) continue;
            std::uint8_t c = labels_[idx(u, v)];
            if (c < atoms) nbr_cache_[static_cast<std::size_t>(u) * atoms + c].set(v);
        }
    cache_valid_ = true;
}

const Bitset& LabelMatrix::neighbors(unsigned v, AtomIdx c) const {
    if (!cache_valid_) build_neighbor_cache();
    return nbr_cache_[static_cast<std::size_t>(v) * atom_count() + c];
}

Atom slope_label(const Field& f, Point p1, Point p2) {
    if (p1 == p2) throw SamePoint();
    assert(p1.copy == p2.copy);
    if (p1.a == p2.a) return Atom::a(static_cast<unsigned>(f.q()));  // vertical
    FieldElem da = f.sub(p2.a, p1.a);
    FieldElem db = f.sub(p2.b, p1.b);
    return Atom::a(f.mul(db, f.inv(da)));
}

namespace {

void fill_slopes(LabelMatrix& m, const Field& f, const AtomStructure& s, std::uint8_t copy) {
    const unsigned q = static_cast<unsigned>(f.q());
    for (FieldElem a1 = 0; a1 < q; ++a1)
        for (FieldElem b1 = 0; b1 < q; ++b1)
            for (FieldElem a2 = a1; a2 < q; ++a2)
                for (FieldElem b2 = (a2 == a1 ? b1 + 1 : 0); b2 < q; ++b2) {
                    Point p1{copy, a1, b1}, p2{copy, a2, b2};
                    m.set_label(m.index_of(p1), m.index_of(p2),
                                s.index_of(slope_label(f, p1, p2)));
                }
}

}  // namespace

LabelMatrix build_lyndon(unsigned long q) {
    if (q < 2 || !is_prime_power(q)) throw NotAPrimePower(q);
    Field f = Field::make(q);
    AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), 0);
    LabelMatrix m(static_cast<unsigned>(q), 0, false);
    fill_slopes(m, f, s, 0);
    return m;
}

LabelMatrix build_doubled(unsigned long q) {
    if (q < 2 || !is_prime_power(q)) throw NotAPrimePower(q);
    Field f = Field::make(q);
    AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), 1);
    LabelMatrix m(static_cast<unsigned>(q), 1, true);
    fill_slopes(m, f, s, 0);
    fill_slopes(m, f, s, 1);
    const unsigned sq = static_cast<unsigned>(q * q);
    const AtomIdx t1 = s.t_idx(1);
    for (unsigned u = 0; u < sq; ++u)
        for (unsigned v = sq; v < 2 * sq; ++v) m.set_label(u, v, t1);
    return m;
}

}  // namespace lqn
