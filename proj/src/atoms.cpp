#include "lqn/atoms.hpp"

#include <cassert>

#include "json.hpp"

namespace lqn {

AtomStructure AtomStructure::build(unsigned q, unsigned n) {
    assert(q >= 1);
    AtomStructure s;
    s.q_ = q;
    s.n_ = n;
    const unsigned count = q + n + 2;
    s.row_words_ = (count + 63) / 64;
    s.comp_.assign(static_cast<std::size_t>(count) * count * s.row_words_, 0);

    const AtomIdx id = kIdentityIdx;
    // Identity rows: 1';x = x;1' = {x}.
    for (AtomIdx x = 0; x < count; ++x) {
        s.row_set(id, x, x);
        s.row_set(x, id, x);
    }
    // a_i;a_i = 1' + a_i and a_i;a_j = A minus {a_i, a_j}.
    for (unsigned i = 0; i <= q; ++i)
        for (unsigned j = 0; j <= q; ++j) {
            AtomIdx ai = s.a_idx(i), aj = s.a_idx(j);
            if (i == j) {
                s.row_set(ai, aj, id);
                s.row_set(ai, aj, ai);
            } else {
                for (unsigned m = 0; m <= q; ++m)
                    if (m != i && m != j) s.row_set(ai, aj, s.a_idx(m));
            }
        }
    // a_i;t_k = t_k;a_i = T.
    for (unsigned i = 0; i <= q; ++i)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned l = 1; l <= n; ++l) {
                s.row_set(s.a_idx(i), s.t_idx(k), s.t_idx(l));
                s.row_set(s.t_idx(k), s.a_idx(i), s.t_idx(l));
            }
    // t_k;t_k = 1' + A and t_k;t_l = A.
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned l = 1; l <= n; ++l) {
            AtomIdx tk = s.t_idx(k), tl = s.t_idx(l);
            if (k == l) s.row_set(tk, tl, id);
            for (unsigned m = 0; m <= q; ++m) s.row_set(tk, tl, s.a_idx(m));
        }

    // Diversity witness pairs per atom, in (d, e) row order.
    s.mandatory_pairs_.resize(count);
    for (AtomIdx c = 1; c < count; ++c)
        for (AtomIdx d = 1; d < count; ++d)
            for (AtomIdx e = 1; e < count; ++e)
                if (s.contains(d, e, c)) s.mandatory_pairs_[c].emplace_back(d, e);

    return s;
}

AtomIdx AtomStructure::index_of(Atom a) const {
    switch (a.kind) {
        case AtomKind::Identity:
            return kIdentityIdx;
        case AtomKind::A:
            assert(a.index <= q_);
            return a_idx(a.index);
        case AtomKind::T:
            assert(a.index >= 1 && a.index <= n_);
            return t_idx(a.index);
    }
    return kIdentityIdx;
}

Atom AtomStructure::atom_at(AtomIdx i) const {
    assert(i < atom_count());
    if (i == kIdentityIdx) return Atom::identity();
    if (i <= q_ + 1) return Atom::a(i - 1);
    return Atom::t(i - (q_ + 1));
}

std::vector<AtomIdx> AtomStructure::comp_set(AtomIdx x, AtomIdx y) const {
    std::vector<AtomIdx> out;
    for (AtomIdx z = 0; z < atom_count(); ++z)
        if (contains(x, y, z)) out.push_back(z);
    return out;
}

std::vector<std::pair<Atom, Atom>> AtomStructure::mandatory_witness_pairs(Atom c) const {
    AtomIdx ci = index_of(c);
    std::vector<std::pair<Atom, Atom>> out;
    for (AtomIdx d = 0; d < atom_count(); ++d)
        for (AtomIdx e = 0; e < atom_count(); ++e)
            if (contains(d, e, ci)) out.emplace_back(atom_at(d), atom_at(e));
    return out;
}

std::string AtomStructure::atom_name(AtomIdx i) const {
    if (i == kIdentityIdx) return "1'";
    if (is_a_atom(i)) return "a" + std::to_string(i - 1);
    return "t" + std::to_string(i - (q_ + 1));
}

AtomIdx AtomStructure::parse_atom(const std::string& name) const {
    const AtomIdx bad = static_cast<AtomIdx>(atom_count());
    if (name == "1'") return kIdentityIdx;
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 't')) return bad;
    unsigned long v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return bad;
        if (i > 1 && v == 0) return bad;  // leading zero
        v = v * 10 + static_cast<unsigned long>(name[i] - '0');
        if (v > q_ + n_) return bad;
    }
    if (name[0] == 'a') return v <= q_ ? a_idx(static_cast<unsigned>(v)) : bad;
    return (v >= 1 && v <= n_) ? t_idx(static_cast<unsigned>(v)) : bad;
}

std::string AtomStructure::comp_json() const {
    nlohmann::json comp = nlohmann::json::object();
    for (AtomIdx x = 0; x < atom_count(); ++x)
        for (AtomIdx y = 0; y < atom_count(); ++y) {
            std::vector<std::string> row;
            for (AtomIdx z : comp_set(x, y)) row.push_back(atom_name(z));
            comp[atom_name(x) + "," + atom_name(y)] = row;
        }
    nlohmann::json j{{"q", q_}, {"n", n_}, {"comp", comp}};
    return j.dump();
}

}  // namespace lqn
