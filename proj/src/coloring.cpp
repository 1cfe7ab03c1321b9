#include "lqn/coloring.hpp"

#include <cassert>
#include <stdexcept>

namespace lqn {

namespace {

std::uint64_t edge_key(unsigned u, unsigned v, unsigned V) {
    return static_cast<std::uint64_t>(u) * V + v;
}

void require_doubled(const LabelMatrix& m, const char* what) {
    if (!m.doubled()) throw std::invalid_argument(std::string(what) + " requires a doubled matrix");
}

}  // namespace

LabelMatrix randomize_t_colors(const LabelMatrix& m, unsigned n, std::uint64_t seed) {
    require_doubled(m, "randomize_t_colors");
    if (n < 1) throw std::invalid_argument("need at least one t-color");
    const unsigned q = m.q(), sq = q * q;
    const AtomIdx first_t = static_cast<AtomIdx>(q + 2);  // t_1 in the fixed atom order
    LabelMatrix out(q, n, true);
    for (unsigned u = 0; u < 2 * sq; ++u)
        for (unsigned v = u + 1; v < 2 * sq; ++v)
            if (m.copy_of(u) == m.copy_of(v)) out.set_label(u, v, m.label(u, v));
    PortableRng rng(seed, /*stream=*/0);
    for (unsigned u = 0; u < sq; ++u)
        for (unsigned v = sq; v < 2 * sq; ++v)
            out.set_label(u, v, static_cast<AtomIdx>(first_t + rng.next_below(n)));
    return out;
}

ColoringEngine::ColoringEngine(LabelMatrix& m, const AtomStructure& s)
    : m_(m), s_(s), q_(m.q()), n_(m.n()), sq_(m.q() * m.q()) {
    require_doubled(m, "ColoringEngine");
    if (m.q() != s.q() || m.n() != s.n())
        throw ShapeMismatch("matrix is (" + std::to_string(m.q()) + "," + std::to_string(m.n()) +
                            "), structure is (" + std::to_string(s.q()) + "," +
                            std::to_string(s.n()) + ")");
    rebuild_masks();
}

void ColoringEngine::rebuild_masks() {
    const unsigned V = 2 * sq_;
    a_mask_.assign(static_cast<std::size_t>(V) * (q_ + 1), Bitset(sq_));
    t_mask_.assign(static_cast<std::size_t>(V) * n_, Bitset(sq_));
    for (unsigned u = 0; u < V; ++u) {
        const unsigned own_base = (u < sq_) ? 0 : sq_;
        const unsigned opp_base = (u < sq_) ? sq_ : 0;
        for (unsigned w = 0; w < sq_; ++w) {
            unsigned v = own_base + w;
            if (v != u) {
                AtomIdx c = m_.label(u, v);
                if (!s_.is_a_atom(c))
                    throw std::invalid_argument("same-copy pair without an a-label");
                a_mask_[static_cast<std::size_t>(u) * (q_ + 1) + (c - 1)].set(w);
            }
            AtomIdx t = m_.label(u, opp_base + w);
            if (!s_.is_t_atom(t)) throw std::invalid_argument("cross-copy pair without a t-label");
            t_mask_[static_cast<std::size_t>(u) * n_ + (t - (q_ + 2))].set(w);
        }
    }
}

std::optional<FailureRecord> ColoringEngine::check_a_edge(unsigned u, unsigned v) const {
    // For every (t_i, t_j) some z in the opposite copy with (u,z) = t_i and
    // (z,v) = t_j. u and v share a copy, so their t-masks range over the
    // same universe.
    const Bitset* tu = &t_mask_[static_cast<std::size_t>(u) * n_];
    const Bitset* tv = &t_mask_[static_cast<std::size_t>(v) * n_];
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (!intersects(tu[i], tv[j]))
                return FailureRecord{u, v, FailCondition::Att, s_.t_idx(i + 1), s_.t_idx(j + 1)};
    return std::nullopt;
}

std::optional<FailureRecord> ColoringEngine::check_t_edge(unsigned u, unsigned v) const {
    // Orientation (a_k, t_j): z in u's copy with (u,z) = a_k, (z,v) = t_j;
    // then orientation (t_j, a_k) with z in v's copy.
    const Bitset* au = &a_mask_[static_cast<std::size_t>(u) * (q_ + 1)];
    const Bitset* av = &a_mask_[static_cast<std::size_t>(v) * (q_ + 1)];
    const Bitset* tu = &t_mask_[static_cast<std::size_t>(u) * n_];
    const Bitset* tv = &t_mask_[static_cast<std::size_t>(v) * n_];
    for (unsigned k = 0; k <= q_; ++k)
        for (unsigned j = 0; j < n_; ++j)
            if (!intersects(au[k], tv[j]))
                return FailureRecord{u, v, FailCondition::Tatta, s_.a_idx(k), s_.t_idx(j + 1)};
    for (unsigned j = 0; j < n_; ++j)
        for (unsigned k = 0; k <= q_; ++k)
            if (!intersects(tu[j], av[k]))
                return FailureRecord{u, v, FailCondition::Tatta, s_.t_idx(j + 1), s_.a_idx(k)};
    return std::nullopt;
}

std::optional<FailureRecord> ColoringEngine::check_edge(unsigned u, unsigned v) const {
    assert(u < v);
    if (m_.copy_of(u) == m_.copy_of(v)) return check_a_edge(u, v);
    return check_t_edge(u, v);
}

unsigned ColoringEngine::count_unmet_att(unsigned u, unsigned v) const {
    const Bitset* tu = &t_mask_[static_cast<std::size_t>(u) * n_];
    const Bitset* tv = &t_mask_[static_cast<std::size_t>(v) * n_];
    unsigned unmet = 0;
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (!intersects(tu[i], tv[j])) ++unmet;
    return unmet;
}

std::pair<unsigned, unsigned> ColoringEngine::count_unmet_tatta(unsigned u, unsigned v) const {
    const Bitset* au = &a_mask_[static_cast<std::size_t>(u) * (q_ + 1)];
    const Bitset* av = &a_mask_[static_cast<std::size_t>(v) * (q_ + 1)];
    const Bitset* tu = &t_mask_[static_cast<std::size_t>(u) * n_];
    const Bitset* tv = &t_mask_[static_cast<std::size_t>(v) * n_];
    unsigned o1 = 0, o2 = 0;
    for (unsigned k = 0; k <= q_; ++k)
        for (unsigned j = 0; j < n_; ++j) {
            if (!intersects(au[k], tv[j])) ++o1;
            if (!intersects(tu[j], av[k])) ++o2;
        }
    return {o1, o2};
}

void ColoringEngine::recheck(unsigned u, unsigned v) {
    auto key = edge_key(u, v, 2 * sq_);
    if (auto f = check_edge(u, v))
        failing_.insert_or_assign(key, *f);
    else
        failing_.erase(key);
}

void ColoringEngine::full_scan() {
    failing_.clear();
    const unsigned V = 2 * sq_;
    for (unsigned u = 0; u < V; ++u)
        for (unsigned v = u + 1; v < V; ++v)
            if (auto f = check_edge(u, v)) failing_.emplace(edge_key(u, v, V), *f);
}

std::vector<FailureRecord> ColoringEngine::failures() const {
    std::vector<FailureRecord> out;
    out.reserve(failing_.size());
    for (const auto& [k, f] : failing_) out.push_back(f);
    return out;
}

void ColoringEngine::apply_color(unsigned u, unsigned v, AtomIdx t_new) {
    AtomIdx t_old = m_.label(u, v);
    if (t_old == t_new) return;
    m_.set_label(u, v, t_new);
    t_mask_[static_cast<std::size_t>(u) * n_ + (t_old - (q_ + 2))].reset(v % sq_);
    t_mask_[static_cast<std::size_t>(u) * n_ + (t_new - (q_ + 2))].set(v % sq_);
    t_mask_[static_cast<std::size_t>(v) * n_ + (t_old - (q_ + 2))].reset(u % sq_);
    t_mask_[static_cast<std::size_t>(v) * n_ + (t_new - (q_ + 2))].set(u % sq_);
}

std::vector<std::pair<unsigned, unsigned>> resample_targets(const LabelMatrix& m,
                                                            const FailureRecord& f) {
    require_doubled(m, "resample_targets");
    const unsigned sq = m.q() * m.q();
    std::vector<std::pair<unsigned, unsigned>> targets;
    targets.reserve(2 * sq);
    auto star = [&](unsigned x, unsigned skip) {
        const unsigned opp = (x < sq) ? sq : 0;
        for (unsigned w = 0; w < sq; ++w)
            if (opp + w != skip) targets.emplace_back(x, opp + w);
    };
    star(f.u, f.u);  // skip is vacuous: the star lies in the opposite copy
    // For a cross edge, (f.v, f.u) is the pair (f.u, f.v) already emitted.
    star(f.v, m.copy_of(f.u) != m.copy_of(f.v) ? f.u : f.v);
    return targets;
}

namespace {

// Direct witness test for one need, straight off the matrix.
bool need_unmet(const LabelMatrix& m, const FailureRecord& f) {
    const unsigned V = m.vertex_count();
    for (unsigned z = 0; z < V; ++z) {
        if (z == f.u || z == f.v) continue;
        if (m.label(f.u, z) == f.need_d && m.label(z, f.v) == f.need_e) return false;
    }
    return true;
}

}  // namespace

void resample_step(LabelMatrix& m, const FailureRecord& f, PortableRng& rng) {
    require_doubled(m, "resample_step");
    if (!need_unmet(m, f)) throw StaleFailure();
    const AtomIdx first_t = static_cast<AtomIdx>(m.q() + 2);
    for (auto [x, y] : resample_targets(m, f))
        m.set_label(x, y, static_cast<AtomIdx>(first_t + rng.next_below(m.n())));
}

void ColoringEngine::resample(const FailureRecord& f, PortableRng& rng, bool full_rescan) {
    if (!need_unmet(m_, f)) throw StaleFailure();
    for (auto [x, y] : resample_targets(m_, f))
        apply_color(x, y, s_.t_idx(1 + static_cast<unsigned>(rng.next_below(n_))));

    if (full_rescan) {
        full_scan();
        return;
    }
    const unsigned V = 2 * sq_;
    // Every t-edge can see a redrawn edge through a witness at f.u or f.v.
    for (unsigned u = 0; u < sq_; ++u)
        for (unsigned v = sq_; v < V; ++v) recheck(u, v);
    const bool cross = m_.copy_of(f.u) != m_.copy_of(f.v);
    if (cross) {
        // Both copies lost a whole t-star: witnesses at f.u and f.v changed
        // for every a-edge.
        for (unsigned u = 0; u < V; ++u) {
            const unsigned base = (u < sq_) ? 0 : sq_;
            for (unsigned v = u + 1; v < base + sq_; ++v) recheck(u, v);
        }
    } else {
        // Same-copy failure: a-edges in that copy changed only at f.u / f.v;
        // a-edges in the other copy all see the redrawn stars.
        const unsigned base = (f.u < sq_) ? 0 : sq_;
        const unsigned obase = (base == 0) ? sq_ : 0;
        for (unsigned w = base; w < base + sq_; ++w) {
            if (w != f.u) recheck(std::min(w, f.u), std::max(w, f.u));
            if (w != f.v) recheck(std::min(w, f.v), std::max(w, f.v));
        }
        for (unsigned u = obase; u < obase + sq_; ++u)
            for (unsigned v = u + 1; v < obase + sq_; ++v) recheck(u, v);
    }
}

std::vector<FailureRecord> find_failures(const LabelMatrix& m, const AtomStructure& s) {
    if (m.q() != s.q() || m.n() != s.n())
        throw ShapeMismatch("matrix is (" + std::to_string(m.q()) + "," + std::to_string(m.n()) +
                            "), structure is (" + std::to_string(s.q()) + "," +
                            std::to_string(s.n()) + ")");
    if (!m.doubled()) {
        if (m.n() == 0) return {};  // no t-atoms, so no t-witness needs at all
        throw std::invalid_argument("single-copy matrix with t-atoms has no witnesses");
    }
    LabelMatrix& mut = const_cast<LabelMatrix&>(m);  // engine only reads without resample()
    ColoringEngine eng(mut, s);
    eng.full_scan();
    return eng.failures();
}

RepresentResult represent(unsigned long q, unsigned n, std::uint64_t seed,
                          const RepresentOptions& opts) {
    if (n < 1) throw std::invalid_argument("need at least one t-color");
    LabelMatrix base = build_doubled(q);
    LabelMatrix m = randomize_t_colors(base, n, seed);
    AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), n);

    ColoringRun run;
    run.seed = seed;
    run.max_rounds = opts.max_rounds ? opts.max_rounds : 1000ul * m.vertex_count();

    ColoringEngine eng(m, s);
    eng.full_scan();
    PortableRng rng(seed, /*stream=*/1);
    while (eng.has_failures() && run.resample_count < run.max_rounds) {
        FailureRecord f = eng.first_failure();
        eng.resample(f, rng, opts.full_rescan);
        ++run.resample_count;
        ++run.rounds_used;
    }
    run.outcome = eng.has_failures() ? ColoringOutcome::Exhausted : ColoringOutcome::Success;
    return RepresentResult{std::move(m), run, 2ul * n > q};
}

}  // namespace lqn
