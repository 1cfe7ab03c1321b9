#include "lqn/verify.hpp"

#include <algorithm>
#include <thread>

#include "lqn/coloring.hpp"

namespace lqn {

std::string Violation::describe(const AtomStructure& s) const {
    std::string out;
    switch (kind) {
        case Kind::MalformedEntry:
            out = "malformed entry at (" + std::to_string(x) + "," + std::to_string(y) +
                  "): " + s.atom_name(c) + " vs " + s.atom_name(d);
            break;
        case Kind::ForbiddenTriangle:
            out = "forbidden triangle (" + std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(*z) + "): " + s.atom_name(c) + " not in " + s.atom_name(d) +
                  ";" + s.atom_name(e);
            break;
        case Kind::MissingWitness:
            out = "missing witness at (" + std::to_string(x) + "," + std::to_string(y) +
                  "): " + s.atom_name(c) + " <= " + s.atom_name(d) + ";" + s.atom_name(e) +
                  " has no z";
            break;
    }
    return out;
}

namespace {

// Structural pre-pass: diagonal is 1', labels symmetric (all atoms are
// self-converse), off-diagonal labels are diversity atoms.
void scan_well_formed(const LabelMatrix& m, std::vector<Violation>& out, bool exhaustive) {
    const unsigned V = m.vertex_count();
    for (unsigned x = 0; x < V; ++x) {
        AtomIdx dd = m.label(x, x);
        if (dd != AtomStructure::kIdentityIdx) {
            out.push_back({Violation::Kind::MalformedEntry, x, x, std::nullopt, dd,
                           AtomStructure::kIdentityIdx, 0});
            if (!exhaustive) return;
        }
        for (unsigned y = x + 1; y < V; ++y) {
            AtomIdx c = m.label(x, y), r = m.label(y, x);
            if (c != r || c == AtomStructure::kIdentityIdx) {
                out.push_back({Violation::Kind::MalformedEntry, x, y, std::nullopt, c, r, 0});
                if (!exhaustive) return;
            }
        }
    }
}

// Triangle and witness check for the pairs (x, y), x fixed, x < y < V. One
// pass over z records which compositions occur; a forbidden one is a
// violation immediately, a mandatory one that never occurs is a missing
// witness.
void scan_pairs_for_x(const LabelMatrix& m, const AtomStructure& s, unsigned x, bool exhaustive,
                      std::vector<Violation>& out) {
    const unsigned V = m.vertex_count();
    const unsigned atoms = s.atom_count();
    Bitset seen(atoms * atoms);
    for (unsigned y = x + 1; y < V; ++y) {
        const AtomIdx c = m.label(x, y);
        seen.clear();
        for (unsigned z = 0; z < V; ++z) {
            if (z == x || z == y) continue;
            const AtomIdx d = m.label(x, z), e = m.label(z, y);
            if (!s.contains(d, e, c)) {
                out.push_back({Violation::Kind::ForbiddenTriangle, x, y, z, c, d, e});
                if (!exhaustive) return;
            }
            seen.set(static_cast<std::size_t>(d) * atoms + e);
        }
        for (auto [d, e] : s.diversity_witness_pairs(c)) {
            if (!seen.test(static_cast<std::size_t>(d) * atoms + e)) {
                out.push_back({Violation::Kind::MissingWitness, x, y, std::nullopt, c, d, e});
                if (!exhaustive) return;
            }
        }
    }
}

}  // namespace

VerifyResult verify_full(const LabelMatrix& m, const AtomStructure& s,
                         const VerifyOptions& opts) {
    if (m.q() != s.q() || m.n() != s.n())
        throw ShapeMismatch("matrix is (" + std::to_string(m.q()) + "," + std::to_string(m.n()) +
                            "), structure is (" + std::to_string(s.q()) + "," +
                            std::to_string(s.n()) + ")");
    VerifyResult res;
    scan_well_formed(m, res.violations, opts.exhaustive);
    if (!res.violations.empty()) {
        // Triangle/witness results mean little on a malformed matrix.
        res.valid = false;
        return res;
    }

    const unsigned V = m.vertex_count();
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (!opts.exhaustive || threads <= 1 || V < 64) {
        for (unsigned x = 0; x < V && (opts.exhaustive || res.violations.empty()); ++x)
            scan_pairs_for_x(m, s, x, opts.exhaustive, res.violations);
    } else {
        // Deterministic merge: chunk by x, concatenate in x order.
        std::vector<std::vector<Violation>> parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (unsigned x = t; x < V; x += threads)
                    scan_pairs_for_x(m, s, x, true, parts[t]);
            });
        for (auto& th : pool) th.join();
        std::vector<std::size_t> cursor(threads, 0);
        for (unsigned x = 0; x < V; ++x) {
            auto& part = parts[x % threads];
            auto& cur = cursor[x % threads];
            while (cur < part.size() && part[cur].x == x) res.violations.push_back(part[cur++]);
        }
    }
    res.valid = res.violations.empty();
    return res;
}

bool verify_conditions_only(const LabelMatrix& m, const AtomStructure& s) {
    return find_failures(m, s).empty();
}

}  // namespace lqn
