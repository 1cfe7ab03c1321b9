#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lqn/atoms.hpp"
#include "lqn/geometry.hpp"

namespace lqn {

struct Violation {
    enum class Kind : std::uint8_t {
        MalformedEntry,     // diagonal not 1', asymmetric pair, or 1' off-diagonal
        ForbiddenTriangle,  // label(x,y) not in comp(label(x,z), label(z,y))
        MissingWitness,     // no z with label(x,z) = d, label(z,y) = e
    };
    Kind kind;
    unsigned x, y;
    std::optional<unsigned> z;
    AtomIdx c;  // label(x,y)
    AtomIdx d, e;

    std::string describe(const AtomStructure& s) const;
};

struct VerifyResult {
    bool valid = false;
    std::vector<Violation> violations;  // first-found, or all when exhaustive
};

struct VerifyOptions {
    bool exhaustive = false;
    unsigned threads = 1;  // 0 = hardware concurrency; used by exhaustive scans
};

// Full representation check of m against the composition table of s: no
// forbidden triangles and every mandatory witness present. Violations come
// out in lexicographic (x, y, z) order regardless of thread count. Throws
// ShapeMismatch when (q, n) disagree.
VerifyResult verify_full(const LabelMatrix& m, const AtomStructure& s,
                         const VerifyOptions& opts = {});

// True iff no edge has an unmet Att or Tatta need, i.e. find_failures is
// empty. The fast check used inside the coloring loop; on doubled colorings
// with q >= 3 it agrees with verify_full (the a-skeleton supplies every
// other witness; for q = 2 the a-skeleton itself lacks its a_i;a_i
// witnesses, so only verify_full rejects).
bool verify_conditions_only(const LabelMatrix& m, const AtomStructure& s);

}  // namespace lqn
