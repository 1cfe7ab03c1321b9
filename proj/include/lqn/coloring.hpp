#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lqn/atoms.hpp"
#include "lqn/geometry.hpp"
#include "lqn/rng.hpp"

namespace lqn {

// Which witness requirement an edge is missing. Att: an a-edge needs, for
// every ordered color pair (t_i, t_j), a z with those labels to its
// endpoints. Tatta: a t-edge needs, for every (a_k, t_j), such a z in each
// orientation.
enum class FailCondition : std::uint8_t { Att, Tatta };

struct FailureRecord {
    unsigned u, v;  // u < v
    FailCondition condition;
    AtomIdx need_d, need_e;  // the pair (d, e) with no witness z: (u,z)=d, (z,v)=e

    bool operator==(const FailureRecord&) const = default;
};

enum class ColoringOutcome : std::uint8_t { Success, Exhausted };

struct ColoringRun {
    std::uint64_t seed = 0;
    unsigned long max_rounds = 0;
    unsigned long rounds_used = 0;     // failure-selection rounds executed
    unsigned long resample_count = 0;  // one resample per round
    ColoringOutcome outcome = ColoringOutcome::Exhausted;
};

struct RepresentResult {
    LabelMatrix matrix;
    ColoringRun run;
    bool infeasible_warning = false;  // 2n > q: no representation exists
};

// Fresh uniform color in {t_1,..,t_n} for every cross-copy pair, in a fixed
// order (copy-0 vertex ascending, then copy-1 vertex ascending), one
// next_below(n) draw per pair on stream 0 of the seed. Same-copy labels and
// the diagonal are untouched.
LabelMatrix randomize_t_colors(const LabelMatrix& m, unsigned n, std::uint64_t seed);

// All edges with an unmet Att or Tatta need, sorted by (u, v); each record
// carries the first unmet need in witness-pair order.
std::vector<FailureRecord> find_failures(const LabelMatrix& m, const AtomStructure& s);

// The t-edges a resample of f redraws, in redraw order: cross edges at u
// (other endpoint ascending), then cross edges at v, each unordered pair
// once.
std::vector<std::pair<unsigned, unsigned>> resample_targets(const LabelMatrix& m,
                                                            const FailureRecord& f);

// Redraws every t-edge incident to an endpoint of f uniformly at random, one
// next_below(n) draw per target edge in resample_targets order. Throws
// StaleFailure unless f.need is currently unmet on f's edge.
void resample_step(LabelMatrix& m, const FailureRecord& f, PortableRng& rng);

struct RepresentOptions {
    unsigned long max_rounds = 0;  // 0 = default 1000 * V
    bool full_rescan = false;      // cross-validation mode: rescan everything per round
};

// Builds the doubled matrix, colors the t-edges at random (stream 0), then
// repeatedly resamples the lowest-indexed failing edge (stream 1) until no
// edge fails or max_rounds resamples are spent.
RepresentResult represent(unsigned long q, unsigned n, std::uint64_t seed,
                          const RepresentOptions& opts = {});

// Incremental failure tracker used by represent and exposed for tests: keeps
// the failing-edge set current across resamples by rechecking exactly the
// edges whose witness sets a redraw can have changed.
class ColoringEngine {
public:
    ColoringEngine(LabelMatrix& m, const AtomStructure& s);

    void full_scan();
    bool has_failures() const { return !failing_.empty(); }
    const FailureRecord& first_failure() const { return failing_.begin()->second; }
    std::vector<FailureRecord> failures() const;

    // Resamples f and refreshes the failing set; full_rescan rechecks every
    // edge instead of the affected set.
    void resample(const FailureRecord& f, PortableRng& rng, bool full_rescan = false);

    std::optional<FailureRecord> check_edge(unsigned u, unsigned v) const;

    // Need counts for Monte Carlo tallies: all unmet ordered (t_i, t_j)
    // needs of an a-edge, and the unmet (a_k, t_j) needs of a t-edge by
    // orientation.
    unsigned count_unmet_att(unsigned u, unsigned v) const;
    std::pair<unsigned, unsigned> count_unmet_tatta(unsigned u, unsigned v) const;

private:
    void rebuild_masks();
    void recheck(unsigned u, unsigned v);
    void apply_color(unsigned u, unsigned v, AtomIdx t_new);
    std::optional<FailureRecord> check_a_edge(unsigned u, unsigned v) const;
    std::optional<FailureRecord> check_t_edge(unsigned u, unsigned v) const;

    LabelMatrix& m_;
    const AtomStructure& s_;
    unsigned q_, n_, sq_;
    // Per vertex: a-color neighbor masks over its own copy (static) and
    // t-color masks over the opposite copy (maintained across redraws).
    // Masks use copy-local bit positions.
    std::vector<Bitset> a_mask_;  // v * (q+1) + k
    std::vector<Bitset> t_mask_;  // v * n + (j-1)
    std::map<std::uint64_t, FailureRecord> failing_;
};

}  // namespace lqn
