#pragma once

#include "ltsi/axioms.hpp"
#include "ltsi/core.hpp"
#include "ltsi/events.hpp"

namespace ltsi {

/// All paths from `from` (to `to`, when given) of length <= max_len, in
/// deterministic order (length-lexicographic on steps).
std::vector<Path> enumerate_paths(const Ltsi& l, StateId from,
                                  std::optional<StateId> to, size_t max_len);

/// One elementary rewrite of the causal-equivalence engine, applied at step
/// index `pos` of a path:
///   swap:   replace (t,u') by (u,t') across a square generated by t i u
///   cancel: delete an adjacent (x, rev x)
///   insert: insert (x, rev x), x leaving the state at pos
struct RewriteStep {
    enum Kind { Swap, Cancel, Insert } kind;
    size_t pos;
    DirRef inserted;   // Insert: x
    DirRef swap_u;     // Swap: the generating partner u
    DirRef swap_tc;    // Swap: replacement second step t'

    std::string to_string(const Ltsi& l) const;
};

/// Apply one step; throws UsageError if the step does not apply.
Path apply_step(const Ltsi& l, const Path& p, const RewriteStep& s);

struct EquivDecision {
    enum Outcome { Yes, No, Unknown } outcome;
    std::vector<RewriteStep> trace;  // Yes: transforms first path into second
    std::string certificate;         // No: which invariant separates them
    std::string detail;

    bool yes() const { return outcome == Yes; }
    bool no() const { return outcome == No; }
};

struct EquivOptions {
    long slack = 2;
    size_t node_cap = 500000;  // bidirectional search budget
};

/// Bounded bidirectional search over the rewrite system, with negative
/// certificates checked first (endpoints, per-label signed counts, and the
/// signed event-count signature over simplified-mode events, which every
/// rewrite move preserves). Requires SP.
EquivDecision causally_equivalent(const Ltsi& l, const Path& r, const Path& s,
                                  const EquivOptions& opts = {});

struct ParabolicResult {
    Path normal_form;
    std::vector<RewriteStep> trace;  // elementary steps from input to normal form
    bool stuck = false;
    DirRef stuck_t, stuck_u;  // forward/backward pair with no completion
};

/// Constructive reduction to backward-only . forward-only form; never
/// increases length, preserves endpoints. Gets stuck (reported, not thrown)
/// when the needed BTI pair or square completion is missing.
ParabolicResult parabolic_normal_form(const Ltsi& l, const Path& r);

struct PathCheckOptions {
    long bound = -1;  // default: 2 * longest forward-only simple path + 2
    long slack = 2;
    bool force_empirical = false;  // skip the theorem shortcuts
};

Verdict check_PL(const Ltsi& l, const PathCheckOptions& opts = {});
Verdict check_CC(const Ltsi& l, const PathCheckOptions& opts = {});
Verdict check_UT(const Ltsi& l);

/// Longest forward-only path without repeated states.
long longest_forward_simple_path(const Ltsi& l);

struct RootResult {
    StateId root;
    Path forward_witness;  // forward-only path from root to the query state
};

/// The unique irreversible state backward-reachable from p. Throws NoRoot
/// when the backward search cycles, NonUniqueRoot when several roots exist.
RootResult irreversible_root(const Ltsi& l, StateId p);

}  // namespace ltsi
