#pragma once

#include "ltsi/core.hpp"

#include <set>

namespace ltsi {

enum class EventMode { General, Simplified };

/// Partition of directed transitions into events, with the reversal pairing,
/// polarity, and the square ladder recorded per union for ladder extraction.
class EventPartition {
  public:
    EventMode mode() const { return mode_; }
    size_t event_count() const { return members_.size(); }

    uint32_t event_of(DirRef r) const { return class_of_[r.code]; }
    const std::vector<DirRef>& members(uint32_t e) const { return members_[e]; }
    /// Least member – the canonical representative.
    DirRef representative(uint32_t e) const { return members_[e].front(); }

    uint32_t rev_event(uint32_t e) const { return rev_class_[e]; }
    bool is_forward_event(uint32_t e) const { return fwd_polarity_[e]; }
    uint32_t und_event(uint32_t e) const { return fwd_polarity_[e] ? e : rev_class_[e]; }
    SignedLabel event_label(const Ltsi& l, uint32_t e) const {
        return l.signed_label(representative(e));
    }
    /// False when a class's members do not reverse into a single class
    /// (possible only with an unsound simplified-mode override).
    bool rev_consistent() const { return rev_consistent_; }

    /// Forward event ids in canonical order.
    std::vector<uint32_t> forward_events() const;

    /// Connecting path from target(t) to target(t2) whose steps are the far
    /// sides of the squares identifying t with t2. Requires t ~ t2.
    Path ladder(const Ltsi& l, DirRef t, DirRef t2) const;

    friend EventPartition compute_events(const Ltsi& l, EventMode mode,
                                         bool allow_unsound_simplified);

    bool same_partition(const EventPartition& other) const {
        return class_of_ == other.class_of_;
    }

  private:
    EventMode mode_ = EventMode::General;
    std::vector<uint32_t> class_of_;          // indexed by DirRef.code
    std::vector<std::vector<DirRef>> members_; // sorted; event ids ordered by least member
    std::vector<uint32_t> rev_class_;
    std::vector<bool> fwd_polarity_;
    bool rev_consistent_ = true;
    // spanning edges: per directed transition, (identified partner, far side)
    std::vector<std::vector<std::pair<DirRef, DirRef>>> adj_;
};

/// Union-find closure over enumerated commuting squares. General mode
/// requires independence at all four corners plus the non-degeneracy side
/// conditions; simplified mode requires only the generating pair and is
/// sound only on pre-reversible inputs (enforced unless overridden).
EventPartition compute_events(const Ltsi& l, EventMode mode,
                              bool allow_unsound_simplified = false);

/// Signed occurrence count of event e in path p: +1 per step in e, -1 per
/// step in rev e.
long event_count(const EventPartition& ev, const Path& p, uint32_t e);

/// Signed counts of all forward events of `ev` along p, indexed by position
/// in ev.forward_events().
std::vector<long> sharp_signature(const EventPartition& ev, const Path& p);

struct EventRelations {
    std::vector<uint32_t> fwd_events;          // canonical order
    std::set<std::pair<uint32_t, uint32_t>> coind;  // symmetric, on all events
    // Indexed by positions in fwd_events.
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<bool>> conflict;
    bool bounded = false;  // true when computed by bounded general enumeration
    long bound = -1;

    bool coinitially_independent(uint32_t e1, uint32_t e2) const {
        return coind.count({std::min(e1, e2), std::max(e1, e2)}) != 0;
    }
    int fwd_pos(uint32_t e) const;
};

/// Derive coinitial independence on events, the causality order on forward
/// events, and conflict. On pre-reversible inputs the order and conflict are
/// exact (rooted forward-only enumeration over the forward DAG); otherwise
/// they come from bounded general rooted enumeration and are flagged bounded.
/// Throws NoRoot when no irreversible state exists.
EventRelations compute_relations(const Ltsi& l, const EventPartition& ev,
                                 bool pre_reversible, long bound = -1);

/// Exactly-one-of {=, <, >, conflict, coinitially-independent} over all pairs
/// of forward events. Unknown (with the offending pair still reported when
/// one exists) if the input is not pre-reversible.
Verdict check_polychotomy(const Ltsi& l, const EventPartition& ev,
                          const EventRelations& rel, bool pre_reversible);

}  // namespace ltsi
