#pragma once

#include "ltsi/core.hpp"
#include "ltsi/events.hpp"

namespace ltsi {

enum class AxiomId { SP, BTI, WF, PCI, IRE, CIRE, BFCIRE, IEC, IC, CLG, LG };

const char* axiom_name(AxiomId a);
bool axiom_needs_events(AxiomId a);

/// Exact, exhaustive decision of a single axiom. Event-dependent axioms take
/// a partition; when omitted one is computed (simplified if pre-reversible,
/// general otherwise) unless auto_events is false, in which case
/// EventsRequired is raised.
Verdict check_axiom(const Ltsi& l, AxiomId a,
                    const EventPartition* events = nullptr,
                    bool auto_events = true);

/// Candidate generator relation over underlying labels, returned by the
/// structural checks when they hold.
struct GeneratorRelation {
    std::vector<std::pair<LabelId, LabelId>> pairs;  // canonical, symmetric-closed
    std::string to_string(const Ltsi& l) const;
};

struct StructuralResult {
    Verdict verdict;
    GeneratorRelation generator;  // meaningful when verdict holds
};

/// CLG / LG detection: synthesizes the unique candidate I from the declared
/// independence and tests the biconditional regeneration.
StructuralResult check_structural(const Ltsi& l, AxiomId which);

/// SP and BTI and WF and PCI; witness is the first failing axiom's.
Verdict is_pre_reversible(const Ltsi& l);

/// Partition selection rule used by event-dependent checks and the CLI:
/// simplified mode when pre-reversible, general otherwise.
EventPartition default_events(const Ltsi& l);
EventPartition default_events(const Ltsi& l, bool pre_reversible);

}  // namespace ltsi
