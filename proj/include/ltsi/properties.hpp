#pragma once

#include "ltsi/axioms.hpp"
#include "ltsi/events.hpp"
#include "ltsi/paths.hpp"

namespace ltsi {

enum class PropertyId { BLD, ID, NRE, RPI, ECh, CS_i, CL_i, CS_ci, CL_ci, CS_ord, CL_ord };

const char* property_name(PropertyId p);

struct PropertyOptions {
    long bound = -1;            // default: 2 * forward transitions + 2
    bool force_empirical = false;  // skip theorem shortcuts (used by meta tests)
};

/// Context shared by the property checks; computed once per system.
struct Analysis {
    const Ltsi& l;
    Verdict sp, bti, wf, pci;
    bool pre_reversible;
    /// Partition for the event-dependent axioms: simplified when
    /// pre-reversible, general otherwise.
    EventPartition events;
    /// Partition for the occurrence-counting properties: always the
    /// simplified closure, which every causal-equivalence move preserves.
    EventPartition sharp_events;

    explicit Analysis(const Ltsi& ltsi);
    const EventRelations& relations(long bound = -1) const;

  private:
    mutable std::optional<EventRelations> rel_;
    mutable long rel_bound_ = -2;
};

/// Exact exhaustive checks for BLD, ID, RPI, ECh.
Verdict check_property(const Analysis& a, PropertyId p);

/// No event repeats along rooted paths: theorem route when pre-reversible,
/// forward-only scan when WF holds, bounded general enumeration otherwise.
Verdict check_NRE(const Analysis& a, const PropertyOptions& opts = {});

enum class CsClVariant { Transition, CoinitialEvent, Order };
enum class CsClDirection { Safety, Liveness };

/// Causal safety / liveness in the transition-independence, event, and order
/// formulations, with the theorem shortcuts applied when their hypotheses
/// verify and bounded instance enumeration otherwise.
Verdict check_cs_cl(const Analysis& a, CsClVariant variant, CsClDirection dir,
                    const PropertyOptions& opts = {});

}  // namespace ltsi
