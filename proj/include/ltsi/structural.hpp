#pragma once

#include "ltsi/core.hpp"
#include "ltsi/events.hpp"

namespace ltsi {

/// Restrict independence to coinitial pairs; everything else unchanged.
Ltsi map_c(const Ltsi& l);

/// Extend independence along the event partition on both sides. Throws
/// ReflexivityBreach if the extension would produce a reflexive pair.
Ltsi map_g(const Ltsi& l, const EventPartition& ev);

/// Alternative label-route lifting: synthesize the coinitial generator
/// relation and apply it to arbitrary pairs. The result may not satisfy IEC.
Ltsi map_g_by_labels(const Ltsi& l);

/// No state has two distinct incoming forward transitions.
Verdict check_backward_determinism(const Ltsi& l);

}  // namespace ltsi
