#pragma once

#include "ltsi/types.hpp"

namespace ltsi {

/// Declaration-level reference to a directed transition: "t1" or "~t1".
struct RefSpec {
    std::string trans_id;
    bool backward = false;
};

struct TransitionSpec {
    std::string id;
    std::string source;
    std::string label;
    std::string target;
};

/// Forward-only declaration of a system; reverses are synthesized.
struct LtsiSpec {
    std::vector<std::string> states;
    std::vector<TransitionSpec> transitions;
    std::vector<std::pair<RefSpec, RefSpec>> independence;
};

/// Build the combined system: closes the transition set under reversal,
/// closes independence under symmetry, rejects reflexive pairs and dangling
/// references. Throws Error on invalid declarations.
Ltsi build_combined(const LtsiSpec& spec);

struct Violation {
    std::string invariant;
    std::string detail;
};

/// Total structural audit of a (possibly hand-assembled) value.
/// Empty result iff all Ltsi invariants hold.
std::vector<Violation> validate(const Ltsi& l);

/// Least fixpoint of: (i) all distinct coinitial backward pairs (BTI), and
/// (ii) for every commuting square on a pair t ι u, the propagated pair
/// (u', rev t) unless reflexive. Monotone, idempotent, adds only coinitial
/// pairs.
Ltsi saturate_coinitial(const Ltsi& l);

/// Componentwise union. With namespacing, state and transition ids of the
/// left component get prefix "a.", the right "b.". Without it, throws
/// StateClash on any id collision.
Ltsi disjoint_union(const Ltsi& l1, const Ltsi& l2, bool namespaced = true);

/// Replace the independence relation wholesale (used by the structural maps
/// and saturation). Pairs are canonicalized; reflexive pairs rejected.
Ltsi with_independence(const Ltsi& l, std::vector<IndependencePair> pairs);

/// Commuting square built on a coinitial pair (t, u): cofinal completions
/// u' from target(t) and t' from target(u) with matching signed labels.
struct Square {
    DirRef t, u, t_comp, u_comp;  // u_comp: completion of u's label after t
};

/// All completions of the coinitial pair (t, u); empty when none.
std::vector<Square> squares_of(const Ltsi& l, DirRef t, DirRef u);

}  // namespace ltsi
