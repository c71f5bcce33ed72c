#pragma once

#include "ltsi/core.hpp"

#include <memory>

namespace ltsi {
namespace calc {

/// Recursion-free interleaving terms: 0, prefix, choice, parallel.
struct Term {
    enum Kind { Nil, Prefix, Sum, Par } kind = Nil;
    std::string action;                 // Prefix
    std::vector<std::shared_ptr<Term>> children;

    std::string to_string() const;
};

using TermPtr = std::shared_ptr<Term>;

/// Precedence: prefix > + > | ; parentheses allowed.
/// Throws SyntaxError with a character position.
TermPtr parse_term(const std::string& text);

struct CompileOptions {
    size_t max_states = 10000;
    size_t max_prefixes = 60;
};

/// Keyed-state semantics: states are sets of executed prefix occurrences; a
/// prefix fires when the prefixes above it are executed and the sibling of
/// every choice on its spine is untouched. Labels are enriched with the
/// occurrence key; independence is generated coinitially from occurrences
/// that diverge at a parallel composition.
Ltsi compile(const Term& t, const CompileOptions& opts = {});

/// Deterministic pseudo-random terms within generation caps, preceded by a
/// fixed set of regression terms.
std::vector<std::string> corpus(uint64_t seed, size_t n);

}  // namespace calc
}  // namespace ltsi
