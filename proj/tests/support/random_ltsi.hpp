#pragma once

// Seeded random finite systems for the property suites. Three flavors keep
// the axiom profiles diverse: uniform random graphs, compiled interleaving
// terms with perturbed independence (square-rich, so the event-based axioms
// get exercised on both sides), and compiled terms with a dropped transition
// (breaking completions). Deterministic across platforms (splitmix64).

#include "ltsi/calculus.hpp"
#include "ltsi/core.hpp"
#include "ltsi/events.hpp"
#include "ltsi/structural.hpp"

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace ltsi_testgen {

struct Rng {
    uint64_t x;
    explicit Rng(uint64_t seed) : x(seed) {}
    uint64_t next() {
        x += 0x9e3779b97f4a7c15ull;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

inline ltsi::Ltsi uniform_random(Rng& rng, size_t max_states, size_t max_fwd) {
    size_t ns = 2 + rng.below(max_states - 1);
    size_t nt = 1 + rng.below(max_fwd);
    const char* labels[] = {"a", "b", "c", "d"};

    ltsi::LtsiSpec spec;
    for (size_t i = 0; i < ns; ++i) spec.states.push_back("s" + std::to_string(i));
    std::vector<std::tuple<size_t, size_t, size_t>> used;
    for (size_t i = 0; i < nt; ++i) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            size_t src = rng.below(ns), dst = rng.below(ns), lab = rng.below(4);
            bool dup = false;
            for (auto& [s, l2, d] : used)
                if (s == src && l2 == lab && d == dst) dup = true;
            if (dup) continue;
            used.push_back({src, lab, dst});
            spec.transitions.push_back(
                {"t" + std::to_string(spec.transitions.size()), "s" + std::to_string(src),
                 labels[lab], "s" + std::to_string(dst)});
            break;
        }
    }
    ltsi::Ltsi base = ltsi::build_combined(spec);

    auto all = base.all_directed();
    std::vector<ltsi::IndependencePair> pairs;
    if (!all.empty()) {
        size_t np = rng.below(all.size());
        for (size_t i = 0; i < np; ++i) {
            ltsi::DirRef a = all[rng.below(all.size())];
            ltsi::DirRef b = all[rng.below(all.size())];
            if (a == b) continue;
            pairs.push_back(ltsi::IndependencePair(a, b));
        }
    }
    return ltsi::with_independence(base, std::move(pairs));
}

inline std::string small_term(Rng& rng) {
    const char* acts[] = {"a", "b", "c"};
    size_t comps = 1 + rng.below(3);
    std::string term;
    for (size_t c = 0; c < comps; ++c) {
        size_t len = 1 + rng.below(2);
        bool sum = len == 2 && rng.below(2) == 0;
        std::string part;
        if (sum) {
            part = std::string(acts[rng.below(3)]) + ".0+" +
                   std::string(acts[rng.below(3)]) + ".0";
        } else {
            part = "0";
            for (size_t k = 0; k < len; ++k)
                part = std::string(acts[rng.below(3)]) + "." + part;
        }
        if (!term.empty()) term += "|";
        term += sum && comps > 1 ? "(" + part + ")" : part;
    }
    return term;
}

inline ltsi::Ltsi term_based(Rng& rng, size_t max_states, bool drop_transition) {
    ltsi::Ltsi l;
    for (int attempt = 0;; ++attempt) {
        std::string t = attempt < 6 ? small_term(rng) : "a.0|b.0";
        l = ltsi::calc::compile(*ltsi::calc::parse_term(t));
        if (l.state_count() <= max_states && l.forward_count() >= 1) break;
    }
    if (drop_transition && l.forward_count() > 1) {
        ltsi::TransId victim = static_cast<ltsi::TransId>(rng.below(l.forward_count()));
        ltsi::LtsiSpec spec;
        for (ltsi::StateId s = 0; s < l.state_count(); ++s)
            spec.states.push_back(l.state_name(s));
        for (ltsi::TransId t = 0; t < l.forward_count(); ++t) {
            if (t == victim) continue;
            const auto& f = l.forward(t);
            spec.transitions.push_back({f.name, l.state_name(f.source),
                                        l.label_name(f.label),
                                        l.state_name(f.target)});
        }
        for (const auto& p : l.independence()) {
            if (p.first.fwd_index() == victim || p.second.fwd_index() == victim)
                continue;
            spec.independence.push_back(
                {{l.forward(p.first.fwd_index()).name, p.first.is_backward()},
                 {l.forward(p.second.fwd_index()).name, p.second.is_backward()}});
        }
        l = ltsi::build_combined(spec);
    }

    // Perturb the independence relation: drop pairs, add a stray pair, or
    // extend along events, each sometimes.
    std::set<ltsi::IndependencePair> pairs(l.independence().begin(),
                                           l.independence().end());
    if (!pairs.empty() && rng.below(3) == 0) {
        size_t victim = rng.below(pairs.size());
        auto it = pairs.begin();
        std::advance(it, victim);
        pairs.erase(it);
    }
    auto all = l.all_directed();
    if (all.size() >= 2 && rng.below(3) == 0) {
        ltsi::DirRef a = all[rng.below(all.size())];
        ltsi::DirRef b = all[rng.below(all.size())];
        if (!(a == b)) pairs.insert(ltsi::IndependencePair(a, b));
    }
    l = ltsi::with_independence(
        l, std::vector<ltsi::IndependencePair>(pairs.begin(), pairs.end()));
    if (rng.below(4) == 0) {
        try {
            l = ltsi::map_g(l,
                            ltsi::compute_events(l, ltsi::EventMode::Simplified, true));
        } catch (const ltsi::Error&) {
            // extension can breach irreflexivity on perturbed relations; keep
            // the unextended system then
        }
    }
    return l;
}

// Three-label cube with a few corners deleted: the shape whose missing
// squares separate the event-based axioms from pre-reversibility.
inline ltsi::Ltsi cube_fragment(Rng& rng) {
    const char* names[8] = {"s000", "s100", "s010", "s001",
                            "s110", "s101", "s011", "s111"};
    std::set<std::string> removed;
    for (int i = 1; i < 8; ++i)
        if (rng.below(4) == 0) removed.insert(names[i]);

    ltsi::LtsiSpec spec;
    for (const char* n : names)
        if (!removed.count(n)) spec.states.push_back(n);
    const char* labels[3] = {"a", "b", "c"};
    int counter = 0;
    for (int axis = 0; axis < 3; ++axis)
        for (const char* n : names) {
            std::string src = n;
            if (removed.count(src) || src[1 + axis] == '1') continue;
            std::string dst = src;
            dst[1 + axis] = '1';
            if (removed.count(dst)) continue;
            spec.transitions.push_back({"t" + std::to_string(counter++), src,
                                        labels[axis], dst});
        }
    return ltsi::build_combined(spec);
}

inline ltsi::Ltsi random_ltsi(uint64_t seed, bool saturate = false,
                              size_t max_states = 8, size_t max_fwd = 12) {
    Rng rng(seed * 2 + 1);
    ltsi::Ltsi out;
    switch (rng.below(4)) {
        case 0: out = uniform_random(rng, max_states, max_fwd); break;
        case 1: out = term_based(rng, max_states, false); break;
        case 2: out = term_based(rng, max_states, true); break;
        default: out = ltsi::saturate_coinitial(cube_fragment(rng)); break;
    }
    if (saturate) out = ltsi::saturate_coinitial(out);
    return out;
}

}  // namespace ltsi_testgen
