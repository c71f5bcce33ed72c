#include "ltsi/properties.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ltsi {

const char* property_name(PropertyId p) {
    switch (p) {
        case PropertyId::BLD: return "BLD";
        case PropertyId::ID: return "ID";
        case PropertyId::NRE: return "NRE";
        case PropertyId::RPI: return "RPI";
        case PropertyId::ECh: return "ECh";
        case PropertyId::CS_i: return "CS_i";
        case PropertyId::CL_i: return "CL_i";
        case PropertyId::CS_ci: return "CS_ci";
        case PropertyId::CL_ci: return "CL_ci";
        case PropertyId::CS_ord: return "CS_ord";
        case PropertyId::CL_ord: return "CL_ord";
    }
    return "?";
}

Analysis::Analysis(const Ltsi& ltsi)
    : l(ltsi),
      sp(check_axiom(ltsi, AxiomId::SP)),
      bti(check_axiom(ltsi, AxiomId::BTI)),
      wf(check_axiom(ltsi, AxiomId::WF)),
      pci(check_axiom(ltsi, AxiomId::PCI)),
      pre_reversible(sp.holds() && bti.holds() && wf.holds() && pci.holds()),
      events(default_events(ltsi, pre_reversible)),
      sharp_events(compute_events(ltsi, EventMode::Simplified, true)) {}

const EventRelations& Analysis::relations(long bound) const {
    if (!rel_ || (rel_bound_ != bound && !pre_reversible)) {
        rel_ = compute_relations(l, sharp_events, pre_reversible, bound);
        rel_bound_ = bound;
    }
    return *rel_;
}

namespace {

Verdict check_bld(const Ltsi& l) {
    for (StateId s = 0; s < l.state_count(); ++s) {
        std::map<LabelId, DirRef> seen;
        for (DirRef r : l.out(s)) {
            if (r.is_forward()) continue;
            LabelId a = l.und_label(r);
            auto it = seen.find(a);
            if (it != seen.end()) {
                Verdict v = Verdict::no("backward " + l.ref_name(it->second) + "," +
                                            l.ref_name(r) + " at " + l.state_name(s) +
                                            " share label " + l.label_name(a),
                                        "backward label scan");
                v.wit_trans = {it->second, r};
                return v;
            }
            seen.emplace(a, r);
        }
    }
    return Verdict::yes("backward label scan");
}

Verdict check_id(const Ltsi& l) {
    auto all = l.all_directed();
    for (DirRef t : all)
        for (DirRef u : all) {
            if (!(t < u)) continue;
            if (l.source(t) != l.source(u)) continue;
            for (const Square& sq : squares_of(l, t, u)) {
                bool same_polarity = t.is_backward() == u.is_backward();
                if (same_polarity) {
                    if (l.target(t) == l.target(u)) continue;
                } else {
                    if (l.source(t) == l.target(sq.t_comp)) continue;
                }
                if (!l.independent(t, u)) {
                    Verdict v = Verdict::no("diamond on " + l.ref_name(t) + "," +
                                                l.ref_name(u) + " at " +
                                                l.state_name(l.source(t)) +
                                                " without independence",
                                            "diamond scan");
                    v.wit_trans = {t, u, sq.u_comp, sq.t_comp};
                    return v;
                }
            }
        }
    return Verdict::yes("diamond scan");
}

Verdict check_rpi(const Ltsi& l) {
    for (const auto& p : l.independence()) {
        DirRef refs[2] = {p.first, p.second};
        for (int k = 0; k < 2; ++k) {
            DirRef t = refs[k], u = refs[1 - k];
            if (!l.independent(t.rev(), u)) {
                Verdict v = Verdict::no(l.ref_name(t) + " i " + l.ref_name(u) +
                                            " but not " + l.ref_name(t.rev()) + " i " +
                                            l.ref_name(u),
                                        "pair scan");
                v.wit_trans = {t, u};
                return v;
            }
        }
    }
    return Verdict::yes("pair scan");
}

Verdict check_ech(const Ltsi& l, const EventPartition& ev) {
    for (const auto& p : l.independence()) {
        if (ev.event_of(p.first) == ev.event_of(p.second)) {
            Verdict v = Verdict::no(l.ref_name(p.first) + " ~ " + l.ref_name(p.second) +
                                        " and independent",
                                    "pair scan");
            v.wit_trans = {p.first, p.second};
            return v;
        }
    }
    return Verdict::yes("pair scan");
}

// Rooted path scan state: end state, signed counts of forward events, and
// which "bad" transitions (conclusion-relevant) have occurred.
struct ScanKey {
    StateId state;
    uint64_t badmask;
    std::vector<int16_t> counts;

    friend bool operator<(const ScanKey& a, const ScanKey& b) {
        if (a.state != b.state) return a.state < b.state;
        if (a.badmask != b.badmask) return a.badmask < b.badmask;
        return a.counts < b.counts;
    }
};

struct ScanNode {
    ScanKey key;
    long prev;      // index into node list, -1 for the origin
    DirRef step;    // edge taken from prev
};

Path rebuild_path(const std::vector<ScanNode>& nodes, long idx, StateId start) {
    std::vector<DirRef> steps;
    while (idx >= 0 && nodes[idx].prev >= 0) {
        steps.push_back(nodes[idx].step);
        idx = nodes[idx].prev;
    }
    std::reverse(steps.begin(), steps.end());
    Path p;
    p.start = start;
    p.steps = std::move(steps);
    return p;
}

}  // namespace

Verdict check_property(const Analysis& a, PropertyId p) {
    switch (p) {
        case PropertyId::BLD: return check_bld(a.l);
        case PropertyId::ID: return check_id(a.l);
        case PropertyId::RPI: return check_rpi(a.l);
        case PropertyId::ECh: return check_ech(a.l, a.sharp_events);
        default:
            throw Error(ErrorCode::UsageError,
                        std::string(property_name(p)) + " has a dedicated entry point");
    }
}

Verdict check_NRE(const Analysis& a, const PropertyOptions& opts) {
    const Ltsi& l = a.l;
    if (a.pre_reversible && !opts.force_empirical)
        return Verdict::derived("pre-reversible", "theorem route");
    if (l.irreversible().empty() && l.state_count() > 0)
        throw Error(ErrorCode::NoRoot, "no irreversible state exists");

    long bound = opts.bound >= 0 ? opts.bound : 2 * static_cast<long>(l.forward_count()) + 2;
    const auto& ev = a.sharp_events;
    auto fwd_events = ev.forward_events();
    std::map<uint32_t, size_t> pos;
    for (size_t i = 0; i < fwd_events.size(); ++i) pos[fwd_events[i]] = i;
    bool forward_only = a.wf.holds();

    std::map<ScanKey, long> seen;
    std::vector<ScanNode> nodes;
    std::deque<long> frontier;
    std::map<long, StateId> origin_of;  // node -> root

    for (StateId root : l.irreversible()) {
        ScanKey k{root, 0, std::vector<int16_t>(fwd_events.size(), 0)};
        if (seen.count(k)) continue;
        nodes.push_back({k, -1, DirRef()});
        long id = static_cast<long>(nodes.size()) - 1;
        seen.emplace(k, id);
        origin_of[id] = root;
        frontier.push_back(id);
    }

    auto root_of = [&](long idx) {
        long cur = idx;
        while (nodes[cur].prev >= 0) cur = nodes[cur].prev;
        return origin_of.at(cur);
    };

    for (long depth = 0; depth <= bound && !frontier.empty(); ++depth) {
        std::deque<long> next;
        for (long id : frontier) {
            ScanKey key = nodes[id].key;
            for (int16_t c : key.counts)
                if (c > 1) {
                    Path w = rebuild_path(nodes, id, root_of(id));
                    Verdict v = Verdict::no(
                        "rooted path " + w.to_string(l) + " repeats a forward event",
                        forward_only ? "forward-only rooted enumeration"
                                     : "bounded rooted enumeration");
                    v.wit_paths = {w};
                    return v;
                }
            if (depth == bound) continue;
            for (DirRef r : l.out(key.state)) {
                if (forward_only && r.is_backward()) continue;
                ScanKey nk = key;
                nk.state = l.target(r);
                uint32_t c = ev.event_of(r);
                if (ev.is_forward_event(c)) ++nk.counts[pos.at(c)];
                else --nk.counts[pos.at(ev.rev_event(c))];
                if (seen.count(nk)) continue;
                nodes.push_back({nk, id, r});
                long nid = static_cast<long>(nodes.size()) - 1;
                seen.emplace(nk, nid);
                next.push_back(nid);
            }
        }
        frontier = std::move(next);
    }
    Verdict v = Verdict::bounded(bound, forward_only ? "forward-only rooted enumeration"
                                                     : "bounded rooted enumeration");
    return v;
}

Verdict check_cs_cl(const Analysis& a, CsClVariant variant, CsClDirection dir,
                    const PropertyOptions& opts) {
    const Ltsi& l = a.l;
    const EventPartition& ev = a.sharp_events;

    if (!opts.force_empirical && a.pre_reversible) {
        if (dir == CsClDirection::Safety &&
            (variant == CsClVariant::CoinitialEvent || variant == CsClVariant::Order))
            return Verdict::derived("pre-reversible", "theorem route");
        if (variant == CsClVariant::Transition) {
            Verdict ire = check_axiom(l, AxiomId::IRE, &ev);
            if (ire.holds())
                return Verdict::derived("pre-reversible^IRE", "theorem route");
        }
        if (dir == CsClDirection::Liveness &&
            (variant == CsClVariant::CoinitialEvent || variant == CsClVariant::Order)) {
            Verdict bf = check_axiom(l, AxiomId::BFCIRE, &ev);
            if (bf.holds()) return Verdict::derived("BFCIRE", "theorem route");
            // A failing backward-forward pair is itself a failing liveness
            // instance with r the single forward transition.
            DirRef x = bf.wit_trans.at(0), y = bf.wit_trans.at(1);
            DirRef bt = x.is_backward() ? x : y;
            DirRef fu = x.is_backward() ? y : x;
            DirRef t0 = bt.rev();
            Path r;
            r.start = l.source(fu);
            r.steps = {fu};
            Verdict v = Verdict::no("t0=" + l.ref_name(t0) + " r=" + r.to_string(l) +
                                        ": no equivalent reversal into " +
                                        l.state_name(l.target(fu)),
                                    "BFCIRE equivalence");
            v.wit_trans = {t0};
            v.wit_paths = {r};
            return v;
        }
    }

    // Bounded instance enumeration.
    long bound = opts.bound >= 0 ? opts.bound : 2 * static_cast<long>(l.forward_count()) + 2;
    auto fwd_events = ev.forward_events();
    std::map<uint32_t, size_t> pos;
    for (size_t i = 0; i < fwd_events.size(); ++i) pos[fwd_events[i]] = i;
    if (ev.event_count() > 64)
        throw Error(ErrorCode::StateBudgetExceeded,
                    "more than 64 events in bounded instance enumeration");

    // Per forward event, the states some member ends in (reversal targets).
    std::map<uint32_t, std::vector<bool>> ends_at;
    for (uint32_t e : fwd_events) {
        std::vector<bool> bits(l.state_count(), false);
        for (DirRef m : ev.members(e)) bits[l.target(m)] = true;
        ends_at[e] = std::move(bits);
    }

    const EventRelations* rel = nullptr;
    if (variant == CsClVariant::Order) rel = &a.relations(bound);

    // Coinitial independence on events, straight from the declared relation.
    std::set<std::pair<uint32_t, uint32_t>> coind;
    for (const auto& p : l.independence()) {
        if (l.source(p.first) != l.source(p.second)) continue;
        uint32_t e1 = ev.event_of(p.first), e2 = ev.event_of(p.second);
        coind.insert({std::min(e1, e2), std::max(e1, e2)});
    }

    bool skipped_negative = false;

    for (TransId ti = 0; ti < l.forward_count(); ++ti) {
        DirRef t0(ti, false);
        uint32_t e0 = ev.event_of(t0);
        uint32_t re0 = ev.rev_event(e0);
        StateId q0 = l.target(t0);

        // Transition formulation: an occurrence is "bad" when it is not
        // independent of rev t0. The predicates only need, per event, whether
        // a bad occurrence of it happened, so the scan masks events, not
        // transitions.
        std::vector<bool> is_bad(l.directed_count(), false);
        if (variant == CsClVariant::Transition)
            for (DirRef d : l.all_directed())
                if (!l.independent(t0.rev(), d)) is_bad[d.code] = true;

        std::map<ScanKey, long> seen;
        std::vector<ScanNode> nodes;
        std::deque<long> frontier;
        ScanKey k0{q0, 0, std::vector<int16_t>(fwd_events.size(), 0)};
        nodes.push_back({k0, -1, DirRef()});
        seen.emplace(k0, 0);
        frontier.push_back(0);

        for (long depth = 0; depth <= bound && !frontier.empty(); ++depth) {
            std::deque<long> next;
            for (long id : frontier) {
                const ScanKey key = nodes[id].key;
                if (key.counts[pos.at(e0)] != 0) goto expand;
                {
                    // Predicate: every positively-counted occurrence is
                    // "compatible" with undoing t0, per the formulation.
                    bool hypothesis = true;
                    uint32_t offender_event = 0;
                    bool offender_is_event = false;
                    if (variant == CsClVariant::Transition) {
                        for (uint32_t e = 0; e < ev.event_count(); ++e) {
                            if (!(key.badmask >> e & 1)) continue;
                            long cnt = ev.is_forward_event(e)
                                           ? key.counts[pos.at(e)]
                                           : -key.counts[pos.at(ev.rev_event(e))];
                            if (cnt > 0) {
                                hypothesis = false;
                                offender_event = e;
                                break;
                            }
                            if (cnt < 0) skipped_negative = true;
                        }
                    } else {
                        for (size_t i = 0; i < fwd_events.size() && hypothesis; ++i) {
                            long cnt = key.counts[i];
                            if (cnt == 0) continue;
                            uint32_t e = cnt > 0 ? fwd_events[i] : ev.rev_event(fwd_events[i]);
                            // a negatively counted forward event is a
                            // positively counted backward event
                            if (variant == CsClVariant::CoinitialEvent) {
                                uint32_t x = std::min(re0, e), y = std::max(re0, e);
                                if (!coind.count({x, y})) {
                                    hypothesis = false;
                                    offender_event = e;
                                    offender_is_event = true;
                                }
                            } else {  // Order: forward events only
                                if (cnt > 0) {
                                    int i0 = rel->fwd_pos(e0), ie = rel->fwd_pos(e);
                                    if (i0 >= 0 && ie >= 0 && i0 != ie &&
                                        rel->leq[i0][ie]) {
                                        hypothesis = false;
                                        offender_event = e;
                                        offender_is_event = true;
                                    }
                                }
                            }
                        }
                    }

                    bool reversal_exists = ends_at.at(e0)[key.state];
                    if (dir == CsClDirection::Safety) {
                        if (reversal_exists && !hypothesis) {
                            Path r = rebuild_path(nodes, id, q0);
                            std::string off;
                            if (offender_is_event) {
                                off = "event [" +
                                      l.ref_name(ev.representative(offender_event)) +
                                      "]";
                            } else {
                                for (DirRef step : r.steps)
                                    if (is_bad[step.code] &&
                                        ev.event_of(step) == offender_event) {
                                        off = l.ref_name(step);
                                        break;
                                    }
                            }
                            Verdict v = Verdict::no(
                                "t0=" + l.forward(ti).name + " r=" + r.to_string(l) +
                                    ": reversal enabled but " + off +
                                    " is not compatible",
                                "bounded instance enumeration");
                            v.wit_trans = {t0};
                            v.wit_paths = {r};
                            return v;
                        }
                    } else {
                        if (hypothesis && !reversal_exists) {
                            Path r = rebuild_path(nodes, id, q0);
                            Verdict v = Verdict::no(
                                "t0=" + l.forward(ti).name + " r=" + r.to_string(l) +
                                    ": no equivalent reversal into " +
                                    l.state_name(key.state),
                                "bounded instance enumeration");
                            v.wit_trans = {t0};
                            v.wit_paths = {r};
                            return v;
                        }
                    }
                }
            expand:
                if (depth == bound) continue;
                for (DirRef r : l.out(nodes[id].key.state)) {
                    ScanKey nk = nodes[id].key;
                    nk.state = l.target(r);
                    uint32_t c = ev.event_of(r);
                    if (ev.is_forward_event(c)) ++nk.counts[pos.at(c)];
                    else --nk.counts[pos.at(ev.rev_event(c))];
                    if (variant == CsClVariant::Transition && is_bad[r.code])
                        nk.badmask |= 1ull << c;
                    if (seen.count(nk)) continue;
                    nodes.push_back({nk, id, r});
                    long nid = static_cast<long>(nodes.size()) - 1;
                    seen.emplace(nk, nid);
                    next.push_back(nid);
                }
            }
            frontier = std::move(next);
        }
    }

    Verdict v = Verdict::bounded(bound, "bounded instance enumeration");
    if (skipped_negative)
        v.notes.push_back("negative-count occurrences skipped by the >0 filter");
    if (variant == CsClVariant::Order && rel && rel->bounded)
        v.notes.push_back("order relation from bounded enumeration");
    return v;
}

}  // namespace ltsi
