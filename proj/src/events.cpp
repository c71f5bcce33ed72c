#include "ltsi/events.hpp"
#include "ltsi/axioms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ltsi {

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
    }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep least code as root
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<uint32_t> EventPartition::forward_events() const {
    std::vector<uint32_t> out;
    for (uint32_t e = 0; e < members_.size(); ++e)
        if (fwd_polarity_[e]) out.push_back(e);
    return out;
}

Path EventPartition::ladder(const Ltsi& l, DirRef t, DirRef t2) const {
    if (class_of_[t.code] != class_of_[t2.code])
        throw Error(ErrorCode::UsageError, "ladder requires equivalent transitions");
    // BFS over the recorded square edges inside the class.
    std::map<uint32_t, std::pair<uint32_t, DirRef>> pred;  // node -> (prev, via)
    std::deque<uint32_t> q{t.code};
    pred[t.code] = {t.code, DirRef()};
    while (!q.empty()) {
        uint32_t x = q.front();
        q.pop_front();
        if (x == t2.code) break;
        for (const auto& [y, via] : adj_[x]) {
            if (pred.count(y.code)) continue;
            pred[y.code] = {x, via};
            q.push_back(y.code);
        }
    }
    std::vector<DirRef> rev_steps;
    uint32_t cur = t2.code;
    while (cur != t.code) {
        auto [prev, via] = pred.at(cur);
        rev_steps.push_back(via);
        cur = prev;
    }
    Path p;
    p.start = l.target(t);
    p.steps.assign(rev_steps.rbegin(), rev_steps.rend());
    return p;
}

EventPartition compute_events(const Ltsi& l, EventMode mode,
                              bool allow_unsound_simplified) {
    if (mode == EventMode::Simplified && !allow_unsound_simplified) {
        Verdict pr = is_pre_reversible(l);
        if (!pr.holds())
            throw Error(ErrorCode::ModeUnsound,
                        "simplified event mode on a non-pre-reversible system: " +
                            pr.witness);
    }

    size_t n = l.directed_count();
    UnionFind uf(n);
    std::vector<std::vector<std::pair<DirRef, DirRef>>> adj(n);

    auto unite = [&](DirRef a, DirRef b, DirRef via) {
        adj[a.code].push_back({b, via});
        adj[b.code].push_back({a, via.rev()});
        uf.unite(a.code, b.code);
    };

    for (const auto& pair : l.independence()) {
        DirRef refs[2] = {pair.first, pair.second};
        for (int k = 0; k < 2; ++k) {
            DirRef t = refs[k], u = refs[1 - k];
            if (l.source(t) != l.source(u)) continue;
            for (const Square& sq : squares_of(l, t, u)) {
                if (mode == EventMode::General) {
                    bool corners = l.independent(u.rev(), sq.t_comp) &&
                                   l.independent(sq.t_comp.rev(), sq.u_comp.rev()) &&
                                   l.independent(sq.u_comp, t.rev());
                    if (!corners) continue;
                    bool same_polarity = t.is_backward() == u.is_backward();
                    if (same_polarity) {
                        if (l.target(t) == l.target(u)) continue;  // Q != R
                    } else {
                        if (l.source(t) == l.target(sq.t_comp)) continue;  // P != S
                    }
                }
                unite(t, sq.t_comp, sq.u_comp);
                unite(u, sq.u_comp, sq.t_comp);
            }
        }
    }

    EventPartition ev;
    ev.mode_ = mode;
    ev.adj_ = std::move(adj);
    ev.class_of_.assign(n, 0);

    std::map<uint32_t, uint32_t> root_to_id;
    for (uint32_t code = 0; code < n; ++code) {
        uint32_t r = uf.find(code);
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) {
            uint32_t id = static_cast<uint32_t>(ev.members_.size());
            root_to_id.emplace(r, id);
            ev.members_.push_back({});
            it = root_to_id.find(r);
        }
        ev.class_of_[code] = it->second;
        DirRef d;
        d.code = code;
        ev.members_[it->second].push_back(d);
    }

    ev.rev_class_.assign(ev.members_.size(), 0);
    ev.fwd_polarity_.assign(ev.members_.size(), false);
    ev.rev_consistent_ = true;
    for (uint32_t e = 0; e < ev.members_.size(); ++e) {
        ev.fwd_polarity_[e] = ev.members_[e].front().is_forward();
        uint32_t r = ev.class_of_[ev.members_[e].front().rev().code];
        ev.rev_class_[e] = r;
        for (DirRef m : ev.members_[e])
            if (ev.class_of_[m.rev().code] != r) ev.rev_consistent_ = false;
    }
    return ev;
}

long event_count(const EventPartition& ev, const Path& p, uint32_t e) {
    long n = 0;
    uint32_t re = ev.rev_event(e);
    for (DirRef r : p.steps) {
        uint32_t c = ev.event_of(r);
        if (c == e) ++n;
        else if (c == re && re != e) --n;
    }
    return n;
}

std::vector<long> sharp_signature(const EventPartition& ev, const Path& p) {
    auto fwd = ev.forward_events();
    std::vector<long> sig(fwd.size(), 0);
    std::map<uint32_t, size_t> pos;
    for (size_t i = 0; i < fwd.size(); ++i) pos[fwd[i]] = i;
    for (DirRef r : p.steps) {
        uint32_t c = ev.event_of(r);
        if (ev.is_forward_event(c)) {
            auto it = pos.find(c);
            if (it != pos.end()) ++sig[it->second];
        } else {
            auto it = pos.find(ev.rev_event(c));
            if (it != pos.end()) --sig[it->second];
        }
    }
    return sig;
}

int EventRelations::fwd_pos(uint32_t e) const {
    auto it = std::lower_bound(fwd_events.begin(), fwd_events.end(), e);
    if (it == fwd_events.end() || *it != e) return -1;
    return static_cast<int>(it - fwd_events.begin());
}

namespace {

// Exact route: every rooted forward-only path of a forward DAG, prefix by
// prefix. Event occurrence masks fit in 64 bits at this artifact's scale.
void scan_forward_paths(const Ltsi& l, const EventPartition& ev,
                        const std::vector<uint32_t>& fwd_events,
                        std::vector<std::vector<bool>>& notleq,
                        std::vector<std::vector<bool>>& together) {
    size_t k = fwd_events.size();
    if (k > 64)
        throw Error(ErrorCode::StateBudgetExceeded,
                    "more than 64 forward events in exact relation scan");
    std::map<uint32_t, size_t> pos;
    for (size_t i = 0; i < k; ++i) pos[fwd_events[i]] = i;

    struct Frame {
        StateId state;
        uint64_t mask;
    };
    std::vector<Frame> stack;
    auto visit = [&](uint64_t mask) {
        for (size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            for (size_t j = 0; j < k; ++j) {
                if (mask >> j & 1) together[i][j] = true;
                else notleq[j][i] = true;  // event j absent while i occurred
            }
        }
    };
    for (StateId root : l.irreversible()) {
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            visit(f.mask);
            for (DirRef r : l.out(f.state)) {
                if (r.is_backward()) continue;
                uint64_t m = f.mask | (1ull << pos.at(ev.event_of(r)));
                stack.push_back({l.target(r), m});
            }
        }
    }
}

// Bounded route: general rooted paths up to `bound`, deduplicated on
// (state, signed counts) which determines both predicates.
void scan_bounded_paths(const Ltsi& l, const EventPartition& ev,
                        const std::vector<uint32_t>& fwd_events, long bound,
                        std::vector<std::vector<bool>>& notleq,
                        std::vector<std::vector<bool>>& together) {
    size_t k = fwd_events.size();
    std::map<uint32_t, size_t> pos;
    for (size_t i = 0; i < k; ++i) pos[fwd_events[i]] = i;

    using Key = std::pair<StateId, std::vector<int16_t>>;
    std::set<Key> seen;
    std::deque<Key> frontier;
    auto visit = [&](const std::vector<int16_t>& counts) {
        for (size_t i = 0; i < k; ++i) {
            if (counts[i] <= 0) continue;
            for (size_t j = 0; j < k; ++j) {
                if (counts[j] > 0) together[i][j] = true;
                else notleq[j][i] = true;
            }
        }
    };
    for (StateId root : l.irreversible()) {
        Key start{root, std::vector<int16_t>(k, 0)};
        if (seen.insert(start).second) frontier.push_back(start);
    }
    for (long depth = 0; depth <= bound && !frontier.empty(); ++depth) {
        std::deque<Key> next;
        for (const Key& key : frontier) {
            visit(key.second);
            if (depth == bound) continue;
            for (DirRef r : l.out(key.first)) {
                Key nk = key;
                nk.first = l.target(r);
                uint32_t c = ev.event_of(r);
                if (ev.is_forward_event(c)) ++nk.second[pos.at(c)];
                else --nk.second[pos.at(ev.rev_event(c))];
                if (seen.insert(nk).second) next.push_back(nk);
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace

EventRelations compute_relations(const Ltsi& l, const EventPartition& ev,
                                 bool pre_reversible, long bound) {
    EventRelations rel;
    rel.fwd_events = ev.forward_events();

    for (const auto& p : l.independence()) {
        if (l.source(p.first) != l.source(p.second)) continue;
        uint32_t e1 = ev.event_of(p.first), e2 = ev.event_of(p.second);
        rel.coind.insert({std::min(e1, e2), std::max(e1, e2)});
    }

    if (l.irreversible().empty() && l.state_count() > 0)
        throw Error(ErrorCode::NoRoot, "no irreversible state exists");

    size_t k = rel.fwd_events.size();
    std::vector<std::vector<bool>> notleq(k, std::vector<bool>(k, false));
    std::vector<std::vector<bool>> together(k, std::vector<bool>(k, false));

    if (pre_reversible) {
        scan_forward_paths(l, ev, rel.fwd_events, notleq, together);
        rel.bounded = false;
    } else {
        if (bound < 0) bound = 2 * static_cast<long>(l.forward_count()) + 2;
        scan_bounded_paths(l, ev, rel.fwd_events, bound, notleq, together);
        rel.bounded = true;
        rel.bound = bound;
    }

    rel.leq.assign(k, std::vector<bool>(k, false));
    rel.conflict.assign(k, std::vector<bool>(k, false));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            rel.leq[i][j] = !notleq[i][j];
            rel.conflict[i][j] = !together[i][j];
        }
    return rel;
}

Verdict check_polychotomy(const Ltsi& l, const EventPartition& ev,
                          const EventRelations& rel, bool pre_reversible) {
    const auto& fe = rel.fwd_events;
    std::string first_witness;
    for (size_t i = 0; i < fe.size() && first_witness.empty(); ++i) {
        for (size_t j = 0; j < fe.size(); ++j) {
            bool eq = i == j;
            bool lt = rel.leq[i][j] && i != j;
            bool gt = rel.leq[j][i] && i != j;
            bool cf = rel.conflict[i][j] && i != j;
            bool ci = rel.coinitially_independent(fe[i], fe[j]);
            int held = int(eq) + int(lt) + int(gt) + int(cf) + int(ci);
            if (held != 1) {
                std::ostringstream os;
                os << "events (" << l.ref_name(ev.representative(fe[i])) << ","
                   << l.ref_name(ev.representative(fe[j])) << ") satisfy " << held
                   << " of {=,<,>,#,ci}";
                first_witness = os.str();
                break;
            }
        }
    }
    if (!pre_reversible) {
        Verdict v = Verdict::unknown("not pre-reversible");
        v.witness = first_witness;
        if (!first_witness.empty())
            v.notes.push_back("exactly-one test run anyway; violation reported");
        return v;
    }
    if (!first_witness.empty()) return Verdict::no(first_witness, "exhaustive pair scan");
    return Verdict::yes("exhaustive pair scan");
}

}  // namespace ltsi
