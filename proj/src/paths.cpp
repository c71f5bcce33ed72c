#include "ltsi/paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ltsi {

std::vector<Path> enumerate_paths(const Ltsi& l, StateId from,
                                  std::optional<StateId> to, size_t max_len) {
    std::vector<Path> out;
    Path empty;
    empty.start = from;
    std::vector<Path> frontier{empty};
    for (size_t len = 0;; ++len) {
        for (const Path& p : frontier)
            if (!to || p.end(l) == *to) out.push_back(p);
        if (len == max_len) break;
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (DirRef r : l.out(p.end(l))) {
                Path q = p;
                q.steps.push_back(r);
                next.push_back(std::move(q));
            }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return out;
}

std::string RewriteStep::to_string(const Ltsi& l) const {
    std::ostringstream os;
    switch (kind) {
        case Swap: os << "swap@" << pos; break;
        case Cancel: os << "cancel@" << pos; break;
        case Insert: os << "insert@" << pos << "(" << l.ref_name(inserted) << ")"; break;
    }
    return os.str();
}

Path apply_step(const Ltsi& l, const Path& p, const RewriteStep& s) {
    Path q = p;
    switch (s.kind) {
        case RewriteStep::Cancel: {
            if (s.pos + 1 >= p.steps.size() ||
                p.steps[s.pos + 1] != p.steps[s.pos].rev())
                throw Error(ErrorCode::UsageError, "cancel does not apply");
            q.steps.erase(q.steps.begin() + s.pos, q.steps.begin() + s.pos + 2);
            return q;
        }
        case RewriteStep::Insert: {
            if (s.pos > p.steps.size())
                throw Error(ErrorCode::UsageError, "insert position out of range");
            StateId at = p.start;
            for (size_t i = 0; i < s.pos; ++i) at = l.target(p.steps[i]);
            if (l.source(s.inserted) != at)
                throw Error(ErrorCode::UsageError, "insert breaks composability");
            q.steps.insert(q.steps.begin() + s.pos, {s.inserted, s.inserted.rev()});
            return q;
        }
        case RewriteStep::Swap: {
            if (s.pos + 1 >= p.steps.size())
                throw Error(ErrorCode::UsageError, "swap position out of range");
            DirRef t = p.steps[s.pos], uc = p.steps[s.pos + 1];
            DirRef u = s.swap_u, tc = s.swap_tc;
            bool ok = l.source(u) == l.source(t) && l.independent(t, u) &&
                      l.signed_label(u) == l.signed_label(uc) &&
                      l.signed_label(tc) == l.signed_label(t) &&
                      l.source(tc) == l.target(u) && l.target(tc) == l.target(uc);
            if (!ok) throw Error(ErrorCode::UsageError, "swap does not apply");
            q.steps[s.pos] = u;
            q.steps[s.pos + 1] = tc;
            return q;
        }
    }
    throw Error(ErrorCode::UsageError, "bad rewrite step");
}

namespace {

std::vector<long> label_signature(const Ltsi& l, const Path& p) {
    std::vector<long> sig(l.label_count(), 0);
    for (DirRef r : p.steps) sig[l.und_label(r)] += r.is_backward() ? -1 : 1;
    return sig;
}

// A square on an adjacent segment (A, B): replacement steps C from source(A)
// with B's signed label and D from target(C) with A's label, cofinal with B.
// The rewrite (A,B) -> (C,D) is derivable when any corner pair of the square
// is independent; each corner has its own elementary-move derivation.
struct SquareRewrite {
    DirRef c, d;
    std::vector<RewriteStep> trace;  // elementary steps at segment position
};

std::vector<SquareRewrite> square_rewrites(const Ltsi& l, DirRef a, DirRef b,
                                           size_t pos) {
    std::vector<SquareRewrite> out;
    SignedLabel la = l.signed_label(a), lb = l.signed_label(b);
    for (DirRef c : l.out(l.source(a))) {
        if (!(l.signed_label(c) == lb)) continue;
        for (DirRef d : l.out(l.target(c))) {
            if (!(l.signed_label(d) == la)) continue;
            if (l.target(d) != l.target(b)) continue;
            if (c == a && d == b) continue;
            SquareRewrite sr;
            sr.c = c;
            sr.d = d;
            if (l.independent(a, c)) {
                sr.trace = {RewriteStep{RewriteStep::Swap, pos, {}, c, d}};
            } else if (l.independent(a.rev(), b)) {
                sr.trace = {RewriteStep{RewriteStep::Insert, pos + 2, d.rev(), {}, {}},
                            RewriteStep{RewriteStep::Swap, pos + 1, {}, a.rev(), c},
                            RewriteStep{RewriteStep::Cancel, pos, a, {}, {}}};
            } else if (l.independent(d, c.rev())) {
                sr.trace = {RewriteStep{RewriteStep::Insert, pos, c, {}, {}},
                            RewriteStep{RewriteStep::Swap, pos + 1, {}, d, b.rev()},
                            RewriteStep{RewriteStep::Cancel, pos + 2, b.rev(), {}, {}}};
            } else if (l.independent(b.rev(), d.rev())) {
                sr.trace = {RewriteStep{RewriteStep::Insert, pos + 2, d.rev(), {}, {}},
                            RewriteStep{RewriteStep::Insert, pos + 3, c.rev(), {}, {}},
                            RewriteStep{RewriteStep::Swap, pos + 2, {}, b.rev(), a.rev()},
                            RewriteStep{RewriteStep::Cancel, pos + 1, b, {}, {}},
                            RewriteStep{RewriteStep::Cancel, pos, a, {}, {}}};
            } else {
                continue;
            }
            out.push_back(std::move(sr));
        }
    }
    return out;
}

// Neighbor generation for the rewrite search. Square rewrites preserve
// length; raw insertions grow it.
struct Engine {
    const Ltsi& l;
    const EventPartition& simp;  // simplified-mode events: swap-invariant

    std::vector<std::pair<Path, std::vector<RewriteStep>>> neighbors(
        const Path& p, size_t max_len, bool allow_insert) const {
        std::vector<std::pair<Path, std::vector<RewriteStep>>> out;
        // cancels
        for (size_t i = 0; i + 1 < p.steps.size(); ++i) {
            if (p.steps[i + 1] != p.steps[i].rev()) continue;
            RewriteStep st{RewriteStep::Cancel, i, p.steps[i], {}, {}};
            out.push_back({apply_step(l, p, st), {st}});
        }
        // square rewrites
        for (size_t i = 0; i + 1 < p.steps.size(); ++i) {
            for (SquareRewrite& sr :
                 square_rewrites(l, p.steps[i], p.steps[i + 1], i)) {
                Path q = p;
                q.steps[i] = sr.c;
                q.steps[i + 1] = sr.d;
                out.push_back({std::move(q), std::move(sr.trace)});
            }
        }
        // raw insertions
        if (allow_insert && p.steps.size() + 2 <= max_len) {
            StateId at = p.start;
            for (size_t i = 0; i <= p.steps.size(); ++i) {
                for (DirRef x : l.out(at)) {
                    RewriteStep st{RewriteStep::Insert, i, x, {}, {}};
                    out.push_back({apply_step(l, p, st), {st}});
                }
                if (i < p.steps.size()) at = l.target(p.steps[i]);
            }
        }
        return out;
    }
};

std::vector<RewriteStep> invert_trace(const Ltsi& l, const Path& from,
                                      const std::vector<RewriteStep>& trace) {
    // Replay and invert each step, then reverse.
    std::vector<RewriteStep> inv;
    Path cur = from;
    for (const RewriteStep& st : trace) {
        RewriteStep is = st;
        switch (st.kind) {
            case RewriteStep::Cancel:
                is.kind = RewriteStep::Insert;
                is.inserted = cur.steps[st.pos];
                break;
            case RewriteStep::Insert:
                is.kind = RewriteStep::Cancel;
                is.inserted = st.inserted;
                break;
            case RewriteStep::Swap:
                is.swap_u = cur.steps[st.pos];
                is.swap_tc = cur.steps[st.pos + 1];
                break;
        }
        inv.push_back(is);
        cur = apply_step(l, cur, st);
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

}  // namespace

EquivDecision causally_equivalent(const Ltsi& l, const Path& r, const Path& s,
                                  const EquivOptions& opts) {
    Verdict sp = check_axiom(l, AxiomId::SP);
    if (!sp.holds())
        throw Error(ErrorCode::PreconditionSP,
                    "causal equivalence undefined without SP: " + sp.witness);
    if (!r.well_formed(l) || !s.well_formed(l))
        throw Error(ErrorCode::UsageError, "ill-formed path");

    EquivDecision dec;
    if (r.start != s.start || r.end(l) != s.end(l)) {
        dec.outcome = EquivDecision::No;
        dec.certificate = "endpoints";
        dec.detail = "paths are not coinitial and cofinal";
        return dec;
    }
    if (label_signature(l, r) != label_signature(l, s)) {
        dec.outcome = EquivDecision::No;
        dec.certificate = "label-counts";
        dec.detail = "per-label signed counts differ";
        return dec;
    }
    EventPartition simp = compute_events(l, EventMode::Simplified, true);
    if (sharp_signature(simp, r) != sharp_signature(simp, s)) {
        dec.outcome = EquivDecision::No;
        dec.certificate = "sharp-signature";
        dec.detail = "signed event counts differ";
        return dec;
    }

    if (r == s) {
        dec.outcome = EquivDecision::Yes;
        return dec;
    }

    Engine eng{l, simp};
    size_t base_len = std::max(r.length(), s.length());

    // Two sweeps: moves that never lengthen the path, then insertions up to
    // base + 2*slack.
    for (int phase = 0; phase < 2; ++phase) {
        bool allow_insert = phase == 1;
        size_t max_len = allow_insert
                             ? base_len + 2 * static_cast<size_t>(std::max<long>(0, opts.slack))
                             : base_len;
        if (allow_insert && opts.slack <= 0) break;

        std::map<Path, std::vector<RewriteStep>> from_r{{r, {}}}, from_s{{s, {}}};
        std::deque<Path> qr{r}, qs{s};
        size_t visited = 2;

        while ((!qr.empty() || !qs.empty()) && visited < opts.node_cap) {
            bool expand_r = !qr.empty() && (qs.empty() || from_r.size() <= from_s.size());
            auto& queue = expand_r ? qr : qs;
            auto& mine = expand_r ? from_r : from_s;
            auto& other = expand_r ? from_s : from_r;
            Path cur = queue.front();
            queue.pop_front();
            auto base_trace = mine.at(cur);
            for (auto& [np, steps] : eng.neighbors(cur, max_len, allow_insert)) {
                if (np.steps.size() > max_len) continue;
                if (mine.count(np)) continue;
                auto tr = base_trace;
                tr.insert(tr.end(), steps.begin(), steps.end());
                mine.emplace(np, std::move(tr));
                ++visited;
                if (other.count(np)) {
                    // Assemble r -> np -> s.
                    dec.outcome = EquivDecision::Yes;
                    dec.trace = from_r.at(np);
                    auto inv = invert_trace(l, s, from_s.at(np));
                    dec.trace.insert(dec.trace.end(), inv.begin(), inv.end());
                    return dec;
                }
                queue.push_back(np);
            }
        }
        if (visited >= opts.node_cap) {
            dec.outcome = EquivDecision::Unknown;
            dec.detail = "search budget exhausted";
            return dec;
        }
    }

    dec.outcome = EquivDecision::Unknown;
    dec.detail = "bound exhausted at slack " + std::to_string(opts.slack);
    return dec;
}

ParabolicResult parabolic_normal_form(const Ltsi& l, const Path& r) {
    if (!r.well_formed(l)) throw Error(ErrorCode::UsageError, "ill-formed path");
    ParabolicResult res;
    res.normal_form = r;
    Path& p = res.normal_form;

    for (;;) {
        size_t pos = p.steps.size();
        for (size_t i = 0; i + 1 < p.steps.size(); ++i)
            if (p.steps[i].is_forward() && p.steps[i + 1].is_backward()) {
                pos = i;
                break;
            }
        if (pos == p.steps.size()) return res;

        DirRef t = p.steps[pos], ub = p.steps[pos + 1];
        if (ub == t.rev()) {
            RewriteStep st{RewriteStep::Cancel, pos, t, {}, {}};
            p = apply_step(l, p, st);
            res.trace.push_back(st);
            continue;
        }
        auto rewrites = square_rewrites(l, t, ub, pos);
        const SquareRewrite* best = nullptr;
        for (const auto& sr : rewrites)
            if (!best ||
                std::make_pair(sr.c, sr.d) < std::make_pair(best->c, best->d))
                best = &sr;
        if (!best) {
            res.stuck = true;
            res.stuck_t = t;
            res.stuck_u = ub.rev();
            return res;
        }
        for (const auto& st : best->trace) {
            p = apply_step(l, p, st);
            res.trace.push_back(st);
        }
    }
}

long longest_forward_simple_path(const Ltsi& l) {
    long best = 0;
    std::vector<bool> onpath(l.state_count(), false);
    std::function<void(StateId, long)> dfs = [&](StateId s, long depth) {
        best = std::max(best, depth);
        onpath[s] = true;
        for (DirRef r : l.out(s)) {
            if (r.is_backward()) continue;
            StateId t = l.target(r);
            if (onpath[t]) continue;
            dfs(t, depth + 1);
        }
        onpath[s] = false;
    };
    for (StateId s = 0; s < l.state_count(); ++s) dfs(s, 0);
    return best;
}

Verdict check_PL(const Ltsi& l, const PathCheckOptions& opts) {
    Verdict sp = check_axiom(l, AxiomId::SP);
    Verdict bti = check_axiom(l, AxiomId::BTI);
    if (!opts.force_empirical && sp.status == Status::Holds &&
        bti.status == Status::Holds)
        return Verdict::derived("SP^BTI", "theorem route");

    // Every path reduces iff every composable (forward, backward) 2-segment
    // cancels or swaps: the leftmost reduction step only ever rewrites such a
    // segment, and a stuck segment is itself a path of length 2.
    long bound = opts.bound >= 0 ? opts.bound : 2 * longest_forward_simple_path(l) + 2;
    for (TransId ti = 0; ti < l.forward_count(); ++ti) {
        DirRef t(ti, false);
        for (DirRef ub : l.out(l.target(t))) {
            if (ub.is_forward()) continue;
            if (ub == t.rev()) continue;
            Path seg;
            seg.start = l.source(t);
            seg.steps = {t, ub};
            ParabolicResult pr = parabolic_normal_form(l, seg);
            if (pr.stuck) {
                Verdict v = Verdict::no("path " + seg.to_string(l) +
                                            " has no parabolic reduction; stuck on (" +
                                            l.ref_name(pr.stuck_t) + "," +
                                            l.ref_name(pr.stuck_u) + ")",
                                        "parabolic reduction scan");
                v.wit_paths = {seg};
                v.wit_trans = {pr.stuck_t, pr.stuck_u};
                return v;
            }
        }
    }
    return Verdict::bounded(bound, "parabolic reduction scan");
}

Verdict check_CC(const Ltsi& l, const PathCheckOptions& opts) {
    Verdict sp = check_axiom(l, AxiomId::SP);
    if (!sp.holds())
        throw Error(ErrorCode::PreconditionSP,
                    "causal equivalence undefined without SP: " + sp.witness);

    Verdict wf = check_axiom(l, AxiomId::WF);
    PathCheckOptions plopts = opts;
    plopts.force_empirical = false;
    Verdict pl = check_PL(l, plopts);
    if (!opts.force_empirical && wf.status == Status::Holds &&
        pl.status == Status::HoldsDerived)
        return Verdict::derived("WF^PL", "theorem route");

    long bound = opts.bound >= 0 ? opts.bound : 2 * longest_forward_simple_path(l) + 2;
    EquivOptions eo;
    eo.slack = opts.slack;

    bool any_unknown = false;
    std::string unknown_detail;
    for (StateId s = 0; s < l.state_count(); ++s) {
        auto paths = enumerate_paths(l, s, std::nullopt, static_cast<size_t>(bound));
        std::map<StateId, std::vector<const Path*>> by_end;
        for (const Path& p : paths) by_end[p.end(l)].push_back(&p);
        for (auto& [end, group] : by_end) {
            for (size_t i = 1; i < group.size(); ++i) {
                EquivDecision d = causally_equivalent(l, *group[0], *group[i], eo);
                if (d.outcome == EquivDecision::No) {
                    Verdict v = Verdict::no("(" + group[0]->to_string(l) + " | " +
                                                group[i]->to_string(l) + ") separated by " +
                                                d.certificate,
                                            "coinitial-cofinal pair enumeration");
                    v.wit_paths = {*group[0], *group[i]};
                    return v;
                }
                if (d.outcome == EquivDecision::Unknown) {
                    any_unknown = true;
                    unknown_detail = "(" + group[0]->to_string(l) + " | " +
                                     group[i]->to_string(l) + ") undecided";
                }
            }
        }
    }
    if (any_unknown) return Verdict::unknown(unknown_detail);
    return Verdict::bounded(bound, "coinitial-cofinal pair enumeration");
}

Verdict check_UT(const Ltsi& l) {
    std::map<std::pair<StateId, StateId>, DirRef> seen;
    for (TransId t = 0; t < l.forward_count(); ++t) {
        const auto& f = l.forward(t);
        auto key = std::make_pair(f.source, f.target);
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (l.forward(it->second.fwd_index()).label != f.label) {
                Verdict v = Verdict::no(
                    "parallel transitions " + l.forward(it->second.fwd_index()).name +
                        "," + f.name + " between " + l.state_name(f.source) + " and " +
                        l.state_name(f.target) + " carry different labels",
                    "parallel edge scan");
                v.wit_trans = {it->second, DirRef(t, false)};
                return v;
            }
        } else {
            seen.emplace(key, DirRef(t, false));
        }
    }
    return Verdict::yes("parallel edge scan");
}

RootResult irreversible_root(const Ltsi& l, StateId p) {
    if (p >= l.state_count()) throw Error(ErrorCode::UsageError, "unknown state");
    // Ancestor scan along backward transitions.
    std::set<StateId> seen{p};
    std::deque<StateId> q{p};
    bool cycle = false;
    while (!q.empty()) {
        StateId s = q.front();
        q.pop_front();
        for (DirRef r : l.out(s)) {
            if (r.is_forward()) continue;
            StateId t = l.target(r);
            if (t == s) cycle = true;
            if (seen.insert(t).second) q.push_back(t);
        }
    }
    std::vector<StateId> roots;
    for (StateId s : seen)
        if (l.is_irreversible(s)) roots.push_back(s);
    if (roots.empty()) {
        (void)cycle;  // finite ancestor set without a root implies a cycle
        throw Error(ErrorCode::NoRoot,
                    "no irreversible ancestor of " + l.state_name(p));
    }
    if (roots.size() > 1) {
        std::string w;
        for (StateId s : roots) {
            if (!w.empty()) w += ",";
            w += l.state_name(s);
        }
        throw Error(ErrorCode::NonUniqueRoot, "multiple roots: {" + w + "}");
    }

    // Forward-only witness path, BFS shortest with deterministic tie-break.
    RootResult res;
    res.root = roots[0];
    std::map<StateId, std::pair<StateId, DirRef>> pred;
    std::deque<StateId> bfs{res.root};
    pred[res.root] = {res.root, DirRef()};
    while (!bfs.empty()) {
        StateId s = bfs.front();
        bfs.pop_front();
        if (s == p) break;
        for (DirRef r : l.out(s)) {
            if (r.is_backward()) continue;
            StateId t = l.target(r);
            if (pred.count(t)) continue;
            pred[t] = {s, r};
            bfs.push_back(t);
        }
    }
    std::vector<DirRef> steps;
    StateId cur = p;
    while (cur != res.root) {
        auto [prev, edge] = pred.at(cur);
        steps.push_back(edge);
        cur = prev;
    }
    std::reverse(steps.begin(), steps.end());
    res.forward_witness.start = res.root;
    res.forward_witness.steps = std::move(steps);
    return res;
}

}  // namespace ltsi
