#include "ltsi/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ltsi {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownState: return "UnknownState";
        case ErrorCode::ReflexiveIndependence: return "ReflexiveIndependence";
        case ErrorCode::UnknownTransitionRef: return "UnknownTransitionRef";
        case ErrorCode::StateClash: return "StateClash";
        case ErrorCode::ModeUnsound: return "ModeUnsound";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::NonUniqueRoot: return "NonUniqueRoot";
        case ErrorCode::PreconditionSP: return "PreconditionSP";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::EventsRequired: return "EventsRequired";
        case ErrorCode::OrderUnavailable: return "OrderUnavailable";
        case ErrorCode::ReflexivityBreach: return "ReflexivityBreach";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
        case ErrorCode::StateBudgetExceeded: return "StateBudgetExceeded";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Error";
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::HoldsDerived: return "HOLDS-DERIVED";
        case Status::HoldsBounded: return "HOLDS-BOUNDED";
        case Status::Fails: return "FAILS";
        case Status::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string Verdict::status_string() const {
    switch (status) {
        case Status::HoldsDerived: return std::string("HOLDS-DERIVED(") + chain + ")";
        case Status::HoldsBounded:
            return std::string("HOLDS-BOUNDED(") + std::to_string(bound) + ")";
        default: return status_name(status);
    }
}

Ltsi Ltsi::from_raw(std::vector<std::string> state_names,
                    std::vector<std::string> label_names,
                    std::vector<ForwardTransition> forward,
                    std::vector<IndependencePair> independence) {
    Ltsi l;
    l.state_names_ = std::move(state_names);
    l.label_names_ = std::move(label_names);
    l.forward_ = std::move(forward);
    std::sort(independence.begin(), independence.end());
    independence.erase(std::unique(independence.begin(), independence.end()),
                       independence.end());
    l.ind_ = std::move(independence);
    l.reindex();
    return l;
}

void Ltsi::reindex() {
    out_.assign(state_names_.size(), {});
    in_fwd_.assign(state_names_.size(), {});
    for (TransId t = 0; t < forward_.size(); ++t) {
        const auto& f = forward_[t];
        if (f.source < state_names_.size()) out_[f.source].push_back(DirRef(t, false));
        if (f.target < state_names_.size()) {
            out_[f.target].push_back(DirRef(t, true));
            in_fwd_[f.target].push_back(DirRef(t, false));
        }
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_fwd_) std::sort(v.begin(), v.end());
    irr_.clear();
    for (StateId s = 0; s < state_names_.size(); ++s)
        if (in_fwd_[s].empty()) irr_.push_back(s);
}

std::optional<StateId> Ltsi::state_index(const std::string& name) const {
    auto it = std::lower_bound(state_names_.begin(), state_names_.end(), name);
    if (it != state_names_.end() && *it == name)
        return static_cast<StateId>(it - state_names_.begin());
    return std::nullopt;
}

std::optional<LabelId> Ltsi::label_index(const std::string& name) const {
    auto it = std::lower_bound(label_names_.begin(), label_names_.end(), name);
    if (it != label_names_.end() && *it == name)
        return static_cast<LabelId>(it - label_names_.begin());
    return std::nullopt;
}

std::optional<TransId> Ltsi::trans_index(const std::string& name) const {
    auto it = std::lower_bound(
        forward_.begin(), forward_.end(), name,
        [](const ForwardTransition& f, const std::string& n) { return f.name < n; });
    if (it != forward_.end() && it->name == name)
        return static_cast<TransId>(it - forward_.begin());
    return std::nullopt;
}

std::string Ltsi::ref_name(DirRef r) const {
    std::string s = r.is_backward() ? "~" : "";
    return s + forward_[r.fwd_index()].name;
}

bool Ltsi::independent(DirRef a, DirRef b) const {
    if (a == b) return false;
    IndependencePair p(a, b);
    return std::binary_search(ind_.begin(), ind_.end(), p);
}

std::vector<DirRef> Ltsi::all_directed() const {
    std::vector<DirRef> v;
    v.reserve(directed_count());
    for (TransId t = 0; t < forward_.size(); ++t) {
        v.push_back(DirRef(t, false));
        v.push_back(DirRef(t, true));
    }
    return v;
}

bool Path::well_formed(const Ltsi& l) const {
    StateId at = start;
    for (DirRef r : steps) {
        if (r.fwd_index() >= l.forward_count()) return false;
        if (l.source(r) != at) return false;
        at = l.target(r);
    }
    return at < l.state_count() || steps.empty();
}

Path Path::reversed(const Ltsi& l) const {
    Path p;
    p.start = end(l);
    p.steps.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        p.steps.push_back(it->rev());
    return p;
}

bool Path::forward_only() const {
    for (DirRef r : steps)
        if (r.is_backward()) return false;
    return true;
}

bool Path::backward_only() const {
    for (DirRef r : steps)
        if (r.is_forward()) return false;
    return true;
}

std::string Path::to_string(const Ltsi& l) const {
    if (steps.empty()) return "(empty@" + l.state_name(start) + ")";
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ' ';
        s += l.ref_name(steps[i]);
    }
    return s;
}

Ltsi build_combined(const LtsiSpec& spec) {
    std::vector<std::string> states = spec.states;
    std::sort(states.begin(), states.end());
    for (size_t i = 1; i < states.size(); ++i)
        if (states[i] == states[i - 1])
            throw Error(ErrorCode::DuplicateId, "duplicate state id: " + states[i]);

    auto state_of = [&](const std::string& n) -> StateId {
        auto it = std::lower_bound(states.begin(), states.end(), n);
        if (it == states.end() || *it != n)
            throw Error(ErrorCode::UnknownState, "unknown state: " + n);
        return static_cast<StateId>(it - states.begin());
    };

    std::vector<std::string> labels;
    for (const auto& t : spec.transitions) labels.push_back(t.label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto label_of = [&](const std::string& n) -> LabelId {
        auto it = std::lower_bound(labels.begin(), labels.end(), n);
        return static_cast<LabelId>(it - labels.begin());
    };

    std::vector<ForwardTransition> fwd;
    fwd.reserve(spec.transitions.size());
    for (const auto& t : spec.transitions)
        fwd.push_back(ForwardTransition{t.id, state_of(t.source), label_of(t.label),
                                        state_of(t.target)});
    std::sort(fwd.begin(), fwd.end(),
              [](const ForwardTransition& a, const ForwardTransition& b) {
                  return a.name < b.name;
              });
    for (size_t i = 1; i < fwd.size(); ++i)
        if (fwd[i].name == fwd[i - 1].name)
            throw Error(ErrorCode::DuplicateId, "duplicate transition id: " + fwd[i].name);
    {
        std::set<std::tuple<StateId, LabelId, StateId>> seen;
        for (const auto& f : fwd)
            if (!seen.insert({f.source, f.label, f.target}).second)
                throw Error(ErrorCode::DuplicateId,
                            "duplicate (source,label,target) transition: " + f.name);
    }

    auto trans_of = [&](const std::string& n) -> TransId {
        auto it = std::lower_bound(
            fwd.begin(), fwd.end(), n,
            [](const ForwardTransition& f, const std::string& s) { return f.name < s; });
        if (it == fwd.end() || it->name != n)
            throw Error(ErrorCode::UnknownTransitionRef, "unknown transition id: " + n);
        return static_cast<TransId>(it - fwd.begin());
    };

    std::vector<IndependencePair> ind;
    for (const auto& [a, b] : spec.independence) {
        DirRef ra(trans_of(a.trans_id), a.backward);
        DirRef rb(trans_of(b.trans_id), b.backward);
        if (ra == rb)
            throw Error(ErrorCode::ReflexiveIndependence,
                        "reflexive independence pair on " +
                            std::string(a.backward ? "~" : "") + a.trans_id);
        ind.emplace_back(ra, rb);
    }

    return Ltsi::from_raw(std::move(states), std::move(labels), std::move(fwd),
                          std::move(ind));
}

std::vector<Violation> validate(const Ltsi& l) {
    std::vector<Violation> out;
    std::set<std::string> names;
    for (TransId t = 0; t < l.forward_count(); ++t) {
        const auto& f = l.forward(t);
        if (!names.insert(f.name).second)
            out.push_back({"UniqueTransitionId", f.name});
        if (f.source >= l.state_count() || f.target >= l.state_count())
            out.push_back({"TransitionStateRange", f.name});
        if (f.label >= l.label_count())
            out.push_back({"TransitionLabelRange", f.name});
    }
    {
        std::set<std::tuple<StateId, LabelId, StateId>> seen;
        for (TransId t = 0; t < l.forward_count(); ++t) {
            const auto& f = l.forward(t);
            if (!seen.insert({f.source, f.label, f.target}).second)
                out.push_back({"DuplicateTransition", f.name});
        }
    }
    for (const auto& p : l.independence()) {
        if (p.first.fwd_index() >= l.forward_count() ||
            p.second.fwd_index() >= l.forward_count()) {
            out.push_back({"DanglingIndependence", "pair index out of range"});
            continue;
        }
        if (p.first == p.second)
            out.push_back({"ReflexiveIndependence", l.ref_name(p.first)});
    }
    // Stored canonical pairs answer both orientations, so asymmetry can only
    // appear in hand-built relations that bypassed canonicalization.
    for (const auto& p : l.independence())
        if (p.second < p.first)
            out.push_back({"AsymmetricIndependence",
                           l.ref_name(p.first) + "," + l.ref_name(p.second)});
    return out;
}

std::vector<Square> squares_of(const Ltsi& l, DirRef t, DirRef u) {
    std::vector<Square> res;
    if (l.source(t) != l.source(u)) return res;
    SignedLabel lt = l.signed_label(t), lu = l.signed_label(u);
    for (DirRef uc : l.out(l.target(t))) {
        if (!(l.signed_label(uc) == lu)) continue;
        for (DirRef tc : l.out(l.target(u))) {
            if (!(l.signed_label(tc) == lt)) continue;
            if (l.target(uc) != l.target(tc)) continue;
            res.push_back(Square{t, u, tc, uc});
        }
    }
    return res;
}

Ltsi with_independence(const Ltsi& l, std::vector<IndependencePair> pairs) {
    for (const auto& p : pairs)
        if (p.first == p.second)
            throw Error(ErrorCode::ReflexiveIndependence,
                        "reflexive independence pair on " + l.ref_name(p.first));
    std::vector<std::string> sn(l.state_count()), ln(l.label_count());
    for (StateId s = 0; s < l.state_count(); ++s) sn[s] = l.state_name(s);
    for (LabelId a = 0; a < l.label_count(); ++a) ln[a] = l.label_name(a);
    std::vector<ForwardTransition> fwd(l.forward_count());
    for (TransId t = 0; t < l.forward_count(); ++t) fwd[t] = l.forward(t);
    return Ltsi::from_raw(std::move(sn), std::move(ln), std::move(fwd),
                          std::move(pairs));
}

Ltsi saturate_coinitial(const Ltsi& l) {
    std::set<IndependencePair> pairs(l.independence().begin(), l.independence().end());
    std::vector<IndependencePair> work(pairs.begin(), pairs.end());

    // BTI closure: all distinct coinitial backward pairs.
    for (StateId s = 0; s < l.state_count(); ++s) {
        const auto& outs = l.out(s);
        for (size_t i = 0; i < outs.size(); ++i) {
            if (!outs[i].is_backward()) continue;
            for (size_t j = i + 1; j < outs.size(); ++j) {
                if (!outs[j].is_backward()) continue;
                IndependencePair p(outs[i], outs[j]);
                if (pairs.insert(p).second) work.push_back(p);
            }
        }
    }

    // Propagation around commuting squares; reflexive targets are skipped.
    while (!work.empty()) {
        IndependencePair p = work.back();
        work.pop_back();
        DirRef ts[2] = {p.first, p.second};
        for (int k = 0; k < 2; ++k) {
            DirRef t = ts[k], u = ts[1 - k];
            if (l.source(t) != l.source(u)) continue;
            for (const Square& sq : squares_of(l, t, u)) {
                DirRef a = sq.u_comp, b = t.rev();
                if (a == b) continue;
                IndependencePair q(a, b);
                if (pairs.insert(q).second) work.push_back(q);
            }
        }
    }

    return with_independence(
        l, std::vector<IndependencePair>(pairs.begin(), pairs.end()));
}

Ltsi disjoint_union(const Ltsi& l1, const Ltsi& l2, bool namespaced) {
    auto prefixed = [&](const std::string& n, const char* pre) {
        return namespaced ? std::string(pre) + n : n;
    };

    std::vector<std::string> states;
    for (StateId s = 0; s < l1.state_count(); ++s)
        states.push_back(prefixed(l1.state_name(s), "a."));
    for (StateId s = 0; s < l2.state_count(); ++s)
        states.push_back(prefixed(l2.state_name(s), "b."));
    {
        auto sorted = states;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw Error(ErrorCode::StateClash, "state id clash: " + sorted[i]);
    }

    LtsiSpec spec;
    spec.states = states;
    auto add_side = [&](const Ltsi& l, const char* pre) {
        for (TransId t = 0; t < l.forward_count(); ++t) {
            const auto& f = l.forward(t);
            spec.transitions.push_back(TransitionSpec{
                prefixed(f.name, pre), prefixed(l.state_name(f.source), pre),
                l.label_name(f.label), prefixed(l.state_name(f.target), pre)});
        }
        for (const auto& p : l.independence()) {
            RefSpec a{prefixed(l.forward(p.first.fwd_index()).name, pre),
                      p.first.is_backward()};
            RefSpec b{prefixed(l.forward(p.second.fwd_index()).name, pre),
                      p.second.is_backward()};
            spec.independence.emplace_back(a, b);
        }
    };
    add_side(l1, "a.");
    add_side(l2, "b.");
    {
        std::set<std::string> tids;
        for (const auto& t : spec.transitions)
            if (!tids.insert(t.id).second)
                throw Error(ErrorCode::StateClash, "transition id clash: " + t.id);
    }
    return build_combined(spec);
}

}  // namespace ltsi
