#include "ltsi/structural.hpp"

#include <set>

namespace ltsi {

Ltsi map_c(const Ltsi& l) {
    std::vector<IndependencePair> keep;
    for (const auto& p : l.independence())
        if (l.source(p.first) == l.source(p.second)) keep.push_back(p);
    return with_independence(l, std::move(keep));
}

Ltsi map_g(const Ltsi& l, const EventPartition& ev) {
    std::set<IndependencePair> out;
    for (const auto& p : l.independence()) {
        for (DirRef t : ev.members(ev.event_of(p.first)))
            for (DirRef u : ev.members(ev.event_of(p.second))) {
                if (t == u)
                    throw Error(ErrorCode::ReflexivityBreach,
                                "extension along events reaches " + l.ref_name(t) +
                                    " i " + l.ref_name(t) + " via " +
                                    l.ref_name(p.first) + " i " + l.ref_name(p.second));
                out.insert(IndependencePair(t, u));
            }
    }
    return with_independence(l,
                             std::vector<IndependencePair>(out.begin(), out.end()));
}

Ltsi map_g_by_labels(const Ltsi& l) {
    std::set<std::pair<LabelId, LabelId>> gen;
    for (const auto& p : l.independence()) {
        if (l.source(p.first) != l.source(p.second)) continue;
        LabelId a = l.und_label(p.first), b = l.und_label(p.second);
        if (a == b)
            throw Error(ErrorCode::ReflexivityBreach,
                        "label generator would be reflexive on " + l.label_name(a));
        gen.insert({a, b});
        gen.insert({b, a});
    }
    std::set<IndependencePair> out(l.independence().begin(), l.independence().end());
    auto all = l.all_directed();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (gen.count({l.und_label(all[i]), l.und_label(all[j])}))
                out.insert(IndependencePair(all[i], all[j]));
    return with_independence(l,
                             std::vector<IndependencePair>(out.begin(), out.end()));
}

Verdict check_backward_determinism(const Ltsi& l) {
    for (StateId s = 0; s < l.state_count(); ++s) {
        const auto& in = l.in_forward(s);
        if (in.size() > 1) {
            Verdict v = Verdict::no("state " + l.state_name(s) +
                                        " has incoming forward transitions " +
                                        l.ref_name(in[0]) + "," + l.ref_name(in[1]),
                                    "incoming edge scan");
            v.wit_trans = {in[0], in[1]};
            return v;
        }
    }
    return Verdict::yes("incoming edge scan");
}

}  // namespace ltsi
