#pragma once

// Construction of the shipped fixture corpus. Each entry is a small finite
// system exercising a specific combination of axioms and properties; the
// generator emits them under fixtures/ and tests assert the shipped files
// stay in sync.

#include "ltsi/core.hpp"
#include "ltsi/events.hpp"
#include "ltsi/axioms.hpp"

#include <map>
#include <set>
#include <string>

namespace ltsi_fixtures {

using namespace ltsi;

struct Fixture {
    std::string name;
    std::string comment;
    Ltsi system;
};

inline Ltsi diamond(std::vector<std::pair<RefSpec, RefSpec>> ind,
                    const char* la = "a", const char* lb = "b",
                    const char* la2 = nullptr, const char* lb2 = nullptr) {
    // t: P->Q and u: P->R on top, up: Q->S and tp: R->S below.
    LtsiSpec s;
    s.states = {"P", "Q", "R", "S"};
    s.transitions = {
        {"t", "P", la, "Q"},
        {"u", "P", lb, "R"},
        {"up", "Q", lb2 ? lb2 : lb, "S"},
        {"tp", "R", la2 ? la2 : la, "S"},
    };
    s.independence = std::move(ind);
    return build_combined(s);
}

inline Ltsi cube_minus(const std::set<std::string>& removed_states) {
    // Three-label cube on coordinates (a,b,c); state sXYZ has a=X, b=Y, c=Z.
    LtsiSpec s;
    const char* names[8] = {"s000", "s100", "s010", "s001",
                            "s110", "s101", "s011", "s111"};
    auto bit = [](const std::string& n, int i) { return n[1 + i] == '1'; };
    for (const char* n : names)
        if (!removed_states.count(n)) s.states.push_back(n);
    int counters[3] = {1, 1, 1};
    const char* labels[3] = {"a", "b", "c"};
    for (int axis = 0; axis < 3; ++axis) {
        for (const char* n : names) {
            std::string src = n;
            if (removed_states.count(src) || bit(src, axis)) continue;
            std::string dst = src;
            dst[1 + axis] = '1';
            if (removed_states.count(dst)) continue;
            std::string id = std::string(labels[axis]) +
                             std::to_string(counters[axis]++);
            s.transitions.push_back({id, src, labels[axis], dst});
        }
    }
    return build_combined(s);
}

inline Ltsi rename_states(const Ltsi& l, const std::map<std::string, std::string>& m) {
    LtsiSpec s;
    for (StateId i = 0; i < l.state_count(); ++i)
        s.states.push_back(m.at(l.state_name(i)));
    for (TransId t = 0; t < l.forward_count(); ++t) {
        const auto& f = l.forward(t);
        s.transitions.push_back({f.name, m.at(l.state_name(f.source)),
                                 l.label_name(f.label), m.at(l.state_name(f.target))});
    }
    for (const auto& p : l.independence()) {
        RefSpec a{l.forward(p.first.fwd_index()).name, p.first.is_backward()};
        RefSpec b{l.forward(p.second.fwd_index()).name, p.second.is_backward()};
        s.independence.push_back({a, b});
    }
    return build_combined(s);
}

inline Ltsi notire_base(bool with_tail) {
    // Ladder of an (a,b) square and, with the tail, an (a,c) square; the
    // a-transitions chain into one event while independence stays coinitial.
    LtsiSpec s;
    s.states = {"P", "Q", "P'", "Q'"};
    s.transitions = {
        {"t0", "P", "a", "Q"},
        {"b1", "P", "b", "P'"},
        {"b2", "Q", "b", "Q'"},
        {"a2", "P'", "a", "Q'"},
        {"c2", "Q'", "c", "R"},
    };
    s.states.push_back("R");
    if (with_tail) {
        s.states.push_back("S");
        s.transitions.push_back({"c1", "P'", "c", "S"});
        s.transitions.push_back({"a3", "S", "a", "R"});
    }
    return build_combined(s);
}

inline Ltsi repeated_grid() {
    // Two layers of a same-label diamond joined by b rungs; saturation makes
    // all a-transitions one event and repeats it along rooted paths.
    LtsiSpec s;
    s.states = {"W", "X", "Y", "Z", "W'", "X'", "Y'", "Z'"};
    s.transitions = {
        {"a1", "W", "a", "X"},   {"a2", "W", "a", "Y"},
        {"a3", "X", "a", "Z"},   {"a4", "Y", "a", "Z"},
        {"a5", "W'", "a", "X'"}, {"a6", "W'", "a", "Y'"},
        {"a7", "X'", "a", "Z'"}, {"a8", "Y'", "a", "Z'"},
        {"b1", "W", "b", "W'"},  {"b2", "X", "b", "X'"},
        {"b3", "Y", "b", "Y'"},  {"b4", "Z", "b", "Z'"},
    };
    return build_combined(s);
}

inline Ltsi halfcube_mod() {
    // Saturated half cube plus independence between every pair with at least
    // one backward member whose events are unrelated by ~ and reversal.
    Ltsi base = saturate_coinitial(cube_minus({"s111"}));
    EventPartition ev = compute_events(base, EventMode::Simplified, true);
    std::set<IndependencePair> pairs(base.independence().begin(),
                                     base.independence().end());
    auto all = base.all_directed();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            DirRef t = all[i], u = all[j];
            if (t.is_forward() && u.is_forward()) continue;
            uint32_t et = ev.event_of(t), eu = ev.event_of(u);
            if (et == eu || ev.rev_event(et) == eu) continue;
            pairs.insert(IndependencePair(t, u));
        }
    return with_independence(base,
                             std::vector<IndependencePair>(pairs.begin(), pairs.end()));
}

inline Ltsi all_cross_pairs_diamond(bool restrict_to_labels) {
    // restrict_to_labels: every (a-labelled, b-labelled) directed pair.
    // Otherwise: every directed pair over distinct underlying transitions.
    Ltsi base = diamond({});
    std::set<IndependencePair> pairs;
    auto all = base.all_directed();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            DirRef t = all[i], u = all[j];
            if (t.fwd_index() == u.fwd_index()) continue;
            if (restrict_to_labels && base.und_label(t) == base.und_label(u))
                continue;
            pairs.insert(IndependencePair(t, u));
        }
    return with_independence(base,
                             std::vector<IndependencePair>(pairs.begin(), pairs.end()));
}

inline std::vector<Fixture> build_all() {
    std::vector<Fixture> out;
    auto add = [&](const std::string& name, const std::string& comment, Ltsi l) {
        out.push_back(Fixture{name, comment, std::move(l)});
    };

    {
        LtsiSpec s;
        s.states = {"P", "Q", "R"};
        s.transitions = {{"t", "P", "a", "R"}, {"u", "Q", "b", "R"}};
        add("ex-notPL", "two transitions merging into R, empty independence;"
            " BTI and PL fail, SP/WF/CC/UT hold",
            build_combined(s));
    }
    add("ex-notBTI",
        "commuting diamond with only the top pair independent; BTI fails at S",
        diamond({{RefSpec{"t", false}, RefSpec{"u", false}}}));
    add("ex-WFnotCC",
        "commuting diamond with empty independence; the two sides are not"
        " causally equivalent",
        diamond({}));
    {
        LtsiSpec s;
        s.states = {"P"};
        s.transitions = {{"t", "P", "a", "P"}};
        add("intro-selfloop", "forward self-loop; finite stand-in for an"
            " infinite reverse computation, WF fails",
            build_combined(s));
    }
    {
        LtsiSpec s;
        s.states = {"A", "B", "C"};
        s.transitions = {{"t1", "A", "a", "C"}, {"t2", "B", "b", "C"}};
        add("intro-ab-merge", "distinct sources merging into one state;"
            " backward choice is ambiguous",
            build_combined(s));
    }
    {
        LtsiSpec s;
        s.states = {"C", "D"};
        s.transitions = {{"t1", "D", "a", "C"}, {"t2", "D", "b", "C"}};
        add("intro-choice-merge", "one source, two labels, one target;"
            " UT and BTI fail",
            build_combined(s));
    }
    add("fig-notIRE-dashed",
        "a-ladder of two squares with tail transitions; pre-reversible,"
        " IRE and CS_i fail, CL_i holds",
        saturate_coinitial(notire_base(true)));
    {
        Ltsi base = saturate_coinitial(notire_base(false));
        std::vector<IndependencePair> pairs(base.independence().begin(),
                                            base.independence().end());
        auto t0 = base.trans_index("t0");
        auto c2 = base.trans_index("c2");
        pairs.push_back(IndependencePair(DirRef(*t0, true), DirRef(*c2, false)));
        add("fig-notIRE-nodash",
            "a-ladder without the tail plus one non-coinitial pair;"
            " pre-reversible, CL_i fails, CS_i holds",
            with_independence(base, std::move(pairs)));
    }
    add("fig-IC-CLi",
        "three-label cube missing one corner; coinitial independence,"
        " CIRE and CL_ci and CS_i fail, CL_i and IEC hold",
        saturate_coinitial(cube_minus({"s011"})));
    {
        std::map<std::string, std::string> m = {
            {"s000", "q0"}, {"s100", "q1"}, {"s010", "q2"}, {"s001", "q3"},
            {"s110", "q4"}, {"s101", "q5"}, {"s111", "q6"}};
        add("fig-IC",
            "coinitial-independence companion of fig-IC-CLi on renamed states",
            rename_states(saturate_coinitial(cube_minus({"s011"})), m));
    }
    add("fig-halfcube",
        "three-label cube missing the top corner; CL_ci holds,"
        " CS_i and CIRE fail",
        saturate_coinitial(cube_minus({"s111"})));
    add("fig-halfcube-mod",
        "half cube with extra backward-involving independence; RPI and CIRE"
        " fail, CS_i and CL_i and CL_ci hold",
        halfcube_mod());
    add("fig-repeated",
        "two same-label diamonds stacked along b rungs; PCI, BLD and NRE fail",
        saturate_coinitial(repeated_grid()));
    add("ex-CLG-CSi",
        "commuting diamond independent at all four corners; IRE fails,"
        " CLG holds",
        saturate_coinitial(diamond({{RefSpec{"t", false}, RefSpec{"u", false}}})));
    {
        LtsiSpec s;
        s.states = {"P", "Q", "R", "S"};
        s.transitions = {{"t", "P", "a", "Q"}, {"u", "R", "b", "S"}};
        s.independence = {{RefSpec{"t", false}, RefSpec{"u", false}}};
        add("ex-IRE1", "two disjoint independent transitions; IEC fails",
            build_combined(s));
    }
    {
        LtsiSpec s;
        s.states = {"P", "Q", "S"};
        s.transitions = {{"t", "P", "a", "Q"}, {"u", "Q", "b", "S"}};
        s.independence = {{RefSpec{"t", false}, RefSpec{"u", false}}};
        add("ex-IRE2", "two consecutive independent transitions; IEC fails",
            build_combined(s));
    }
    {
        LtsiSpec s;
        s.states = {"P", "Q", "R", "S"};
        s.transitions = {{"t", "P", "a", "Q"}, {"u", "R", "b", "S"}};
        for (bool d1 : {false, true})
            for (bool d2 : {false, true})
                s.independence.push_back({RefSpec{"t", d1}, RefSpec{"u", d2}});
        add("ex-LG", "disjoint transitions, independence generated from the"
            " label pair (a,b); LG holds, IEC fails",
            build_combined(s));
    }
    add("ex-LG-IEC",
        "commuting diamond with all (a,b)-labelled pairs independent;"
        " LG and IEC hold, IC fails",
        all_cross_pairs_diamond(true));
    add("ex-rotation-disambiguated",
        "diamond with four distinct labels and empty independence; CC fails"
        " while CS_i and CL_i hold",
        diamond({}, "a", "b", "a'", "b'"));
    add("ex-CSi-RPI-CLi",
        "diamond with all cross-transition pairs independent, closed under"
        " reversal; RPI and CIRE hold, ECh fails",
        all_cross_pairs_diamond(false));
    {
        LtsiSpec s;
        s.states = {"P", "Q", "R"};
        s.transitions = {{"t", "P", "a", "Q"}, {"u", "P", "b", "R"}};
        s.independence = {{RefSpec{"t", false}, RefSpec{"u", false}}};
        add("ax-no-sp", "independent coinitial pair with no completion;"
            " exactly SP fails",
            build_combined(s));
    }
    add("ax-no-pci",
        "commuting diamond independent only at the bottom backward pair;"
        " exactly PCI fails",
        diamond({{RefSpec{"tp", true}, RefSpec{"up", true}}}));
    {
        // ex-LG-IEC together with a lone a-transition: LG fails, IRE/IEC hold.
        Ltsi lgiec = all_cross_pairs_diamond(true);
        LtsiSpec extra;
        extra.states = {"T", "U"};
        extra.transitions = {{"v", "T", "a", "U"}};
        add("ex-IRE-IEC",
            "label-generated diamond joined with a lone a-transition;"
            " LG fails, IRE and IEC survive",
            disjoint_union(lgiec, build_combined(extra), true));
    }
    {
        Ltsi dashed = saturate_coinitial(notire_base(true));
        LtsiSpec extra;
        extra.states = {"T", "U", "V"};
        extra.transitions = {{"v1", "T", "a", "U"}, {"v2", "T", "b", "V"}};
        add("ex-IC-CIRE",
            "a-ladder joined with two fresh coinitial transitions; CLG fails,"
            " IC and CIRE survive",
            disjoint_union(dashed, build_combined(extra), true));
    }
    return out;
}

}  // namespace ltsi_fixtures
