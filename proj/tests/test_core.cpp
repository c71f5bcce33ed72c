#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltsi/core.hpp"
#include "support/random_ltsi.hpp"

#include <algorithm>
#include <set>

using namespace ltsi;

namespace {

Ltsi diamond(std::vector<std::pair<RefSpec, RefSpec>> ind) {
    LtsiSpec s;
    s.states = {"P", "Q", "R", "S"};
    s.transitions = {{"t", "P", "a", "Q"},
                     {"u", "P", "b", "R"},
                     {"up", "Q", "b", "S"},
                     {"tp", "R", "a", "S"}};
    s.independence = std::move(ind);
    return build_combined(s);
}

DirRef ref(const Ltsi& l, const std::string& id, bool back = false) {
    return DirRef(*l.trans_index(id), back);
}

std::set<IndependencePair> pair_set(const Ltsi& l) {
    return {l.independence().begin(), l.independence().end()};
}

}  // namespace

TEST_CASE("single transition combined system") {
    LtsiSpec s;
    s.states = {"P", "Q"};
    s.transitions = {{"t", "P", "a", "Q"}};
    Ltsi l = build_combined(s);
    CHECK(l.directed_count() == 2);
    CHECK(l.irreversible().size() == 1);
    CHECK(l.state_name(l.irreversible()[0]) == "P");
}

TEST_CASE("diamond with declared independence") {
    Ltsi l = diamond({{RefSpec{"t", false}, RefSpec{"u", false}}});
    CHECK(l.directed_count() == 8);
    CHECK(l.independence().size() == 1);
    CHECK(l.independent(ref(l, "t"), ref(l, "u")));
    CHECK(l.independent(ref(l, "u"), ref(l, "t")));  // symmetric closure
    CHECK(l.irreversible().size() == 1);
    CHECK(l.state_name(l.irreversible()[0]) == "P");
}

TEST_CASE("build errors") {
    LtsiSpec s;
    s.states = {"P", "Q"};
    s.transitions = {{"t", "P", "a", "Q"}};
    s.independence = {{RefSpec{"t", false}, RefSpec{"t", false}}};
    CHECK_THROWS_AS(build_combined(s), Error);
    try {
        build_combined(s);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReflexiveIndependence);
    }

    LtsiSpec dup;
    dup.states = {"P", "Q"};
    dup.transitions = {{"t", "P", "a", "Q"}, {"t", "Q", "a", "P"}};
    CHECK_THROWS_AS(build_combined(dup), Error);

    LtsiSpec unk;
    unk.states = {"P"};
    unk.transitions = {{"t", "P", "a", "Z"}};
    CHECK_THROWS_AS(build_combined(unk), Error);

    LtsiSpec badref;
    badref.states = {"P", "Q"};
    badref.transitions = {{"t", "P", "a", "Q"}};
    badref.independence = {{RefSpec{"t", false}, RefSpec{"zz", false}}};
    CHECK_THROWS_AS(build_combined(badref), Error);
}

TEST_CASE("validate is total and flags hand-built defects") {
    CHECK(validate(diamond({})).empty());

    // Reflexive / dangling pairs can only enter through from_raw.
    std::vector<ForwardTransition> fwd{{"t", 0, 0, 1}};
    std::vector<IndependencePair> bad;
    IndependencePair p;
    p.first = DirRef(0, false);
    p.second = DirRef(0, false);
    bad.push_back(p);
    Ltsi l = Ltsi::from_raw({"P", "Q"}, {"a"}, fwd, bad);
    auto v = validate(l);
    REQUIRE(!v.empty());
    CHECK(v[0].invariant == "ReflexiveIndependence");

    std::vector<IndependencePair> dangling;
    IndependencePair d;
    d.first = DirRef(3, false);
    d.second = DirRef(4, false);
    dangling.push_back(d);
    Ltsi l2 = Ltsi::from_raw({"P", "Q"}, {"a"}, fwd, dangling);
    auto v2 = validate(l2);
    REQUIRE(!v2.empty());
    CHECK(v2[0].invariant == "DanglingIndependence");
}

TEST_CASE("saturation of the empty diamond reaches the four corners") {
    Ltsi l = saturate_coinitial(diamond({}));
    // Hand fixpoint: BTI adds the backward pair at S, propagation walks the
    // corners: (~tp,~up)@S, (tp,~u)@R, (up,~t)@Q, (t,u)@P.
    std::set<IndependencePair> expect{
        IndependencePair(ref(l, "tp", true), ref(l, "up", true)),
        IndependencePair(ref(l, "tp"), ref(l, "u", true)),
        IndependencePair(ref(l, "up"), ref(l, "t", true)),
        IndependencePair(ref(l, "t"), ref(l, "u"))};
    CHECK(pair_set(l) == expect);

    // idempotent
    Ltsi l2 = saturate_coinitial(l);
    CHECK(pair_set(l2) == expect);
}

TEST_CASE("saturation is monotone and only adds coinitial pairs") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Ltsi base = ltsi_testgen::random_ltsi(seed);
        Ltsi sat = saturate_coinitial(base);
        auto before = pair_set(base), after = pair_set(sat);
        for (const auto& p : before) CHECK(after.count(p));
        for (const auto& p : after)
            if (!before.count(p))
                CHECK(sat.source(p.first) == sat.source(p.second));
        CHECK(pair_set(saturate_coinitial(sat)) == after);
    }
}

TEST_CASE("reversal involutions") {
    Ltsi l = diamond({});
    for (DirRef r : l.all_directed()) {
        CHECK(r.rev().rev() == r);
        CHECK(l.und_label(r) == l.und_label(r.rev()));
        CHECK(l.source(r.rev()) == l.target(r));
    }
    Path p;
    p.start = *l.state_index("P");
    p.steps = {ref(l, "t"), ref(l, "up")};
    REQUIRE(p.well_formed(l));
    Path rr = p.reversed(l).reversed(l);
    CHECK(rr == p);
}

TEST_CASE("irreversible states are those without incoming forward edges") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Ltsi l = ltsi_testgen::random_ltsi(seed);
        for (StateId s = 0; s < l.state_count(); ++s) {
            bool has_backward = false;
            for (DirRef r : l.out(s))
                if (r.is_backward()) has_backward = true;
            CHECK(l.is_irreversible(s) == !has_backward);
        }
        CHECK(l.directed_count() == 2 * l.forward_count());
    }
}

TEST_CASE("disjoint union with empty system is isomorphic to the input") {
    LtsiSpec empty;
    Ltsi e = build_combined(empty);
    Ltsi l = diamond({{RefSpec{"t", false}, RefSpec{"u", false}}});
    Ltsi u = disjoint_union(l, e, true);
    CHECK(u.state_count() == l.state_count());
    CHECK(u.forward_count() == l.forward_count());
    CHECK(u.independence().size() == l.independence().size());
}

TEST_CASE("disjoint union namespacing and clash detection") {
    Ltsi l = diamond({});
    Ltsi u = disjoint_union(l, l, true);
    CHECK(u.state_count() == 8);
    CHECK(u.forward_count() == 8);
    CHECK_THROWS_AS(disjoint_union(l, l, false), Error);
}
