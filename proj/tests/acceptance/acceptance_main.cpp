// Acceptance suite: one criterion per section, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include "ltsi/calculus.hpp"
#include "ltsi/io.hpp"
#include "ltsi/structural.hpp"
#include "../support/random_ltsi.hpp"
#include "../../tools/fixture_defs.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace ltsi;

namespace {

const std::string kFixtureDir = LTSI_FIXTURE_DIR;

struct Criterion {
    std::string name;
    bool pass = true;
    std::vector<std::string> problems;
    double seconds = 0;

    void fail(const std::string& what) {
        pass = false;
        if (problems.size() < 12) problems.push_back(what);
    }
};

std::vector<Criterion> results;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::map<std::string, Ltsi> corpus() {
    std::map<std::string, Ltsi> out;
    for (auto& f : ltsi_fixtures::build_all()) out.emplace(f.name, std::move(f.system));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string row_status(const Report& rep, const std::string& check) {
    for (const auto& r : rep.rows)
        if (r.check == check) return r.verdict.status_string();
    return "(missing)";
}

bool row_holds(const Report& rep, const std::string& check) {
    std::string s = row_status(rep, check);
    return s.rfind("HOLDS", 0) == 0;
}

bool row_fails(const Report& rep, const std::string& check) {
    return row_status(rep, check) == "FAILS";
}

std::vector<RewriteStep> invert(const Ltsi& l, const Path& from,
                                const std::vector<RewriteStep>& trace) {
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

// Brute-force transition-formulation safety check, fully independent of the
// production scan: explicit path enumeration, no deduplication.
bool brute_force_cs_i(const Ltsi& l, const EventPartition& ev, long bound,
                      std::string* counterexample) {
    for (TransId ti = 0; ti < l.forward_count(); ++ti) {
        DirRef t0(ti, false);
        for (const Path& r :
             enumerate_paths(l, l.target(t0), std::nullopt, bound)) {
            if (event_count(ev, r, ev.event_of(t0)) != 0) continue;
            bool reversal = false;
            for (DirRef m : ev.members(ev.event_of(t0)))
                if (l.target(m) == r.end(l)) reversal = true;
            if (!reversal) continue;
            for (DirRef t : r.steps)
                if (event_count(ev, r, ev.event_of(t)) > 0 &&
                    !l.independent(t0.rev(), t)) {
                    if (counterexample)
                        *counterexample = "t0=" + l.forward(ti).name +
                                          " r=" + r.to_string(l) +
                                          " offending " + l.ref_name(t);
                    return false;
                }
        }
    }
    return true;
}

void criterion_fixture_table() {
    Criterion c;
    c.name = "1 fixture truth table";
    Timer timer;
    auto fixtures = corpus();

    for (const auto& [name, l] : fixtures) {
        Report rep = run_checks(l, ReportOptions{});
        std::string expect = slurp(kFixtureDir + "/expected/" + name + ".expected");
        if (rep.machine_text() != expect)
            c.fail(name + ": output differs from frozen expectation");
    }

    // Statuses pinned by the criterion text.
    using Pin = std::pair<const char*, bool>;  // row, expected-holds
    std::map<std::string, std::vector<Pin>> pins = {
        {"ex-notPL",
         {{"SP", true}, {"WF", true}, {"CC", true}, {"UT", true}, {"BTI", false},
          {"PL", false}}},
        {"ex-notBTI",
         {{"SP", true}, {"WF", true}, {"PL", true}, {"CC", true}, {"BTI", false}}},
        {"ex-WFnotCC", {{"SP", true}, {"WF", true}, {"CC", false}, {"PL", false}}},
        {"fig-notIRE-dashed",
         {{"PREREV", true}, {"IRE", false}, {"CS_i", false}, {"CL_i", true}}},
        {"fig-notIRE-nodash", {{"CL_i", false}, {"CS_i", true}}},
        {"fig-IC-CLi",
         {{"CS_ci", true}, {"CL_ci", false}, {"CS_i", false}, {"CIRE", false},
          {"CL_i", true}, {"IEC", true}}},
        {"fig-halfcube", {{"CL_ci", true}, {"CS_i", false}, {"CIRE", false}}},
        {"fig-halfcube-mod",
         {{"CIRE", false}, {"RPI", false}, {"CL_ci", true}, {"CL_i", true},
          {"CS_i", true}, {"IEC", true}}},
        {"fig-repeated", {{"PCI", false}, {"BLD", false}, {"NRE", false}}},
        {"ex-CLG-CSi",
         {{"IRE", false}, {"SP", true}, {"BTI", true}, {"WF", true}, {"PCI", true},
          {"IEC", true}}},
        {"ex-IRE1",
         {{"IEC", false}, {"SP", true}, {"BTI", true}, {"WF", true}, {"PCI", true},
          {"IRE", true}}},
        {"ex-IRE2",
         {{"IEC", false}, {"SP", true}, {"BTI", true}, {"WF", true}, {"PCI", true},
          {"IRE", true}}},
        {"ex-LG", {{"LG", true}, {"IEC", false}}},
        {"ex-LG-IEC", {{"LG", true}, {"IEC", true}, {"IC", false}}},
    };
    for (const auto& [name, rowpins] : pins) {
        Report rep = run_checks(fixtures.at(name), ReportOptions{});
        for (const auto& [row, expect_holds] : rowpins) {
            bool ok = expect_holds ? row_holds(rep, row) : row_fails(rep, row);
            if (!ok) {
                std::string msg = name + ": " + row + " is " + row_status(rep, row) +
                                  ", pinned " + (expect_holds ? "HOLDS" : "FAILS");
                if (std::string(name) == "fig-notIRE-nodash" &&
                    std::string(row) == "CS_i") {
                    // Known definitional conflict; an independent brute-force
                    // scan of the raw definition agrees with the checker.
                    std::string ce;
                    EventPartition ev =
                        compute_events(fixtures.at(name), EventMode::Simplified, true);
                    bool brute =
                        brute_force_cs_i(fixtures.at(name), ev, 6, &ce);
                    msg += brute ? " [brute-force disagrees?]"
                                 : " [expected red: raw-definition counterexample " +
                                       ce + "; see decisions ledger]";
                }
                c.fail(msg);
            }
        }
    }

    c.seconds = timer.elapsed();
    if (c.seconds > 10.0) c.fail("runtime over 10 s");
    results.push_back(c);
}

void criterion_axiom_independence() {
    Criterion c;
    c.name = "2 axiom independence suites";
    Timer timer;
    auto fixtures = corpus();

    struct SuiteRow {
        const char* fixture;
        const char* failing;
    };
    auto run_suite = [&](const char* variant, std::vector<SuiteRow> rows) {
        for (const auto& row : rows) {
            Report rep = run_checks(fixtures.at(row.fixture), ReportOptions{});
            std::vector<std::string> six = {"SP", "BTI", "WF", "PCI", variant, "IEC"};
            for (const auto& ax : six) {
                bool expect_fail = ax == row.failing;
                bool ok = expect_fail ? row_fails(rep, ax) : row_holds(rep, ax);
                if (!ok)
                    c.fail(std::string(row.fixture) + " [" + variant + " suite]: " +
                           ax + " is " + row_status(rep, ax));
            }
        }
    };
    std::vector<SuiteRow> base = {{"ax-no-sp", "SP"},       {"ex-notPL", "BTI"},
                                  {"intro-selfloop", "WF"}, {"ax-no-pci", "PCI"}};
    {
        auto rows = base;
        rows.push_back({"ex-CLG-CSi", "IRE"});
        rows.push_back({"ex-IRE1", "IEC"});
        run_suite("IRE", rows);
    }
    {
        auto rows = base;
        rows.push_back({"fig-IC-CLi", "CIRE"});
        rows.push_back({"ex-IRE1", "IEC"});
        run_suite("CIRE", rows);
    }
    {
        auto rows = base;
        rows.push_back({"fig-IC-CLi", "BFCIRE"});
        rows.push_back({"ex-IRE1", "IEC"});
        run_suite("BFCIRE", rows);
    }

    c.seconds = timer.elapsed();
    results.push_back(c);
}

void criterion_meta_theorems() {
    Criterion c;
    c.name = "3 meta-theorem property suites (500 random systems)";
    Timer timer;

    size_t count = 0;
    for (uint64_t seed = 1; count < 500; ++seed) {
        Ltsi l = ltsi_testgen::random_ltsi(seed, seed % 2 == 0);
        ++count;
        std::string tag = "seed " + std::to_string(seed) + ": ";
        Analysis an(l);

        if (an.sp.status == Status::Holds && an.bti.status == Status::Holds) {
            Verdict pl = check_PL(l);
            if (pl.status != Status::HoldsDerived) c.fail(tag + "PL not derived");
            PathCheckOptions emp;
            emp.bound = 10;
            emp.force_empirical = true;
            if (!check_PL(l, emp).holds()) c.fail(tag + "PL bounded refuted");
        }
        if (an.sp.holds() && an.wf.holds() && check_PL(l).holds()) {
            PathCheckOptions cc;
            cc.bound = 4;
            cc.slack = 1;
            cc.force_empirical = true;
            Verdict v = check_CC(l, cc);
            if (v.fails()) c.fail(tag + "CC bounded refuted");
        }
        if (an.pre_reversible) {
            PropertyOptions small;
            small.bound = 6;
            small.force_empirical = true;
            if (!check_property(an, PropertyId::BLD).holds()) c.fail(tag + "BLD");
            if (!check_property(an, PropertyId::ID).holds()) c.fail(tag + "ID");
            if (!check_NRE(an, small).holds()) c.fail(tag + "NRE");
            if (!check_cs_cl(an, CsClVariant::CoinitialEvent, CsClDirection::Safety,
                             small)
                     .holds())
                c.fail(tag + "CS_ci");
            if (!check_cs_cl(an, CsClVariant::Order, CsClDirection::Safety, small)
                     .holds())
                c.fail(tag + "CS_ord");
            if (!check_polychotomy(l, an.sharp_events, an.relations(), true).holds())
                c.fail(tag + "polychotomy");
            for (auto [e1, e2] : an.relations().coind)
                if (e1 == e2) c.fail(tag + "coinitial independence reflexive");

            bool ire = check_axiom(l, AxiomId::IRE, &an.events).holds();
            if (ire) {
                if (!check_cs_cl(an, CsClVariant::Transition, CsClDirection::Safety,
                                 small)
                         .holds())
                    c.fail(tag + "IRE but CS_i refuted");
                if (!check_cs_cl(an, CsClVariant::Transition, CsClDirection::Liveness,
                                 small)
                         .holds())
                    c.fail(tag + "IRE but CL_i refuted");
                if (!check_property(an, PropertyId::ECh).holds())
                    c.fail(tag + "IRE but ECh refuted");
            }

            bool bf = check_axiom(l, AxiomId::BFCIRE, &an.events).holds();
            bool clci = check_cs_cl(an, CsClVariant::CoinitialEvent,
                                    CsClDirection::Liveness, small)
                            .holds();
            bool clord =
                check_cs_cl(an, CsClVariant::Order, CsClDirection::Liveness, small)
                    .holds();
            if (clci != bf) c.fail(tag + "CL_ci vs BFCIRE");
            if (clord != bf) c.fail(tag + "CL_ord vs BFCIRE");

            if (check_cs_cl(an, CsClVariant::Transition, CsClDirection::Safety, small)
                    .holds() &&
                !bf)
                c.fail(tag + "CS_i without BFCIRE");
        }
        if (an.sp.holds() && an.pci.holds() &&
            check_axiom(l, AxiomId::IRE, &an.events).holds() &&
            check_axiom(l, AxiomId::IEC, &an.events).holds()) {
            if (!check_property(an, PropertyId::RPI).holds())
                c.fail(tag + "RPI not implied");
        }
    }

    c.seconds = timer.elapsed();
    if (c.seconds > 60.0) c.fail("runtime over 60 s");
    results.push_back(c);
}

void criterion_mapping_roundtrips() {
    Criterion c;
    c.name = "4 mapping round trips";
    Timer timer;

    auto pair_set = [](const Ltsi& l) {
        return std::set<IndependencePair>(l.independence().begin(),
                                          l.independence().end());
    };

    size_t coinitial_instances = 0, general_instances = 0;
    auto try_coinitial = [&](const Ltsi& l, const std::string& tag) {
        if (!is_pre_reversible(l).holds()) return;
        if (!check_axiom(l, AxiomId::IC).holds()) return;
        EventPartition ev = default_events(l);
        if (!check_axiom(l, AxiomId::CIRE, &ev).holds()) return;
        ++coinitial_instances;
        Ltsi g = map_g(l, ev);
        if (pair_set(map_c(g)) != pair_set(l)) c.fail(tag + ": c(g(i)) != i");
        for (AxiomId a : {AxiomId::IRE, AxiomId::IEC, AxiomId::SP, AxiomId::PCI})
            if (!check_axiom(g, a).holds())
                c.fail(tag + ": g(L) misses " + axiom_name(a));

        // the extension is a pre-reversible IRE instance; back again
        ++general_instances;
        EventPartition evg = default_events(g);
        if (pair_set(map_g(map_c(g), evg)) != pair_set(g))
            c.fail(tag + ": g(c(i)) != i on the extension");
    };

    for (uint64_t seed = 2000; seed < 2300; ++seed) {
        Ltsi l = saturate_coinitial(map_c(ltsi_testgen::random_ltsi(seed, false, 6, 8)));
        try_coinitial(l, "seed " + std::to_string(seed));
    }
    for (const auto& term : calc::corpus(3, 20))
        try_coinitial(calc::compile(*calc::parse_term(term)), "term " + term);

    if (coinitial_instances < 50) c.fail("too few qualifying coinitial instances");
    if (general_instances < 50) c.fail("too few qualifying general instances");

    c.seconds = timer.elapsed();
    results.push_back(c);
}

void criterion_calculus_pipeline() {
    Criterion c;
    c.name = "5 calculus pipeline";
    Timer timer;

    auto terms = calc::corpus(11, 32);
    if (terms.size() < 30) c.fail("corpus smaller than 30");
    for (const auto& term : terms) {
        Ltsi l = calc::compile(*calc::parse_term(term));
        std::string tag = "term " + term + ": ";
        if (!is_pre_reversible(l).holds()) c.fail(tag + "not pre-reversible");
        if (!check_structural(l, AxiomId::CLG).verdict.holds())
            c.fail(tag + "not coinitially label-generated");

        Analysis an(l);
        PropertyOptions small;
        small.bound = 4;
        small.force_empirical = true;
        bool cs_der = check_cs_cl(an, CsClVariant::CoinitialEvent,
                                  CsClDirection::Safety)
                          .status == Status::HoldsDerived;
        bool cl_der = check_cs_cl(an, CsClVariant::CoinitialEvent,
                                  CsClDirection::Liveness)
                          .status == Status::HoldsDerived;
        bool cs_emp = check_cs_cl(an, CsClVariant::CoinitialEvent,
                                  CsClDirection::Safety, small)
                          .holds();
        bool cl_emp = check_cs_cl(an, CsClVariant::CoinitialEvent,
                                  CsClDirection::Liveness, small)
                          .holds();
        if (!cs_der || cs_der != cs_emp) c.fail(tag + "CS_ci routes disagree");
        if (!cl_der || cl_der != cl_emp) c.fail(tag + "CL_ci routes disagree");
    }

    const char* cubes[] = {"a.0", "a.0|b.0", "a.0|b.0|c.0", "a.0|b.0|c.0|d.0"};
    for (size_t k = 1; k <= 4; ++k) {
        Ltsi l = calc::compile(*calc::parse_term(cubes[k - 1]));
        if (l.state_count() != (1u << k))
            c.fail("hypercube k=" + std::to_string(k) + " state count");
        if (l.forward_count() != k * (1u << (k - 1)))
            c.fail("hypercube k=" + std::to_string(k) + " transition count");
    }

    c.seconds = timer.elapsed();
    if (c.seconds > 30.0) c.fail("runtime over 30 s");
    results.push_back(c);
}

void criterion_equivalence_engine() {
    Criterion c;
    c.name = "6 equivalence engine soundness";
    Timer timer;
    auto fixtures = corpus();

    auto label_sig = [](const Ltsi& l, const Path& p) {
        std::vector<long> sig(l.label_count(), 0);
        for (DirRef r : p.steps) sig[l.und_label(r)] += r.is_backward() ? -1 : 1;
        return sig;
    };

    size_t yes_pairs = 0, no_pairs = 0;
    for (const auto& [name, l] : fixtures) {
        if (!is_pre_reversible(l).holds()) continue;
        EventPartition simp = compute_events(l, EventMode::Simplified, true);

        for (StateId s = 0; s < l.state_count(); ++s) {
            auto paths = enumerate_paths(l, s, std::nullopt, 8);
            std::map<StateId, std::vector<const Path*>> groups;
            for (const Path& p : paths) groups[p.end(l)].push_back(&p);
            for (auto& [end, g] : groups) {
                // reduce every member to the canonical first member; yes for
                // all of them gives yes pairwise by transitivity
                for (size_t i = 1; i < g.size(); ++i) {
                    const Path& a = *g[0];
                    const Path& b = *g[i];
                    // fast route: equal parabolic reductions compose a trace
                    ParabolicResult pa = parabolic_normal_form(l, a);
                    ParabolicResult pb = parabolic_normal_form(l, b);
                    std::vector<RewriteStep> trace;
                    bool decided_yes = false;
                    if (!pa.stuck && !pb.stuck && pa.normal_form == pb.normal_form) {
                        trace = pa.trace;
                        auto inv = invert(l, b, pb.trace);
                        trace.insert(trace.end(), inv.begin(), inv.end());
                        decided_yes = true;
                    } else {
                        EquivDecision d = causally_equivalent(l, a, b);
                        if (d.no()) {
                            ++no_pairs;
                            c.fail(name + ": coinitial-cofinal pair decided no: " +
                                   a.to_string(l) + " | " + b.to_string(l));
                            continue;
                        }
                        if (d.outcome != EquivDecision::Yes) {
                            c.fail(name + ": undecided pair at slack 2: " +
                                   a.to_string(l) + " | " + b.to_string(l));
                            continue;
                        }
                        trace = d.trace;
                        decided_yes = true;
                    }
                    if (decided_yes) {
                        ++yes_pairs;
                        Path replayed = a;
                        bool ok = true;
                        try {
                            for (const auto& st : trace)
                                replayed = apply_step(l, replayed, st);
                        } catch (const Error&) {
                            ok = false;
                        }
                        if (!ok || !(replayed == b))
                            c.fail(name + ": trace does not replay for " +
                                   a.to_string(l) + " | " + b.to_string(l));
                        if (sharp_signature(simp, a) != sharp_signature(simp, b))
                            c.fail(name + ": sharp signature differs on a yes pair");
                    }
                }
            }
        }
    }
    if (yes_pairs < 1000) c.fail("too few decided pairs exercised");

    // no-certificates re-verify on the non-pre-reversible fixtures
    for (const char* name : {"ex-WFnotCC", "intro-choice-merge", "ex-notPL"}) {
        const Ltsi& l = fixtures.at(name);
        EventPartition simp = compute_events(l, EventMode::Simplified, true);
        for (StateId s = 0; s < l.state_count(); ++s) {
            auto paths = enumerate_paths(l, s, std::nullopt, 4);
            for (size_t i = 0; i < paths.size(); ++i)
                for (size_t j = i + 1; j < paths.size(); ++j) {
                    EquivDecision d = causally_equivalent(l, paths[i], paths[j]);
                    if (!d.no()) continue;
                    ++no_pairs;
                    bool genuine = false;
                    if (d.certificate == "endpoints")
                        genuine = paths[i].start != paths[j].start ||
                                  paths[i].end(l) != paths[j].end(l);
                    else if (d.certificate == "label-counts")
                        genuine = label_sig(l, paths[i]) != label_sig(l, paths[j]);
                    else if (d.certificate == "sharp-signature")
                        genuine = sharp_signature(simp, paths[i]) !=
                                  sharp_signature(simp, paths[j]);
                    if (!genuine)
                        c.fail(std::string(name) + ": certificate does not re-verify");
                }
        }
    }
    if (no_pairs < 10) c.fail("too few certified-no pairs exercised");

    c.seconds = timer.elapsed();
    results.push_back(c);
}

}  // namespace

int main() {
    criterion_fixture_table();
    criterion_axiom_independence();
    criterion_meta_theorems();
    criterion_mapping_roundtrips();
    criterion_calculus_pipeline();
    criterion_equivalence_engine();

    bool all = true;
    for (const auto& c : results) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  ("
             << c.seconds << " s)";
        std::cout << line.str() << "\n";
        for (const auto& p : c.problems) std::cout << "      - " << p << "\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
