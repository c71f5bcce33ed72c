#include "ltsi/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace ltsi {

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
                  c == '\'' || c == '-';
        if (!ok) return false;
    }
    return true;
}

[[noreturn]] void fail_at(size_t line, const std::string& msg) {
    throw Error(ErrorCode::FormatError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Ltsi parse_ltsi(std::istream& in) {
    LtsiSpec spec;
    std::string line;
    size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!header_seen) {
            if (word != "ltsi-v1") fail_at(lineno, "missing ltsi-v1 header");
            header_seen = true;
            std::string extra;
            if (ls >> extra) fail_at(lineno, "unexpected token after header");
            continue;
        }
        if (word == "state") {
            std::string id, extra;
            if (!(ls >> id)) fail_at(lineno, "state needs an id");
            if (!valid_id(id)) fail_at(lineno, "bad state id: " + id);
            if (ls >> extra) fail_at(lineno, "unexpected token: " + extra);
            spec.states.push_back(id);
        } else if (word == "trans") {
            std::string id, src, lab, dst, extra;
            if (!(ls >> id >> src >> lab >> dst))
                fail_at(lineno, "trans needs <tid> <src> <label> <dst>");
            for (const auto& s : {id, src, lab, dst})
                if (!valid_id(s)) fail_at(lineno, "bad id: " + s);
            if (ls >> extra) fail_at(lineno, "unexpected token: " + extra);
            spec.transitions.push_back(TransitionSpec{id, src, lab, dst});
        } else if (word == "ind") {
            std::string a, b, extra;
            if (!(ls >> a >> b)) fail_at(lineno, "ind needs two refs");
            if (ls >> extra) fail_at(lineno, "unexpected token: " + extra);
            auto parse_ref = [&](const std::string& s) -> RefSpec {
                RefSpec r;
                r.backward = !s.empty() && s[0] == '~';
                r.trans_id = r.backward ? s.substr(1) : s;
                if (!valid_id(r.trans_id)) fail_at(lineno, "bad ref: " + s);
                return r;
            };
            RefSpec ra = parse_ref(a), rb = parse_ref(b);
            if (ra.trans_id == rb.trans_id && ra.backward == rb.backward)
                throw Error(ErrorCode::ReflexiveIndependence,
                            "line " + std::to_string(lineno) +
                                ": reflexive independence pair on " + a);
            spec.independence.push_back({ra, rb});
        } else {
            fail_at(lineno, "unknown directive: " + word);
        }
    }
    if (!header_seen) fail_at(lineno ? lineno : 1, "missing ltsi-v1 header");
    try {
        return build_combined(spec);
    } catch (const Error& e) {
        throw Error(e.code(), std::string(e.what()));
    }
}

Ltsi parse_ltsi_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path);
    return parse_ltsi(in);
}

std::string emit_ltsi(const Ltsi& l) {
    std::ostringstream os;
    os << "ltsi-v1\n";
    for (StateId s = 0; s < l.state_count(); ++s)
        os << "state " << l.state_name(s) << "\n";
    for (TransId t = 0; t < l.forward_count(); ++t) {
        const auto& f = l.forward(t);
        os << "trans " << f.name << " " << l.state_name(f.source) << " "
           << l.label_name(f.label) << " " << l.state_name(f.target) << "\n";
    }
    for (const auto& p : l.independence())
        os << "ind " << l.ref_name(p.first) << " " << l.ref_name(p.second) << "\n";
    return os.str();
}

Path parse_path(const Ltsi& l, const std::string& literal,
                std::optional<StateId> start_hint) {
    std::istringstream ls(literal);
    std::string tok;
    std::vector<DirRef> steps;
    while (ls >> tok) {
        bool back = tok[0] == '~';
        std::string id = back ? tok.substr(1) : tok;
        auto ti = l.trans_index(id);
        if (!ti) throw Error(ErrorCode::UnknownTransitionRef, "unknown transition: " + id);
        steps.push_back(DirRef(*ti, back));
    }
    Path p;
    if (steps.empty()) {
        if (!start_hint)
            throw Error(ErrorCode::UsageError, "empty path literal needs a start state");
        p.start = *start_hint;
        return p;
    }
    p.start = l.source(steps[0]);
    p.steps = std::move(steps);
    if (!p.well_formed(l))
        throw Error(ErrorCode::UsageError, "path literal is not composable: " + literal);
    return p;
}

bool Report::any_fails() const {
    for (const auto& r : rows)
        if (r.verdict.fails()) return true;
    return false;
}

std::string Report::machine_text() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "RESULT\t" << r.check << "\t" << r.verdict.status_string();
        std::string extra;
        if (!r.verdict.witness.empty()) extra = r.verdict.witness;
        if (r.verdict.status == Status::Unknown && !r.verdict.provenance.empty())
            extra = r.verdict.provenance;
        if (!extra.empty()) os << "\t" << extra;
        for (const auto& n : r.verdict.notes) os << "\t" << "note:" << n;
        os << "\n";
    }
    return os.str();
}

std::string Report::human_text() const {
    size_t wc = 5, ws = 6;
    for (const auto& r : rows) {
        wc = std::max(wc, r.check.size());
        ws = std::max(ws, r.verdict.status_string().size());
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(wc) + 2) << r.check
           << std::setw(static_cast<int>(ws) + 2) << r.verdict.status_string();
        std::string extra;
        if (!r.verdict.witness.empty()) extra = r.verdict.witness;
        if (r.verdict.status == Status::Unknown && !r.verdict.provenance.empty())
            extra = r.verdict.provenance;
        os << extra;
        for (const auto& n : r.verdict.notes) os << "  [" << n << "]";
        os << "\n";
    }
    return os.str();
}

const std::vector<std::string>& report_row_names() {
    static const std::vector<std::string> names = {
        "SP",   "BTI",  "WF",   "PCI",   "PREREV", "IRE",   "CIRE",
        "BFCIRE", "IEC", "CLG",  "LG",    "IC",     "PL",    "CC",
        "UT",   "BLD",  "ID",   "NRE",   "RPI",    "CS_i",  "CL_i",
        "ECh",  "CS_ci", "CL_ci", "CS_ord", "CL_ord", "POLY"};
    return names;
}

Report run_checks(const Ltsi& input, const ReportOptions& opts) {
    Ltsi saturated;
    const Ltsi* lp = &input;
    if (opts.saturate) {
        saturated = saturate_coinitial(input);
        lp = &saturated;
    }
    const Ltsi& l = *lp;

    Analysis a(l);
    PropertyOptions popts;
    popts.bound = opts.bound;
    PathCheckOptions pathopts;
    pathopts.bound = opts.bound;
    pathopts.slack = opts.slack;

    auto want = [&](const std::string& name) {
        if (opts.only.empty()) return true;
        return std::find(opts.only.begin(), opts.only.end(), name) != opts.only.end();
    };

    auto guarded = [&](const std::function<Verdict()>& f) -> Verdict {
        try {
            return f();
        } catch (const Error& e) {
            return Verdict::unknown(std::string(error_code_name(e.code())) + ": " +
                                    e.what());
        }
    };

    Report rep;
    auto add = [&](const std::string& name, const std::function<Verdict()>& f) {
        if (!want(name)) return;
        rep.rows.push_back({name, guarded(f)});
    };

    add("SP", [&] { return a.sp; });
    add("BTI", [&] { return a.bti; });
    add("WF", [&] { return a.wf; });
    add("PCI", [&] { return a.pci; });
    add("PREREV", [&] { return is_pre_reversible(l); });
    add("IRE", [&] { return check_axiom(l, AxiomId::IRE, &a.events); });
    add("CIRE", [&] { return check_axiom(l, AxiomId::CIRE, &a.events); });
    add("BFCIRE", [&] { return check_axiom(l, AxiomId::BFCIRE, &a.events); });
    add("IEC", [&] { return check_axiom(l, AxiomId::IEC, &a.events); });
    add("CLG", [&] { return check_structural(l, AxiomId::CLG).verdict; });
    add("LG", [&] { return check_structural(l, AxiomId::LG).verdict; });
    add("IC", [&] { return check_axiom(l, AxiomId::IC); });
    add("PL", [&] { return check_PL(l, pathopts); });
    add("CC", [&] { return check_CC(l, pathopts); });
    add("UT", [&] { return check_UT(l); });
    add("BLD", [&] { return check_property(a, PropertyId::BLD); });
    add("ID", [&] { return check_property(a, PropertyId::ID); });
    add("NRE", [&] { return check_NRE(a, popts); });
    add("RPI", [&] { return check_property(a, PropertyId::RPI); });
    add("CS_i", [&] {
        return check_cs_cl(a, CsClVariant::Transition, CsClDirection::Safety, popts);
    });
    add("CL_i", [&] {
        return check_cs_cl(a, CsClVariant::Transition, CsClDirection::Liveness, popts);
    });
    add("ECh", [&] { return check_property(a, PropertyId::ECh); });
    add("CS_ci", [&] {
        return check_cs_cl(a, CsClVariant::CoinitialEvent, CsClDirection::Safety, popts);
    });
    add("CL_ci", [&] {
        return check_cs_cl(a, CsClVariant::CoinitialEvent, CsClDirection::Liveness,
                           popts);
    });
    add("CS_ord", [&] {
        return check_cs_cl(a, CsClVariant::Order, CsClDirection::Safety, popts);
    });
    add("CL_ord", [&] {
        return check_cs_cl(a, CsClVariant::Order, CsClDirection::Liveness, popts);
    });
    add("POLY", [&] {
        return check_polychotomy(l, a.sharp_events, a.relations(opts.bound),
                                 a.pre_reversible);
    });
    return rep;
}

}  // namespace ltsi
