#include "ltsi/calculus.hpp"
#include "ltsi/io.hpp"
#include "ltsi/structural.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ltsi;

namespace {

int run_check(const std::string& file, const ReportOptions& opts) {
    Ltsi l = parse_ltsi_file(file);
    Report rep = run_checks(l, opts);
    std::cout << (opts.tsv ? rep.machine_text() : rep.human_text());
    return rep.any_fails() ? 1 : 0;
}

int run_events(const std::string& file, long bound, const std::string& mode) {
    Ltsi l = parse_ltsi_file(file);
    Analysis a(l);
    EventPartition ev;
    if (mode == "general") ev = compute_events(l, EventMode::General);
    else if (mode == "simplified") ev = compute_events(l, EventMode::Simplified, true);
    else ev = a.events;
    for (uint32_t e = 0; e < ev.event_count(); ++e) {
        std::cout << "EVENT\te" << e << "\t"
                  << (ev.is_forward_event(e) ? "fwd" : "bwd") << "\t"
                  << l.label_name(l.und_label(ev.representative(e))) << "\t";
        const auto& ms = ev.members(e);
        for (size_t i = 0; i < ms.size(); ++i)
            std::cout << (i ? " " : "") << l.ref_name(ms[i]);
        std::cout << "\n";
    }
    try {
        EventRelations rel = compute_relations(l, ev, a.pre_reversible, bound);
        for (const auto& [e1, e2] : rel.coind)
            std::cout << "COIND\te" << e1 << "\te" << e2 << "\n";
        for (size_t i = 0; i < rel.fwd_events.size(); ++i)
            for (size_t j = 0; j < rel.fwd_events.size(); ++j) {
                if (i == j) continue;
                if (rel.leq[i][j])
                    std::cout << "LEQ\te" << rel.fwd_events[i] << "\te"
                              << rel.fwd_events[j] << (rel.bounded ? "\tbounded" : "")
                              << "\n";
            }
        for (size_t i = 0; i < rel.fwd_events.size(); ++i)
            for (size_t j = i + 1; j < rel.fwd_events.size(); ++j)
                if (rel.conflict[i][j])
                    std::cout << "CONFLICT\te" << rel.fwd_events[i] << "\te"
                              << rel.fwd_events[j] << (rel.bounded ? "\tbounded" : "")
                              << "\n";
        Verdict poly = check_polychotomy(l, ev, rel, a.pre_reversible);
        std::cout << "POLY\t" << poly.status_string()
                  << (poly.witness.empty() ? "" : "\t" + poly.witness) << "\n";
    } catch (const Error& e) {
        std::cout << "RELATIONS\tUNKNOWN\t" << error_code_name(e.code()) << ": "
                  << e.what() << "\n";
    }
    return 0;
}

int run_equiv(const std::string& file, const std::string& pa, const std::string& pb,
              long slack) {
    Ltsi l = parse_ltsi_file(file);
    // An empty literal borrows its endpoint from the other path.
    std::optional<StateId> hint;
    Path a, b;
    if (pa.find_first_not_of(" \t") == std::string::npos) {
        b = parse_path(l, pb);
        a = parse_path(l, pa, b.start);
    } else {
        a = parse_path(l, pa);
        b = parse_path(l, pb, a.start);
    }
    EquivOptions eo;
    eo.slack = slack;
    EquivDecision d = causally_equivalent(l, a, b, eo);
    switch (d.outcome) {
        case EquivDecision::Yes: {
            std::cout << "EQUIV\tYES\ttrace=[";
            for (size_t i = 0; i < d.trace.size(); ++i)
                std::cout << (i ? "," : "") << d.trace[i].to_string(l);
            std::cout << "]\n";
            return 0;
        }
        case EquivDecision::No:
            std::cout << "EQUIV\tNO\tcertificate=" << d.certificate << "\n";
            return 0;
        case EquivDecision::Unknown:
            std::cout << "EQUIV\tUNKNOWN\t" << d.detail << "\n";
            return 0;
    }
    return 0;
}

int run_gen(const std::string& term_text, const std::string& out_file) {
    auto term = calc::parse_term(term_text);
    Ltsi l = calc::compile(*term);
    std::string text = emit_ltsi(l);
    if (out_file.empty() || out_file == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorCode::FormatError, "cannot write " + out_file);
        out << text;
    }
    return 0;
}

int run_map(const std::string& file, bool use_c, bool by_labels,
            const std::string& out_file) {
    Ltsi l = parse_ltsi_file(file);
    Ltsi mapped;
    if (use_c) {
        mapped = map_c(l);
    } else if (by_labels) {
        mapped = map_g_by_labels(l);
    } else {
        mapped = map_g(l, default_events(l));
    }
    std::string text = emit_ltsi(mapped);
    if (out_file.empty() || out_file == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorCode::FormatError, "cannot write " + out_file);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite reversible LTS analyzer"};
    app.require_subcommand(1);

    std::string file, term_text, out_file = "-", format = "text";
    long bound = -1, slack = 2;
    bool saturate = false, use_c = false, use_g = false, by_labels = false;
    std::vector<std::string> axioms_list, props_list;

    auto* check = app.add_subcommand("check", "run every check on a system");
    check->add_option("file", file)->required();
    check->add_option("--bound", bound, "path / instance bound");
    check->add_option("--slack", slack, "equivalence search slack");
    check->add_flag("--saturate", saturate, "saturate independence first");
    check->add_option("--axioms", axioms_list, "restrict to these axiom rows")
        ->delimiter(',');
    check->add_option("--props", props_list, "restrict to these property rows")
        ->delimiter(',');
    check->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

    std::string ev_mode = "auto";
    auto* events = app.add_subcommand("events", "show events and relations");
    events->add_option("file", file)->required();
    events->add_option("--bound", bound);
    events->add_option("--mode", ev_mode)
        ->check(CLI::IsMember({"auto", "general", "simplified"}));

    std::vector<std::string> path_literals;
    auto* equiv = app.add_subcommand("equiv", "decide causal equivalence of two paths");
    equiv->add_option("file", file)->required();
    equiv->add_option("--path", path_literals, "path literal (give twice)")
        ->expected(1, 2)
        ->required();
    equiv->add_option("--slack", slack);

    auto* gen = app.add_subcommand("gen", "compile a term to a system");
    gen->add_option("--term", term_text)->required();
    gen->add_option("-o,--out", out_file);

    auto* mapc = app.add_subcommand("map", "apply the c or g independence mapping");
    mapc->add_option("file", file)->required();
    mapc->add_flag("--c", use_c);
    mapc->add_flag("--g", use_g);
    mapc->add_flag("--by-labels", by_labels);
    mapc->add_option("-o,--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            ReportOptions opts;
            opts.bound = bound;
            opts.slack = slack;
            opts.saturate = saturate;
            opts.tsv = format == "tsv";
            opts.only = axioms_list;
            opts.only.insert(opts.only.end(), props_list.begin(), props_list.end());
            return run_check(file, opts);
        }
        if (events->parsed()) return run_events(file, bound, ev_mode);
        if (equiv->parsed()) {
            if (path_literals.size() != 2)
                throw Error(ErrorCode::UsageError, "equiv needs exactly two --path");
            return run_equiv(file, path_literals[0], path_literals[1], slack);
        }
        if (gen->parsed()) return run_gen(term_text, out_file);
        if (mapc->parsed()) {
            if (use_c == (use_g || by_labels))
                throw Error(ErrorCode::UsageError, "pick exactly one of --c / --g");
            return run_map(file, use_c, by_labels, out_file);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
