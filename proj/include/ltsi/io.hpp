#pragma once

#include "ltsi/core.hpp"
#include "ltsi/properties.hpp"

#include <iosfwd>

namespace ltsi {

/// "ltsi-v1" line-oriented format:
///   ltsi-v1
///   state <id>
///   trans <tid> <src> <label> <dst>
///   ind <ref> <ref>          (ref is <tid> or ~<tid>)
/// with '#' comments. Errors carry line numbers.
Ltsi parse_ltsi(std::istream& in);
Ltsi parse_ltsi_file(const std::string& path);

/// Canonically sorted emission; parse(emit(l)) == l.
std::string emit_ltsi(const Ltsi& l);

/// Path literal: whitespace-separated refs, "~id" for reverse. An empty
/// literal is the empty path; its start must be supplied.
Path parse_path(const Ltsi& l, const std::string& literal,
                std::optional<StateId> start_hint = std::nullopt);

struct ReportOptions {
    long bound = -1;
    long slack = 2;
    bool saturate = false;
    std::vector<std::string> only;  // empty: every row
    bool tsv = false;
};

struct ReportRow {
    std::string check;
    Verdict verdict;
};

struct Report {
    std::vector<ReportRow> rows;
    bool any_fails() const;
    std::string machine_text() const;  // RESULT lines, one per row
    std::string human_text() const;    // aligned table
};

/// Every check in the standard row order:
/// SP BTI WF PCI PREREV IRE CIRE BFCIRE IEC CLG LG IC
/// PL CC UT BLD ID NRE RPI CS_i CL_i ECh CS_ci CL_ci CS_ord CL_ord POLY
Report run_checks(const Ltsi& l, const ReportOptions& opts = {});

const std::vector<std::string>& report_row_names();

}  // namespace ltsi
