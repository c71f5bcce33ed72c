#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltsi {

using StateId = uint32_t;
using LabelId = uint32_t;
using TransId = uint32_t;  // index into the forward transition table

enum class ErrorCode {
    DuplicateId,
    UnknownState,
    ReflexiveIndependence,
    UnknownTransitionRef,
    StateClash,
    ModeUnsound,
    NoRoot,
    NonUniqueRoot,
    PreconditionSP,
    PreconditionFailed,
    EventsRequired,
    OrderUnavailable,
    ReflexivityBreach,
    FormatError,
    SyntaxError,
    AlphabetTooLarge,
    StateBudgetExceeded,
    UsageError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode c);

/// A directed transition of the combined system: a forward transition taken
/// either forwards or in reverse. Encoded as (forward index << 1) | backward.
struct DirRef {
    uint32_t code = 0;

    DirRef() = default;
    DirRef(TransId fwd_index, bool backward)
        : code((fwd_index << 1) | (backward ? 1u : 0u)) {}

    TransId fwd_index() const { return code >> 1; }
    bool is_backward() const { return (code & 1u) != 0; }
    bool is_forward() const { return (code & 1u) == 0; }
    DirRef rev() const {
        DirRef r;
        r.code = code ^ 1u;
        return r;
    }

    friend bool operator==(DirRef a, DirRef b) { return a.code == b.code; }
    friend bool operator!=(DirRef a, DirRef b) { return a.code != b.code; }
    friend bool operator<(DirRef a, DirRef b) { return a.code < b.code; }
    friend bool operator>(DirRef a, DirRef b) { return a.code > b.code; }
};

/// Signed label: an action label together with a direction.
struct SignedLabel {
    LabelId label = 0;
    bool backward = false;

    friend bool operator==(SignedLabel a, SignedLabel b) {
        return a.label == b.label && a.backward == b.backward;
    }
    friend bool operator<(SignedLabel a, SignedLabel b) {
        if (a.label != b.label) return a.label < b.label;
        return a.backward < b.backward;
    }
};

struct ForwardTransition {
    std::string name;
    StateId source = 0;
    LabelId label = 0;
    StateId target = 0;
};

struct IndependencePair {
    DirRef first;
    DirRef second;  // canonical: first < second

    IndependencePair() = default;
    IndependencePair(DirRef a, DirRef b) {
        if (b < a) std::swap(a, b);
        first = a;
        second = b;
    }
    friend bool operator==(IndependencePair a, IndependencePair b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(IndependencePair a, IndependencePair b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

/// A finite combined LTSI: forward transitions plus their synthesized
/// reverses, and a symmetric irreflexive independence relation over
/// directed transitions. Immutable after construction.
class Ltsi {
  public:
    Ltsi() = default;

    // Raw constructor; no validation. Use build_combined for checked builds,
    // validate() to audit hand-assembled values.
    static Ltsi from_raw(std::vector<std::string> state_names,
                         std::vector<std::string> label_names,
                         std::vector<ForwardTransition> forward,
                         std::vector<IndependencePair> independence);

    size_t state_count() const { return state_names_.size(); }
    size_t label_count() const { return label_names_.size(); }
    size_t forward_count() const { return forward_.size(); }
    size_t directed_count() const { return forward_.size() * 2; }

    const std::string& state_name(StateId s) const { return state_names_[s]; }
    const std::string& label_name(LabelId l) const { return label_names_[l]; }
    const ForwardTransition& forward(TransId t) const { return forward_[t]; }

    std::optional<StateId> state_index(const std::string& name) const;
    std::optional<LabelId> label_index(const std::string& name) const;
    std::optional<TransId> trans_index(const std::string& name) const;

    StateId source(DirRef r) const {
        const auto& f = forward_[r.fwd_index()];
        return r.is_backward() ? f.target : f.source;
    }
    StateId target(DirRef r) const {
        const auto& f = forward_[r.fwd_index()];
        return r.is_backward() ? f.source : f.target;
    }
    SignedLabel signed_label(DirRef r) const {
        return SignedLabel{forward_[r.fwd_index()].label, r.is_backward()};
    }
    LabelId und_label(DirRef r) const { return forward_[r.fwd_index()].label; }

    /// Human-readable ref: "id" or "~id".
    std::string ref_name(DirRef r) const;

    /// All directed transitions leaving `s`, in canonical (id, direction) order.
    const std::vector<DirRef>& out(StateId s) const { return out_[s]; }

    /// Forward transitions entering `s` (their forward refs).
    const std::vector<DirRef>& in_forward(StateId s) const { return in_fwd_[s]; }

    bool independent(DirRef a, DirRef b) const;
    const std::vector<IndependencePair>& independence() const { return ind_; }

    /// Irreversible states: no backward transition (no incoming forward one).
    const std::vector<StateId>& irreversible() const { return irr_; }
    bool is_irreversible(StateId s) const { return in_fwd_[s].empty(); }

    /// All directed transitions in canonical order.
    std::vector<DirRef> all_directed() const;

  private:
    void reindex();

    std::vector<std::string> state_names_;   // sorted
    std::vector<std::string> label_names_;   // sorted
    std::vector<ForwardTransition> forward_; // sorted by name
    std::vector<IndependencePair> ind_;      // canonical, sorted, symmetric-closed
    std::vector<std::vector<DirRef>> out_;
    std::vector<std::vector<DirRef>> in_fwd_;
    std::vector<StateId> irr_;
};

/// A composable sequence of directed transitions.
struct Path {
    StateId start = 0;
    std::vector<DirRef> steps;

    size_t length() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    StateId end(const Ltsi& l) const {
        return steps.empty() ? start : l.target(steps.back());
    }
    bool well_formed(const Ltsi& l) const;
    Path reversed(const Ltsi& l) const;
    bool forward_only() const;
    bool backward_only() const;
    /// "t1 ~t2 t3", "(empty@P)" for the empty path.
    std::string to_string(const Ltsi& l) const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.start == b.start && a.steps == b.steps;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.steps < b.steps;
    }
};

enum class Status { Holds, HoldsDerived, HoldsBounded, Fails, Unknown };

const char* status_name(Status s);

/// Result of a check. A failing verdict always carries a witness that
/// re-checks as a genuine violation of the raw definition.
struct Verdict {
    Status status = Status::Unknown;
    long bound = -1;        // for HoldsBounded
    std::string chain;      // for HoldsDerived: which results produced it
    std::string provenance; // which procedure decided it
    std::string witness;    // formatted witness payload
    std::vector<DirRef> wit_trans;
    std::vector<Path> wit_paths;
    std::vector<std::string> notes;

    bool holds() const {
        return status == Status::Holds || status == Status::HoldsDerived ||
               status == Status::HoldsBounded;
    }
    bool fails() const { return status == Status::Fails; }

    /// "HOLDS", "HOLDS-DERIVED(SP^BTI)", "HOLDS-BOUNDED(10)", "FAILS", "UNKNOWN".
    std::string status_string() const;

    static Verdict yes(std::string prov = {}) {
        Verdict v;
        v.status = Status::Holds;
        v.provenance = std::move(prov);
        return v;
    }
    static Verdict derived(std::string chain, std::string prov = {}) {
        Verdict v;
        v.status = Status::HoldsDerived;
        v.chain = std::move(chain);
        v.provenance = std::move(prov);
        return v;
    }
    static Verdict bounded(long bound, std::string prov = {}) {
        Verdict v;
        v.status = Status::HoldsBounded;
        v.bound = bound;
        v.provenance = std::move(prov);
        return v;
    }
    static Verdict no(std::string witness, std::string prov = {}) {
        Verdict v;
        v.status = Status::Fails;
        v.witness = std::move(witness);
        v.provenance = std::move(prov);
        return v;
    }
    static Verdict unknown(std::string why) {
        Verdict v;
        v.status = Status::Unknown;
        v.provenance = std::move(why);
        return v;
    }
};

}  // namespace ltsi
