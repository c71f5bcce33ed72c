#include "ltsi/calculus.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

namespace ltsi {
namespace calc {

std::string Term::to_string() const {
    switch (kind) {
        case Nil: return "0";
        case Prefix: {
            const Term& c = *children[0];
            if (c.kind == Sum || c.kind == Par) return action + ".(" + c.to_string() + ")";
            return action + "." + c.to_string();
        }
        case Sum: {
            std::string s;
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) s += "+";
                const Term& c = *children[i];
                s += c.kind == Par ? "(" + c.to_string() + ")" : c.to_string();
            }
            return s;
        }
        case Par: {
            std::string s;
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) s += "|";
                s += children[i]->to_string();
            }
            return s;
        }
    }
    return "0";
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorCode::SyntaxError,
                    what + " at position " + std::to_string(pos));
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    TermPtr parse_par() {
        auto t = parse_sum();
        while (eat('|')) {
            auto rhs = parse_sum();
            auto p = std::make_shared<Term>();
            p->kind = Term::Par;
            p->children = {t, rhs};
            t = p;
        }
        return t;
    }

    TermPtr parse_sum() {
        auto t = parse_pre();
        while (eat('+')) {
            auto rhs = parse_pre();
            auto p = std::make_shared<Term>();
            p->kind = Term::Sum;
            p->children = {t, rhs};
            t = p;
        }
        return t;
    }

    TermPtr parse_pre() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of term");
        char c = text[pos];
        if (c == '0') {
            ++pos;
            auto t = std::make_shared<Term>();
            t->kind = Term::Nil;
            return t;
        }
        if (c == '(') {
            ++pos;
            auto t = parse_par();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() &&
                   (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string action = text.substr(start, pos - start);
            if (!eat('.')) fail("expected '.' after action " + action);
            auto t = std::make_shared<Term>();
            t->kind = Term::Prefix;
            t->action = action;
            t->children = {parse_pre()};
            return t;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

/// A prefix occurrence with its spine bookkeeping.
struct Occurrence {
    std::string action;
    int parent = -1;                 // enclosing prefix occurrence, -1 at top
    std::vector<int> par_path;       // ids of parallel nodes left/right: 2*node+side
    std::vector<std::pair<int, int>> choice_spine;  // (sum node id, side taken)
};

struct Flattened {
    std::vector<Occurrence> prefixes;
    // per sum node: prefix occurrences in each side
    std::vector<std::array<std::vector<int>, 2>> sums;
    int par_nodes = 0;
};

void flatten(const Term& t, int parent, std::vector<int>& par_path,
             std::vector<std::pair<int, int>>& choice_spine, Flattened& out) {
    switch (t.kind) {
        case Term::Nil: return;
        case Term::Prefix: {
            Occurrence occ;
            occ.action = t.action;
            occ.parent = parent;
            occ.par_path = par_path;
            occ.choice_spine = choice_spine;
            out.prefixes.push_back(occ);
            int id = static_cast<int>(out.prefixes.size()) - 1;
            for (auto& [sum, side] : choice_spine) out.sums[sum][side].push_back(id);
            flatten(*t.children[0], id, par_path, choice_spine, out);
            return;
        }
        case Term::Sum: {
            out.sums.push_back({});
            int sid = static_cast<int>(out.sums.size()) - 1;
            for (int side = 0; side < 2; ++side) {
                choice_spine.push_back({sid, side});
                flatten(*t.children[side], parent, par_path, choice_spine, out);
                choice_spine.pop_back();
            }
            return;
        }
        case Term::Par: {
            int pid = out.par_nodes++;
            for (int side = 0; side < 2; ++side) {
                par_path.push_back(2 * pid + side);
                flatten(*t.children[side], parent, par_path, choice_spine, out);
                par_path.pop_back();
            }
            return;
        }
    }
}

bool diverge_at_par(const Occurrence& a, const Occurrence& b) {
    size_t n = std::min(a.par_path.size(), b.par_path.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.par_path[i] / 2 != b.par_path[i] / 2) return false;  // different nesting
        if (a.par_path[i] != b.par_path[i]) return true;           // opposite sides
    }
    return false;
}

}  // namespace

TermPtr parse_term(const std::string& text) {
    Parser p(text);
    auto t = p.parse_par();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

Ltsi compile(const Term& t, const CompileOptions& opts) {
    Flattened flat;
    std::vector<int> par_path;
    std::vector<std::pair<int, int>> choice_spine;
    flatten(t, -1, par_path, choice_spine, flat);

    size_t np = flat.prefixes.size();
    if (np > opts.max_prefixes || np > 60)
        throw Error(ErrorCode::AlphabetTooLarge,
                    "term has " + std::to_string(np) + " prefixes");

    auto enabled = [&](uint64_t mask, size_t p) -> bool {
        if (mask >> p & 1) return false;
        const Occurrence& occ = flat.prefixes[p];
        if (occ.parent >= 0 && !(mask >> occ.parent & 1)) return false;
        for (auto& [sum, side] : occ.choice_spine)
            for (int other : flat.sums[sum][1 - side])
                if (mask >> other & 1) return false;
        return true;
    };

    // Reachable masks, breadth-first from the unexecuted term.
    std::map<uint64_t, uint32_t> number;
    std::deque<uint64_t> queue{0};
    number.emplace(0, 0);
    std::vector<uint64_t> masks{0};
    std::vector<std::pair<uint64_t, size_t>> edges;  // (mask, prefix)
    while (!queue.empty()) {
        uint64_t m = queue.front();
        queue.pop_front();
        for (size_t p = 0; p < np; ++p) {
            if (!enabled(m, p)) continue;
            uint64_t m2 = m | (1ull << p);
            edges.push_back({m, p});
            if (!number.count(m2)) {
                if (masks.size() >= opts.max_states)
                    throw Error(ErrorCode::StateBudgetExceeded,
                                "state budget exceeded at " +
                                    std::to_string(masks.size()));
                number.emplace(m2, static_cast<uint32_t>(masks.size()));
                masks.push_back(m2);
                queue.push_back(m2);
            }
        }
    }

    auto state_name = [&](uint64_t m) {
        std::ostringstream os;
        os << "n" << std::hex << m;
        return os.str();
    };
    int width = 1;
    for (size_t v = edges.size(); v >= 10; v /= 10) ++width;

    LtsiSpec spec;
    for (uint64_t m : masks) spec.states.push_back(state_name(m));
    std::sort(edges.begin(), edges.end());
    std::map<std::pair<uint64_t, size_t>, std::string> edge_id;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [m, p] = edges[i];
        std::ostringstream id;
        id << "t";
        std::string num = std::to_string(i);
        id << std::string(width - static_cast<int>(num.size()) > 0
                              ? width - num.size()
                              : 0,
                          '0')
           << num;
        edge_id[edges[i]] = id.str();
        spec.transitions.push_back(TransitionSpec{
            id.str(), state_name(m),
            flat.prefixes[p].action + "." + std::to_string(p),
            state_name(m | (1ull << p))});
    }

    // Coinitial label-generated independence: occurrences on opposite sides
    // of a parallel composition. Directed transitions at a state are the
    // enabled firings plus the undoings of removable occurrences.
    auto add_ind = [&](const std::string& ida, bool ba, const std::string& idb,
                       bool bb) {
        spec.independence.push_back({RefSpec{ida, ba}, RefSpec{idb, bb}});
    };
    for (uint64_t m : masks) {
        struct Local {
            size_t prefix;
            std::string id;
            bool backward;
        };
        std::vector<Local> at;
        for (size_t p = 0; p < np; ++p) {
            if (enabled(m, p)) at.push_back({p, edge_id.at({m, p}), false});
            if (m >> p & 1) {
                uint64_t prev = m & ~(1ull << p);
                auto it = edge_id.find({prev, p});
                if (it != edge_id.end()) at.push_back({p, it->second, true});
            }
        }
        for (size_t i = 0; i < at.size(); ++i)
            for (size_t j = i + 1; j < at.size(); ++j)
                if (diverge_at_par(flat.prefixes[at[i].prefix],
                                   flat.prefixes[at[j].prefix]))
                    add_ind(at[i].id, at[i].backward, at[j].id, at[j].backward);
    }

    return build_combined(spec);
}

std::vector<std::string> corpus(uint64_t seed, size_t n) {
    if (n < 1) throw Error(ErrorCode::UsageError, "corpus size must be >= 1");
    static const std::vector<std::string> fixed = {
        "a.0|b.0",
        "a.b.0",
        "a.0+b.0",
        "a.(b.0+c.0)|d.0",
        "(a.0|b.0)|c.0",
        "a.b.0|c.0",
        "a.0|a.0",
        "a.b.0+c.d.0",
    };
    std::vector<std::string> out;
    for (size_t i = 0; i < n && i < fixed.size(); ++i) out.push_back(fixed[i]);

    // splitmix64 for platform-independent determinism
    uint64_t x = seed;
    auto next = [&x]() {
        x += 0x9e3779b97f4a7c15ull;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };

    const char* actions[] = {"a", "b", "c", "d", "e"};
    while (out.size() < n) {
        // <= 3 parallel components, <= 6 prefixes total
        size_t comps = 1 + next() % 3;
        size_t budget = 2 + next() % 5;  // prefixes
        std::vector<std::string> parts;
        for (size_t c = 0; c < comps && budget > 0; ++c) {
            size_t len = 1 + next() % std::min<size_t>(budget, 3);
            budget -= len;
            bool sum = len >= 2 && next() % 2 == 0;
            std::string part;
            if (sum) {
                std::string lhs = std::string(actions[next() % 5]) + ".0";
                std::string rhs = std::string(actions[next() % 5]) + ".0";
                for (size_t k = 2; k < len; ++k)
                    lhs = std::string(actions[next() % 5]) + "." + lhs;
                part = lhs + "+" + rhs;
            } else {
                part = "0";
                for (size_t k = 0; k < len; ++k)
                    part = std::string(actions[next() % 5]) + "." + part;
            }
            parts.push_back(part);
        }
        std::string term;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) term += "|";
            bool needs_paren = parts[i].find('+') != std::string::npos;
            term += needs_paren && parts.size() > 1 ? "(" + parts[i] + ")" : parts[i];
        }
        out.push_back(term);
    }
    return out;
}

}  // namespace calc
}  // namespace ltsi
