#pragma once

#include <string>
#include <vector>

namespace nearsymp {

/// How a clause was established.
enum class ClauseKind {
    Checked,   // computed and compared in this run
    Assumed,   // taken from an external theorem, not recomputed
    Recorded,  // bookkeeping fact or input assertion, carried along verbatim
};

struct Clause {
    std::string id;         // stable machine-readable anchor
    std::string statement;  // human-readable form of the condition
    ClauseKind kind = ClauseKind::Checked;
    bool pass = true;
    std::string lhs;  // both sides are filled for equations
    std::string rhs;
    std::string note;

    bool operator==(const Clause&) const = default;
};

inline const char* to_string(ClauseKind k) {
    switch (k) {
        case ClauseKind::Checked: return "checked";
        case ClauseKind::Assumed: return "assumed";
        case ClauseKind::Recorded: return "recorded";
    }
    return "checked";
}

inline bool all_pass(const std::vector<Clause>& clauses) {
    for (const auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

}  // namespace nearsymp
