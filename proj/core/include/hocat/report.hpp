#pragma once

#include <string>
#include <vector>

namespace hocat {

struct CheckIssue {
    std::string law;     // name of the violated law
    std::string detail;  // offending data, human-readable
};

// Result of a validation pass.  Empty issue list means everything checked
// out; `checked` counts the instances that were actually examined.
struct CheckReport {
    std::string subject;
    long checked = 0;
    long skipped = 0;    // instances skipped (e.g. beyond an arity cap)
    std::vector<CheckIssue> issues;

    bool ok() const { return issues.empty(); }
    void fail(std::string law, std::string detail) {
        issues.push_back({std::move(law), std::move(detail)});
    }
    void merge(const CheckReport& r) {
        checked += r.checked;
        skipped += r.skipped;
        issues.insert(issues.end(), r.issues.begin(), r.issues.end());
    }
    std::string summary() const;
};

} // namespace hocat
