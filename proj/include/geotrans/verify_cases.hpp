#ifndef GEOTRANS_VERIFY_CASES_HPP
#define GEOTRANS_VERIFY_CASES_HPP

#include <string>
#include <vector>

#include "geotrans/perm_group.hpp"

namespace geotrans {

// One expected-vs-computed comparison inside a verification case.
struct CaseCheck {
    std::string label;
    std::string expected;
    std::string computed;
    bool passed = false;
};

// Outcome of one named verification case: passed is the conjunction of the
// individual checks. Every check is recorded even after a failure, so a
// failing case still shows the full expected-vs-computed table.
struct CaseResult {
    std::string id;
    std::string summary;
    std::vector<CaseCheck> checks;
    bool passed = false;
};

// registered case ids, in canonical report order
const std::vector<std::string>& verify_case_ids();

// one-line description of a registered case; NotFound for unknown ids
std::string verify_case_summary(const std::string& id);

// runs a single case; NotFound for unknown ids
CaseResult run_verify_case(const std::string& id, const Caps& caps = {});

// runs every registered case, in registry order
std::vector<CaseResult> run_all_verify_cases(const Caps& caps = {});

}  // namespace geotrans

#endif
