#ifndef SLSPEC_ACCEPTANCE_HPP
#define SLSPEC_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace slspec::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full acceptance suite, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

} // namespace slspec::acceptance

#endif
