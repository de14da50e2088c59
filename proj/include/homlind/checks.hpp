#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlind {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured residual or failure explanation
};

// Seeded randomized sweep over the library's structural invariants:
// exponential-sum algebra, convolution bilinearity and symmetry, hierarchy
// initial conditions, channel reconstruction, lifted-system structure and
// agreement with quadrature, embedding shift covariance, CPTP certificates
// with realization agreement, readout identities, exponential group
// property, metric properties, and byte-level output determinism.
std::vector<CheckResult> run_invariant_suite(unsigned long seed);

// Prints one PASS/FAIL line per check; returns the number of failures.
int report_checks(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace homlind
