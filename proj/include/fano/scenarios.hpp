#pragma once

#include "fano/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fano {

/// Outcome of one named verification of a paper claim.
struct CheckResult {
    std::string name;
    std::string status;    // "pass" | "fail" | "timeout"
    std::string expected;  // claimed values, human-readable
    std::string computed;  // measured values, same shape as expected
    std::string certificate;
    std::uint32_t prime = 0;
    std::vector<std::uint64_t> seeds;
    std::int64_t ms = 0;
};

/// Shared configuration of the verification pipeline. The subspaces must
/// satisfy: pi is a plane and tau a solid, both inside the hyperplane sigma,
/// meeting in the line l, with <tau, pi> = sigma. The degree splittings
/// additionally need them in general position with respect to the scroll: in
/// particular l (and hence pi) must not meet R^4. The classical coordinate
/// choice pi = {z01 - z10 = z11 = z00 = 0} fails this: it contains the whole
/// ruling line {z00 = z01 = z10 = z11 = 0} of the scroll, which inflates the
/// family of chords meeting pi to dimension 3. The defaults below are fixed
/// integer subspaces inside sigma = {z01 - z10 = 0}, verified generic.
struct FanoConfiguration {
    std::uint32_t prime = 32003;
    std::uint64_t master_seed = 0;
    double timeout_secs = 600.0;
    std::string method = "hilbert";  // degree route emphasis for m4-degree: hilbert | slice

    // sigma as the coefficient vector of its defining linear form,
    // pi / tau / l as integer spanning rows (reduced mod the prime in use)
    std::vector<std::int64_t> sigma_form{0, 1, 0, -1, 0, 0};
    std::vector<std::vector<std::int64_t>> pi_rows{
        {1, 1, 2, 1, 3, 5}, {1, 2, -1, 2, 1, -1}, {2, -1, 1, -1, 4, 1}};
    std::vector<std::vector<std::int64_t>> tau_rows{
        {1, 1, 2, 1, 3, 5}, {1, 2, -1, 2, 1, -1}, {1, 3, 2, 3, -1, 2}, {3, 1, -2, 1, 2, 7}};
    std::vector<std::vector<std::int64_t>> line_rows{{1, 1, 2, 1, 3, 5}, {1, 2, -1, 2, 1, -1}};
};

/// The stable check names, sorted.
const std::vector<std::string>& check_names();

/// Run a single named check. Unknown names throw std::invalid_argument.
CheckResult run_check(const std::string& name, const FanoConfiguration& cfg);

/// Run the given checks (or all when empty), ordered by name.
std::vector<CheckResult> run_checks(std::vector<std::string> names, const FanoConfiguration& cfg);

}  // namespace fano
