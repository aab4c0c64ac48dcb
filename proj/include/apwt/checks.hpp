#pragma once

/// Self-verification suite: every library-level guarantee that the
/// documentation promises, runnable as `quick` (sub-minute smoke set) or
/// `full` (the complete acceptance battery).  Each check returns a one-line
/// verdict with its measured numbers so failures are diagnosable from logs.

#include <string>
#include <vector>

namespace apwt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct CheckOptions {
    /// Verification hook: scales the family norm inside the Plancherel sum.
    /// Anything != 1 must make the plancherel-ratio check fail; exercised by
    /// the selfcheck negative-control test.
    double tamper_family_norm = 1.0;
};

/// Fast subset: Fourier unitarity, boost algebra, sector masks, propagator
/// algebra, ellipse eigensystem.
std::vector<CheckResult> run_quick_checks(const CheckOptions& options = {});

/// The nine headline guarantees in documentation order, nothing else.  The
/// acceptance binary prints exactly these.
std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options = {});

/// The full battery: acceptance checks plus the quick smoke set.  Several
/// entries run minutes-scale transforms.
std::vector<CheckResult> run_full_checks(const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace apwt
