#pragma once

#include <functional>
#include <string>

namespace resloc {

struct VerifyOptions {
    unsigned n_max = 5;       // fields on CP^2 .. CP^{n_max}
    bool with_oracle = false; // include the numeric Bochner-Martinelli checks
    unsigned seed = 20240801; // property-suite generator seed
};

struct VerifyReport {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // populated on failure (or informative notes)
};

using VerifyReporter = std::function<void(const VerifyReport&)>;

/// Runs the reproduction suite (one report per criterion) and returns true
/// iff every criterion passed.
bool run_verification(const VerifyOptions& options, const VerifyReporter& report);

}  // namespace resloc
