#ifndef GOLOMB_SUITES_HPP
#define GOLOMB_SUITES_HPP

#include <string>
#include <vector>

namespace golomb {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

/// Suite names: closure, dirichlet, sequences, obstructions, battery, all.
std::vector<std::string> suite_names();

/// Runs the named acceptance suite; every criterion carries its verdict and
/// a one-line summary. Unknown names throw ConfigError.
std::vector<CriterionResult> run_suite(const std::string& name);

}  // namespace golomb

#endif
