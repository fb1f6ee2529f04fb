// Reproducible experiments: each runs a named computation over the bundled
// corpus, checks its claim, and reports the measured values as a
// deterministic key-value record (no timing data, so reruns are
// byte-identical).
#ifndef CSC_EXPERIMENTS_HPP
#define CSC_EXPERIMENTS_HPP

#include <string>
#include <vector>

namespace csc {

struct ExperimentRecord {
    std::string name;
    std::string claim;  // one line: the fact being reproduced
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> fields;
};

std::vector<std::string> experiment_names();
ExperimentRecord run_experiment(const std::string& name);  // UnknownExperiment
std::string serialize_record(const ExperimentRecord& r);

}  // namespace csc

#endif
