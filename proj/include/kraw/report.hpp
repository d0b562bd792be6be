#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kraw {

// Outcome of an exact identity check.  On failure, `counterexample` holds
// ordered key/value pairs locating the first offending position and the two
// disagreeing values, rendered as decimal text.
struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> counterexample;
};

CheckReport pass_report(std::string check);
CheckReport fail_report(std::string check,
                        std::vector<std::pair<std::string, std::string>> witness);

} // namespace kraw
