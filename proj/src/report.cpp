#include "kraw/report.hpp"

#include <utility>

namespace kraw {

CheckReport pass_report(std::string check) {
    return CheckReport{std::move(check), true, {}};
}

CheckReport fail_report(std::string check,
                        std::vector<std::pair<std::string, std::string>> witness) {
    return CheckReport{std::move(check), false, std::move(witness)};
}

} // namespace kraw
