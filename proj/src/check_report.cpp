#include "pchaos/check_report.hpp"

#include <algorithm>
#include <stdexcept>

namespace pchaos {

std::size_t CheckReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
}

const Check& CheckReport::find(const std::string& name) const {
    for (const auto& c : checks_) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no check named '" + name + "'");
}

}  // namespace pchaos
