#ifndef PCHAOS_CHECK_REPORT_HPP
#define PCHAOS_CHECK_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pchaos {

struct Check {
    std::string name;
    bool pass = false;
    /// Witness on success, counterexample on failure.
    std::string witness;
};

/// Ordered list of named pass/fail checks about one instance. Failures are
/// recorded, never thrown.
class CheckReport {
public:
    explicit CheckReport(std::string instance) : instance_(std::move(instance)) {}

    void add(std::string name, bool pass, std::string witness = {}) {
        checks_.push_back({std::move(name), pass, std::move(witness)});
    }
    void append(const CheckReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::string& instance() const { return instance_; }
    const std::vector<Check>& checks() const { return checks_; }
    std::size_t total() const { return checks_.size(); }
    std::size_t passed() const;
    std::size_t failed() const { return total() - passed(); }
    bool all_passed() const { return failed() == 0; }
    /// First check with the given name; throws std::out_of_range if absent.
    const Check& find(const std::string& name) const;

private:
    std::string instance_;
    std::vector<Check> checks_;
};

}  // namespace pchaos

#endif
