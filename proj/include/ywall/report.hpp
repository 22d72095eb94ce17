#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ywall {

/// Outcome of a verification suite: an ordered list of named checks.
struct Report {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {});
    void merge(const Report& other, const std::string& prefix = {});
    bool passed() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    void print(std::ostream& out) const;
};

} // namespace ywall
