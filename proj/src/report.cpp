#include "ywall/report.hpp"

#include <algorithm>
#include <ostream>

namespace ywall {

void Report::add(std::string name, bool passed, std::string detail)
{
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks)
        checks.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Report::Check* Report::first_failure() const
{
    auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
}

void Report::print(std::ostream& out) const
{
    for (const auto& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << '\n';
    }
}

} // namespace ywall
